#pragma once

/**
 * Truncated formal power series over the rationals.
 *
 * A TruncSeries holds exactly `order()` coefficients and represents a series
 * known modulo z^order. Binary operations on operands of different orders
 * produce a result of the smaller order; nothing is ever padded.
 */

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace riordan {

class TruncSeries {
public:
    explicit TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw order_error("a truncated series needs at least one coefficient");
        }
    }

    TruncSeries(std::initializer_list<Rational> coeffs) : TruncSeries(std::vector<Rational>(coeffs)) {}

    static TruncSeries zero(std::size_t order) { return TruncSeries(std::vector<Rational>(checked(order))); }

    static TruncSeries constant(const Rational& c, std::size_t order) {
        std::vector<Rational> v(checked(order));
        v[0] = c;
        return TruncSeries(std::move(v));
    }

    // c * z^power, truncated to `order`.
    static TruncSeries monomial(const Rational& c, std::size_t power, std::size_t order) {
        std::vector<Rational> v(checked(order));
        if (power < order) {
            v[power] = c;
        }
        return TruncSeries(std::move(v));
    }

    static TruncSeries variable(std::size_t order) { return monomial(1, 1, order); }

    std::size_t order() const noexcept { return coeffs_.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    // Index of the first nonzero coefficient; order() when all retained ones vanish.
    std::size_t valuation() const {
        const auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
        return static_cast<std::size_t>(it - coeffs_.begin());
    }

    bool is_zero() const { return valuation() == order(); }

    TruncSeries truncated(std::size_t order) const {
        if (order == 0 || order > this->order()) {
            throw order_error("cannot truncate series of order " + std::to_string(this->order()) + " to order " +
                              std::to_string(order));
        }
        return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
    }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
        os << '[';
        for (std::size_t i = 0; i < s.order(); ++i) {
            os << (i ? ", " : "") << s[i];
        }
        return os << "] + O(z^" << s.order() << ')';
    }

private:
    static std::size_t checked(std::size_t order) {
        if (order == 0) {
            throw order_error("series order must be positive");
        }
        return order;
    }

    std::vector<Rational> coeffs_;
};

// True when a and b agree on their common prefix.
inline bool agree(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    return std::equal(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(n), b.coeffs().begin());
}

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[i] + b[i];
    }
    return TruncSeries(std::move(out));
}

inline TruncSeries operator-(const TruncSeries& a) {
    std::vector<Rational> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        out[i] = -a[i];
    }
    return TruncSeries(std::move(out));
}

inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[i] - b[i];
    }
    return TruncSeries(std::move(out));
}

inline TruncSeries operator*(const Rational& c, const TruncSeries& a) {
    std::vector<Rational> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        out[i] = c * a[i];
    }
    return TruncSeries(std::move(out));
}

// Cauchy product truncated to the smaller order.
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!b[j].is_zero()) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return TruncSeries(std::move(out));
}

/**
 * Quotient a / b.
 *
 * A common factor z^v, v = valuation(b), is cancelled first, so the result
 * has order min(a.order, b.order) - v. This is what makes f(z)/z legal.
 */
inline TruncSeries divide(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t v = b.valuation();
    if (v == b.order()) {
        throw division_by_zero_series("division by a series that vanishes to order " + std::to_string(b.order()));
    }
    if (a.valuation() < v) {
        throw valuation_error("dividend valuation " + std::to_string(a.valuation()) +
                              " is below divisor valuation " + std::to_string(v));
    }
    const std::size_t base = std::min(a.order(), b.order());
    if (base <= v) {
        throw valuation_error("no coefficients survive cancelling z^" + std::to_string(v));
    }
    const std::size_t n = base - v;
    const Rational lead = b[v];
    std::vector<Rational> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = a[i + v];
        for (std::size_t j = 1; j <= i; ++j) {
            if (!b[j + v].is_zero()) {
                acc -= b[j + v] * q[i - j];
            }
        }
        q[i] = acc / lead;
    }
    return TruncSeries(std::move(q));
}

inline TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return divide(a, b); }

// s^n by repeated squaring; s^0 is 1 at s's order.
inline TruncSeries power(const TruncSeries& s, unsigned long n) {
    TruncSeries result = TruncSeries::constant(1, s.order());
    TruncSeries base = s;
    while (n > 0) {
        if (n & 1UL) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

// outer(inner(z)) by Horner's rule. inner must have zero constant term.
inline TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner) {
    if (!inner[0].is_zero()) {
        throw composition_error("inner series has nonzero constant term " + inner[0].to_string());
    }
    const std::size_t n = std::min(outer.order(), inner.order());
    TruncSeries acc = TruncSeries::constant(outer[n - 1], n);
    const TruncSeries in = inner.truncated(n);
    for (std::size_t i = n - 1; i-- > 0;) {
        acc = acc * in;
        std::vector<Rational> c(acc.coeffs().begin(), acc.coeffs().end());
        c[0] += outer[i];
        acc = TruncSeries(std::move(c));
    }
    return acc;
}

// Termwise derivative; the order drops by one.
inline TruncSeries derivative(const TruncSeries& s) {
    if (s.order() < 2) {
        throw order_error("derivative of an order-1 series has no known coefficients");
    }
    std::vector<Rational> out(s.order() - 1);
    for (std::size_t i = 1; i < s.order(); ++i) {
        out[i - 1] = Rational(static_cast<long>(i)) * s[i];
    }
    return TruncSeries(std::move(out));
}

/**
 * Compositional inverse by Newton iteration.
 *
 * Solves f(y) = z for y with y(0) = 0, doubling the number of correct
 * coefficients each step:  y <- y - (f(y) - z) / f'(y).
 * The result satisfies compose(f, y) = z and compose(y, f) = z to f's order.
 */
inline TruncSeries reverse(const TruncSeries& f) {
    if (f.order() < 2) {
        throw reversion_error("reversion needs at least the linear coefficient");
    }
    if (!f[0].is_zero()) {
        throw reversion_error("series to revert has nonzero constant term " + f[0].to_string());
    }
    if (f[1].is_zero()) {
        throw reversion_error("series to revert has zero linear coefficient");
    }
    const std::size_t n = f.order();
    const TruncSeries df = derivative(f);

    std::size_t prec = 2;
    TruncSeries y = TruncSeries::monomial(Rational(1) / f[1], 1, prec);
    while (prec < n) {
        prec = std::min(2 * prec, n);
        std::vector<Rational> grown(prec);
        std::copy(y.coeffs().begin(), y.coeffs().end(), grown.begin());
        y = TruncSeries(std::move(grown));

        const TruncSeries residual = compose(f.truncated(prec), y) - TruncSeries::variable(prec);
        // At full precision f' is one coefficient short. The residual has
        // positive valuation, so that slot never reaches the first prec terms.
        std::vector<Rational> dpad(prec);
        std::copy(df.coeffs().begin(), df.coeffs().begin() + static_cast<std::ptrdiff_t>(std::min(prec, df.order())),
                  dpad.begin());
        const TruncSeries slope = compose(TruncSeries(std::move(dpad)), y);
        y = y - divide(residual, slope);
    }
    return y;
}

/**
 * Square root with positive constant term.
 *
 * The constant term must be a nonzero square of a rational; the remaining
 * coefficients follow from r^2 = s one term at a time.
 */
inline TruncSeries sqrt(const TruncSeries& s) {
    if (s[0].is_zero()) {
        throw sqrt_error("square root needs a nonzero constant term");
    }
    const auto root = s[0].sqrt();
    if (!root) {
        throw sqrt_error("constant term " + s[0].to_string() + " is not the square of a rational");
    }
    const std::size_t n = s.order();
    const Rational two_r0 = Rational(2) * *root;
    std::vector<Rational> r(n);
    r[0] = *root;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = s[k];
        for (std::size_t i = 1; i < k; ++i) {
            acc -= r[i] * r[k - i];
        }
        r[k] = acc / two_r0;
    }
    return TruncSeries(std::move(r));
}

} // namespace riordan
