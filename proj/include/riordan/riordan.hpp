#pragma once

/**
 * Riordan pairs (g, f) and the Riordan group.
 *
 * Column k of the array has generating function g * f^k. A pair is proper
 * (a group element) when f has a nonzero linear coefficient; pairs with
 * f_1 = 0 are vertically stretched arrays and only support expansion and
 * the matrix-vector action.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace riordan {

class RiordanPair {
public:
    RiordanPair(TruncSeries g, TruncSeries f) : g_(std::move(g)), f_(std::move(f)) {
        if (g_[0].is_zero()) {
            throw invariant_error("g must have a nonzero constant term");
        }
        if (!f_[0].is_zero()) {
            throw invariant_error("f must have zero constant term, got " + f_[0].to_string());
        }
    }

    static RiordanPair identity(std::size_t order) {
        return {TruncSeries::constant(1, order), TruncSeries::variable(order)};
    }

    const TruncSeries& g() const noexcept { return g_; }
    const TruncSeries& f() const noexcept { return f_; }

    bool proper() const { return f_.order() > 1 && !f_[1].is_zero(); }
    bool stretched() const { return !proper(); }
    bool f_zero() const { return f_.is_zero(); }

    std::size_t order() const noexcept { return std::min(g_.order(), f_.order()); }

    friend bool operator==(const RiordanPair&, const RiordanPair&) = default;

private:
    TruncSeries g_;
    TruncSeries f_;
};

// Both components agree on their common prefix.
inline bool agree(const RiordanPair& a, const RiordanPair& b) { return agree(a.g(), b.g()) && agree(a.f(), b.f()); }

namespace detail {

inline void require_proper(const RiordanPair& p, std::string_view what) {
    if (!p.proper()) {
        throw propriety_error(std::string(what) + " requires a proper Riordan pair (f_1 != 0)");
    }
}

// s(-z)
inline TruncSeries alternate(const TruncSeries& s) {
    std::vector<Rational> c(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t i = 1; i < c.size(); i += 2) {
        c[i] = -c[i];
    }
    return TruncSeries(std::move(c));
}

// Index of the first coefficient below `order` where a and b differ.
inline std::optional<std::size_t> first_difference(const TruncSeries& a, const TruncSeries& b, std::size_t order) {
    for (std::size_t i = 0; i < order; ++i) {
        if (a[i] != b[i]) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace detail

// Entry (n, k) = [z^n] g f^k for 0 <= k <= n < rows.
inline TriMatrix expand(const RiordanPair& pair, std::size_t rows) {
    if (rows > pair.order()) {
        throw order_error("cannot expand " + std::to_string(rows) + " rows from series of order " +
                          std::to_string(pair.order()));
    }
    std::vector<std::vector<Rational>> out(rows);
    for (std::size_t n = 0; n < rows; ++n) {
        out[n].resize(n + 1);
    }
    if (rows == 0) {
        return TriMatrix(std::move(out));
    }
    const TruncSeries f = pair.f().truncated(rows);
    TruncSeries column = pair.g().truncated(rows);
    for (std::size_t k = 0; k < rows; ++k) {
        for (std::size_t n = k; n < rows; ++n) {
            out[n][k] = column[n];
        }
        if (k + 1 < rows) {
            column = column * f;
        }
    }
    return TriMatrix(std::move(out));
}

// (g, f) * (h, l) = (g h(f), l(f))
inline RiordanPair rmul(const RiordanPair& lhs, const RiordanPair& rhs) {
    detail::require_proper(lhs, "multiplication");
    detail::require_proper(rhs, "multiplication");
    return {lhs.g() * compose(rhs.g(), lhs.f()), compose(rhs.f(), lhs.f())};
}

// (g, f)^-1 = (1 / g(fbar), fbar)
inline RiordanPair rinv(const RiordanPair& pair) {
    detail::require_proper(pair, "inversion");
    TruncSeries fbar = reverse(pair.f());
    TruncSeries g = divide(TruncSeries::constant(1, fbar.order()), compose(pair.g(), fbar));
    return {std::move(g), std::move(fbar)};
}

// Matrix-vector action: L (x) h = g h(f).
inline TruncSeries apply(const RiordanPair& pair, const TruncSeries& h) {
    return pair.g() * compose(h, pair.f());
}

// M L M with M = (1, -z): the pair (g(-z), -f(-z)).
inline RiordanPair mam_conjugate(const RiordanPair& pair) {
    return {detail::alternate(pair.g()), -detail::alternate(pair.f())};
}

/**
 * Outcome of an (pseudo-)involution test carried out modulo z^order.
 *
 * `first_failure` is the lowest coefficient index at which one of the two
 * defining identities breaks; `condition` names that identity.
 */
struct InvolutionCheck {
    bool holds = false;
    std::size_t order = 0;
    std::optional<std::size_t> first_failure;
    std::string condition;

    explicit operator bool() const noexcept { return holds; }
};

namespace detail {

// Checks g * g(F) = 1 and F(F) = z, the involution criterion for (g, F).
inline InvolutionCheck involution_identities(const TruncSeries& g, const TruncSeries& F, std::size_t order,
                                             std::string_view g_label, std::string_view f_label) {
    InvolutionCheck r;
    const TruncSeries gg = g * compose(g, F);
    const TruncSeries ff = compose(F, F);
    r.order = std::min({order, gg.order(), ff.order()});
    const auto bad_g = first_difference(gg, TruncSeries::constant(1, gg.order()), r.order);
    const auto bad_f = first_difference(ff, TruncSeries::variable(ff.order()), r.order);
    if (bad_g && (!bad_f || *bad_g <= *bad_f)) {
        r.first_failure = bad_g;
        r.condition = std::string(g_label);
    } else if (bad_f) {
        r.first_failure = bad_f;
        r.condition = std::string(f_label);
    }
    r.holds = !r.first_failure;
    return r;
}

} // namespace detail

inline InvolutionCheck check_involution(const RiordanPair& pair, std::size_t order) {
    return detail::involution_identities(pair.g(), pair.f(), order, "g(z) g(F(z)) = 1", "F(F(z)) = z");
}

// (g, f) is a pseudo-involution iff (g, -f) is an involution.
inline InvolutionCheck check_pseudo_involution(const RiordanPair& pair, std::size_t order) {
    return detail::involution_identities(pair.g(), -pair.f(), order, "g(z) g(-f(z)) = 1", "-f(-f(z)) = z");
}

inline bool is_involution(const RiordanPair& pair, std::size_t order) { return check_involution(pair, order).holds; }

inline bool is_pseudo_involution(const RiordanPair& pair, std::size_t order) {
    return check_pseudo_involution(pair, order).holds;
}

enum class Subgroup { appell, bell, associated, derivative, hitting_time };

inline std::string_view to_string(Subgroup kind) {
    switch (kind) {
    case Subgroup::appell: return "appell";
    case Subgroup::bell: return "bell";
    case Subgroup::associated: return "associated";
    case Subgroup::derivative: return "derivative";
    case Subgroup::hitting_time: return "hitting_time";
    }
    return "?";
}

/**
 * Canonical element of a classical subgroup.
 *
 *   appell        (g, z)          seed is g
 *   bell          (f/z, f)        seed is f
 *   associated    (1, f)
 *   derivative    (f', f)
 *   hitting_time  (z f'/f, f)
 */
inline RiordanPair subgroup_elt(Subgroup kind, const TruncSeries& seed) {
    if (kind == Subgroup::appell) {
        if (seed[0].is_zero()) {
            throw propriety_error("Appell seed g must have a nonzero constant term");
        }
        return {seed, TruncSeries::variable(seed.order())};
    }
    if (seed.order() < 2 || !seed[0].is_zero() || seed[1].is_zero()) {
        throw propriety_error(std::string(to_string(kind)) + " seed f needs f_0 = 0 and f_1 != 0");
    }
    const TruncSeries z = TruncSeries::variable(seed.order());
    switch (kind) {
    case Subgroup::bell:
        return {divide(seed, z), seed};
    case Subgroup::associated:
        return {TruncSeries::constant(1, seed.order()), seed};
    case Subgroup::derivative:
        return {derivative(seed), seed};
    case Subgroup::hitting_time:
        // z f'/f = f' / (f/z); avoids the pole of f'/f at zero.
        return {divide(derivative(seed), divide(seed, z)), seed};
    case Subgroup::appell:
        break;
    }
    throw error("unreachable subgroup kind");
}

} // namespace riordan
