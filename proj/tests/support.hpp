#pragma once

// Random generators and brute-force oracles shared by the test suites.
// The oracles avoid the library's shortcuts (Horner, Newton, the group-law
// formula) so they can check it.

#include <cstddef>
#include <random>
#include <vector>

#include "riordan/constructions.hpp"
#include "riordan/matrix.hpp"
#include "riordan/rational.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"

namespace riordan::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long span = 5, long max_den = 3) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng)) / Rational(den(rng));
}

inline Rational random_nonzero(Rng& rng, long span = 5, long max_den = 3) {
    for (;;) {
        Rational r = random_rational(rng, span, max_den);
        if (!r.is_zero()) {
            return r;
        }
    }
}

inline TruncSeries random_series(Rng& rng, std::size_t order, long max_den = 3) {
    std::vector<Rational> c(order);
    for (auto& x : c) {
        x = random_rational(rng, 5, max_den);
    }
    return TruncSeries(std::move(c));
}

inline TruncSeries random_integer_series(Rng& rng, std::size_t order) { return random_series(rng, order, 1); }

// Zero constant term, nonzero linear term.
inline TruncSeries random_f(Rng& rng, std::size_t order, long max_den = 3) {
    std::vector<Rational> c(order);
    c[1] = random_nonzero(rng, 3, max_den);
    for (std::size_t i = 2; i < order; ++i) {
        c[i] = random_rational(rng, 3, max_den);
    }
    return TruncSeries(std::move(c));
}

inline TruncSeries random_g(Rng& rng, std::size_t order, long max_den = 3) {
    std::vector<Rational> c(order);
    c[0] = random_nonzero(rng, 3, max_den);
    for (std::size_t i = 1; i < order; ++i) {
        c[i] = random_rational(rng, 3, max_den);
    }
    return TruncSeries(std::move(c));
}

// g with g_0 = 1 and g_1 != 0, the input domain of pseudo_from_g.
inline TruncSeries random_bi_invertible(Rng& rng, std::size_t order, long max_den = 2) {
    std::vector<Rational> c(order);
    c[0] = 1;
    c[1] = random_nonzero(rng, 3, max_den);
    for (std::size_t i = 2; i < order; ++i) {
        c[i] = random_rational(rng, 2, max_den);
    }
    return TruncSeries(std::move(c));
}

inline RiordanPair random_proper_pair(Rng& rng, std::size_t order, long max_den = 3) {
    return {random_g(rng, order, max_den), random_f(rng, order, max_den)};
}

inline RiordanPair random_pseudo_involution(Rng& rng, std::size_t order) {
    return pseudo_from_g(random_bi_invertible(rng, order));
}

// sum_i outer_i * inner^i with explicit powers.
inline TruncSeries naive_compose(const TruncSeries& outer, const TruncSeries& inner) {
    const std::size_t n = std::min(outer.order(), inner.order());
    std::vector<Rational> acc(n);
    TruncSeries p = TruncSeries::constant(1, n);
    const TruncSeries in = inner.truncated(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            acc[j] += outer[i] * p[j];
        }
        p = p * in;
    }
    return TruncSeries(std::move(acc));
}

// Row-by-column product of two triangles of equal size.
inline TriMatrix naive_product(const TriMatrix& a, const TriMatrix& b) {
    std::vector<std::vector<Rational>> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        out[n].resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t j = k; j <= n; ++j) {
                out[n][k] += a.entry(n, j) * b.entry(j, k);
            }
        }
    }
    return TriMatrix(std::move(out));
}

// (sum_k l(n, k) h_k)_n
inline std::vector<Rational> naive_matvec(const TriMatrix& l, const TruncSeries& h) {
    std::vector<Rational> out(l.size());
    for (std::size_t n = 0; n < l.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            out[n] += l.entry(n, k) * h[k];
        }
    }
    return out;
}

// Column k of the triangle read straight from g * f^k.
inline TriMatrix naive_expand(const RiordanPair& p, std::size_t rows) {
    std::vector<std::vector<Rational>> out(rows);
    for (std::size_t n = 0; n < rows; ++n) {
        out[n].resize(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            out[n][k] = (p.g() * power(p.f(), k))[n];
        }
    }
    return TriMatrix(std::move(out));
}

inline TruncSeries series_of(std::initializer_list<long> c) { return TruncSeries(std::vector<Rational>(c.begin(), c.end())); }

inline std::vector<Rational> ints(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

inline std::vector<Rational> prefix(const TruncSeries& s, std::size_t n) {
    return {s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(n)};
}

} // namespace riordan::testing
