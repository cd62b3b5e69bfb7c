#pragma once

/**
 * Production matrices and A/Z sequences.
 *
 * For a proper pair L = (g, f) the A-sequence and Z-sequence satisfy
 *
 *   l(n+1, k+1) = sum_j a_j l(n, k+j),     l(n+1, 0) = sum_j z_j l(n, j).
 *
 * They are extracted twice: from the generating-function identities
 *
 *   A(z) = z / fbar(z),     Z(z) = (1 - g_0 / g(fbar(z))) / fbar(z),
 *
 * and from the production matrix P = L^-1 * (L without its first row),
 * whose column 0 is Z and column 1 is A. extract_az() insists they agree.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "riordan.hpp"
#include "series.hpp"

namespace riordan {

enum class AzMethod { production_matrix, series_formula };

struct SeqReport {
    std::vector<Rational> a_seq;
    std::vector<Rational> z_seq;
    std::size_t terms = 0;
    AzMethod method = AzMethod::series_formula;
};

// Raised when the two extraction routes disagree; indicates a library bug.
class az_mismatch : public error { public: using error::error; };

// rows x rows block of L^-1 * (L with row 0 removed).
inline Matrix production_matrix(const RiordanPair& pair, std::size_t rows) {
    detail::require_proper(pair, "production matrix");
    if (rows + 1 > pair.order()) {
        throw order_error("production matrix with " + std::to_string(rows) + " rows needs series order " +
                          std::to_string(rows + 1));
    }
    const TriMatrix lower = expand(pair, rows + 1);
    const TriMatrix inverse = expand(rinv(pair), rows);

    Matrix shifted(rows, rows);
    for (std::size_t n = 0; n < rows; ++n) {
        for (std::size_t k = 0; k < rows; ++k) {
            shifted(n, k) = lower.entry(n + 1, k);
        }
    }
    return to_dense(inverse) * shifted;
}

namespace detail {

inline std::vector<Rational> prefix(const TruncSeries& s, std::size_t terms) {
    if (terms > s.order()) {
        throw order_error("requested " + std::to_string(terms) + " terms but only " + std::to_string(s.order()) +
                          " are determined; raise the series order");
    }
    return {s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(terms)};
}

inline void require_nondegenerate(const SeqReport& r) {
    if (!r.z_seq.empty() && r.z_seq.front().is_zero()) {
        throw degenerate_z("Z-sequence has z_0 = 0; the pair has no A/Z characterisation with z_0 != 0");
    }
}

} // namespace detail

// A-sequence alone: A(z) = z / fbar(z). Depends only on f, and is defined
// even when the Z-sequence degenerates.
inline std::vector<Rational> a_sequence(const RiordanPair& pair, std::size_t terms) {
    detail::require_proper(pair, "A-sequence extraction");
    const TruncSeries fbar = reverse(pair.f());
    return detail::prefix(divide(TruncSeries::variable(fbar.order()), fbar), terms);
}

inline SeqReport extract_az_series(const RiordanPair& pair, std::size_t terms) {
    detail::require_proper(pair, "A/Z extraction");
    const TruncSeries fbar = reverse(pair.f());
    const std::size_t n = fbar.order();
    const TruncSeries z = TruncSeries::variable(n);
    const TruncSeries a = divide(z, fbar);
    const TruncSeries one = TruncSeries::constant(1, n);
    const TruncSeries g_of_fbar = compose(pair.g(), fbar);
    const TruncSeries zs = divide(one - divide(TruncSeries::constant(pair.g()[0], n), g_of_fbar), fbar);

    SeqReport r{detail::prefix(a, terms), detail::prefix(zs, terms), terms, AzMethod::series_formula};
    detail::require_nondegenerate(r);
    return r;
}

inline SeqReport extract_az_production(const RiordanPair& pair, std::size_t terms) {
    const Matrix p = production_matrix(pair, std::max<std::size_t>(terms, 2));
    SeqReport r;
    r.terms = terms;
    r.method = AzMethod::production_matrix;
    r.z_seq = p.column(0);
    r.a_seq = p.column(1);
    r.z_seq.resize(terms);
    r.a_seq.resize(terms);
    detail::require_nondegenerate(r);
    return r;
}

// Series route, cross-checked against the production matrix.
inline SeqReport extract_az(const RiordanPair& pair, std::size_t terms) {
    SeqReport primary = extract_az_series(pair, terms);
    const SeqReport check = extract_az_production(pair, terms);
    for (std::size_t i = 0; i < terms; ++i) {
        if (primary.a_seq[i] != check.a_seq[i] || primary.z_seq[i] != check.z_seq[i]) {
            throw az_mismatch("A/Z extraction routes disagree at term " + std::to_string(i));
        }
    }
    return primary;
}

/**
 * Replays the A- and Z-recurrences over expand(pair, rows).
 *
 * Only entries whose defining sum is fully covered by the truncated
 * sequences are checked: (n+1, k+1) needs a_0..a_{n-k}, (n+1, 0) needs
 * z_0..z_n. Everything else is skipped.
 */
inline bool recurrence_check(const RiordanPair& pair, const SeqReport& report, std::size_t rows) {
    const TriMatrix l = expand(pair, rows);
    for (std::size_t n = 0; n + 1 < rows; ++n) {
        if (n < report.z_seq.size()) {
            Rational s;
            for (std::size_t j = 0; j <= n; ++j) {
                s += report.z_seq[j] * l.entry(n, j);
            }
            if (s != l.entry(n + 1, 0)) {
                return false;
            }
        }
        for (std::size_t k = 0; k <= n; ++k) {
            if (n - k >= report.a_seq.size()) {
                continue;
            }
            Rational s;
            for (std::size_t j = 0; k + j <= n; ++j) {
                s += report.a_seq[j] * l.entry(n, k + j);
            }
            if (s != l.entry(n + 1, k + 1)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace riordan
