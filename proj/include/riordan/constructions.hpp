#pragma once

/**
 * Building stochastic arrays and pseudo-involutions.
 *
 *  - stochastic_from_g: (g, 1 - g + z g), whose row sums are all one.
 *  - pseudo_from_g:     the unique f with (g, f) a pseudo-involution, for
 *                       g_0 = 1, g_1 != 0:  f = -Gbar(-G / g),  G = g - 1.
 *  - power_pseudo:      (g^n, f) from a pseudo-involution (g, f).
 *  - family_from_f:     the four canonical pseudo-involutions sharing an f
 *                       for which -f has compositional order 2.
 */

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "expr.hpp"
#include "rational.hpp"
#include "riordan.hpp"
#include "series.hpp"

namespace riordan {

// (1/(1-z-z^2))^n
inline TruncSeries convolved_fib(unsigned long n, std::size_t order) {
    return power(named_series("fib", order), n);
}

// Row sums of the result are all 1. Since f_0 = 1 - g_0, this needs g_0 = 1.
inline RiordanPair stochastic_from_g(const TruncSeries& g) {
    const TruncSeries one = TruncSeries::constant(1, g.order());
    const TruncSeries z = TruncSeries::variable(g.order());
    return {g, one - g + z * g};
}

inline RiordanPair pseudo_from_g(const TruncSeries& g) {
    if (g[0] != Rational(1)) {
        throw precondition_error("pseudo-involution from g needs g_0 = 1, got " + g[0].to_string());
    }
    if (g.order() < 2 || g[1].is_zero()) {
        throw precondition_error("pseudo-involution from g needs g_1 != 0");
    }
    const TruncSeries G = g - TruncSeries::constant(1, g.order());
    const TruncSeries G_bar = reverse(G);
    const TruncSeries inner = -divide(G, g);
    return {g, -compose(G_bar, inner)};
}

inline RiordanPair power_pseudo(const RiordanPair& pair, unsigned long n) {
    const InvolutionCheck chk = check_pseudo_involution(pair, pair.order());
    if (!chk) {
        throw precondition_error("pair is not a pseudo-involution (" + chk.condition + " fails at z^" +
                                 std::to_string(*chk.first_failure) + ")");
    }
    return {power(pair.g(), n), pair.f()};
}

// -f(-f(z)) = z through the order of f.
inline bool has_order_two_negation(const TruncSeries& f) {
    const TruncSeries F = -f;
    const TruncSeries ff = compose(F, F);
    return agree(ff, TruncSeries::variable(ff.order())) && !F[1].is_zero();
}

// (1, f), (f/z, f), (f', f), (z f'/f, f), in that order.
inline std::array<RiordanPair, 4> family_from_f(const TruncSeries& f) {
    if (f.order() < 2 || !f[0].is_zero() || !has_order_two_negation(f)) {
        throw order_two_error("-f does not have compositional order 2 to order " + std::to_string(f.order()));
    }
    return {subgroup_elt(Subgroup::associated, f), subgroup_elt(Subgroup::bell, f),
            subgroup_elt(Subgroup::derivative, f), subgroup_elt(Subgroup::hitting_time, f)};
}

enum class GroupOp { mul, inv };

// The g's making (g, f) a pseudo-involution form a group under multiplication.
inline RiordanPair g_group_ops(const TruncSeries& g1, const TruncSeries& g2, const TruncSeries& f, GroupOp op) {
    auto require = [&](const TruncSeries& g, const char* label) {
        const RiordanPair p(g, f);
        if (!is_pseudo_involution(p, p.order())) {
            throw precondition_error(std::string("(") + label + ", f) is not a pseudo-involution");
        }
    };
    require(g1, "g1");
    if (op == GroupOp::inv) {
        return {divide(TruncSeries::constant(1, g1.order()), g1), f};
    }
    require(g2, "g2");
    return {g1 * g2, f};
}

} // namespace riordan
