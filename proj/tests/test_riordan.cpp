#include <gtest/gtest.h>

#include "riordan/expr.hpp"
#include "riordan/riordan.hpp"
#include "support.hpp"

using namespace riordan;
using namespace riordan::testing;

namespace {

constexpr std::size_t N = 16;

RiordanPair pair(const char* g, const char* f, std::size_t order = N) {
    return {eval_series(g, order), eval_series(f, order)};
}

RiordanPair pascal(std::size_t order = N) { return pair("1/(1-z)", "z/(1-z)", order); }

RiordanPair lucas_pi(std::size_t order = N) { return pair("lucas", "lucasf", order); }

} // namespace

TEST(RiordanPair, Invariants) {
    EXPECT_THROW(RiordanPair(TruncSeries::zero(4), TruncSeries::variable(4)), invariant_error);
    EXPECT_THROW(RiordanPair(TruncSeries::constant(1, 4), TruncSeries::constant(1, 4)), invariant_error);
    const RiordanPair stretched = pair("1", "z^2");
    EXPECT_FALSE(stretched.proper());
    EXPECT_TRUE(pascal().proper());
    EXPECT_TRUE(pair("1", "0").f_zero());
}

TEST(Expand, Examples) {
    EXPECT_EQ(expand(pascal(), 5).row(4), ints({1, 4, 6, 4, 1}));
    EXPECT_EQ(expand(lucas_pi(), 5).row(4), ints({7, 214, 88, 16, 1}));
    const TriMatrix id = expand(RiordanPair::identity(N), 6);
    for (std::size_t n = 0; n < 6; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            EXPECT_EQ(id.entry(n, k), Rational(n == k ? 1 : 0));
        }
    }
    EXPECT_EQ(id.entry(1, 3), Rational(0));
    EXPECT_THROW(expand(pascal(4), 5), order_error);
}

TEST(Expand, StretchedArraysExpand) {
    const TriMatrix t = expand(pair("1", "z^2"), 5);
    EXPECT_EQ(t.row(4), ints({0, 0, 1, 0, 0}));
}

TEST(Rmul, Examples) {
    const RiordanPair p = pascal();
    EXPECT_EQ(rmul(p, RiordanPair::identity(N)), p);
    EXPECT_EQ(rmul(p, p), pair("1/(1-2*z)", "z/(1-2*z)"));
    const TriMatrix p8 = expand(p, 8);
    EXPECT_EQ(expand(rmul(p, p), 8), naive_product(p8, p8));

    const RiordanPair m{TruncSeries::constant(1, N), -TruncSeries::variable(N)};
    const RiordanPair lm = rmul(lucas_pi(), m);
    EXPECT_EQ(rmul(lm, lm), RiordanPair::identity(N));
    EXPECT_THROW(rmul(p, pair("1", "z^2")), propriety_error);
}

TEST(Rinv, Examples) {
    EXPECT_EQ(expand(rinv(pascal()), 4).row(3), ints({-1, 3, -3, 1}));
    EXPECT_EQ(rinv(RiordanPair::identity(N)), RiordanPair::identity(N));
    EXPECT_THROW(rinv(pair("1", "z^2")), propriety_error);
}

TEST(Apply, Examples) {
    const TruncSeries geo = eval_series("1/(1-z)", N);
    EXPECT_EQ(apply(pascal(), geo), eval_series("1/(1-2*z)", N));
    const RiordanPair l = lucas_pi();
    EXPECT_EQ(apply(l, TruncSeries::constant(1, N)), l.g());
    const RiordanPair stochastic = pair("lucas", "1-lucas+z*lucas");
    EXPECT_EQ(apply(stochastic, geo), geo);
}

TEST(Involution, Examples) {
    const RiordanPair m{TruncSeries::constant(1, N), -TruncSeries::variable(N)};
    EXPECT_TRUE(is_involution(m, N));
    EXPECT_FALSE(is_involution(pascal(), N));
    const TruncSeries f = eval_series("fibf", N);
    EXPECT_TRUE(is_involution(RiordanPair(TruncSeries::constant(1, N), -f), N));
}

TEST(PseudoInvolution, Examples) {
    EXPECT_TRUE(is_pseudo_involution(pascal(), N));
    EXPECT_TRUE(is_pseudo_involution(lucas_pi(), N));

    const InvolutionCheck bad = check_pseudo_involution(pair("1/(1-z)", "z"), N);
    EXPECT_FALSE(bad);
    ASSERT_TRUE(bad.first_failure);
    EXPECT_EQ(*bad.first_failure, 2u);
    EXPECT_EQ(bad.condition, "g(z) g(-f(z)) = 1");

    EXPECT_FALSE(is_pseudo_involution(pair("fib", "z*fib"), N));
}

TEST(PseudoInvolution, ReportsClampedOrder) {
    const InvolutionCheck c = check_pseudo_involution(pascal(8), 100);
    EXPECT_TRUE(c);
    EXPECT_EQ(c.order, 8u);
}

TEST(Subgroup, Examples) {
    const RiordanPair appell = subgroup_elt(Subgroup::appell, eval_series("(1+3*z)/(1-3*z)", N));
    EXPECT_EQ(appell.f(), TruncSeries::variable(N));
    EXPECT_TRUE(is_pseudo_involution(appell, N));

    const TruncSeries f = eval_series("fibf", N);
    EXPECT_EQ(expand(subgroup_elt(Subgroup::bell, f), 4).row(3), ints({32, 27, 9, 1}));
    EXPECT_EQ(expand(subgroup_elt(Subgroup::hitting_time, f), 4).row(3), ints({42, 27, 9, 1}));
    EXPECT_EQ(expand(subgroup_elt(Subgroup::derivative, f), 4).row(3), ints({128, 54, 12, 1}));
    EXPECT_EQ(expand(subgroup_elt(Subgroup::associated, f), 5).row(4), ints({0, 32, 27, 9, 1}));

    EXPECT_THROW(subgroup_elt(Subgroup::appell, eval_series("z", N)), propriety_error);
    EXPECT_THROW(subgroup_elt(Subgroup::bell, eval_series("1+z", N)), propriety_error);
    EXPECT_THROW(subgroup_elt(Subgroup::derivative, eval_series("z^2", N)), propriety_error);
}

TEST(MamConjugate, Examples) {
    EXPECT_EQ(mam_conjugate(pascal()), rinv(pascal()));
    EXPECT_EQ(mam_conjugate(RiordanPair::identity(N)), RiordanPair::identity(N));
    EXPECT_TRUE(agree(mam_conjugate(lucas_pi()), rinv(lucas_pi())));
}

// ---------------------------------------------------------------------------
// Properties

TEST(RiordanProperty, GroupLawMatchesMatrixProduct) {
    Rng rng(201);
    for (int trial = 0; trial < 60; ++trial) {
        const RiordanPair l = random_proper_pair(rng, N), r = random_proper_pair(rng, N);
        ASSERT_EQ(expand(rmul(l, r), 8), naive_product(expand(l, 8), expand(r, 8)));
        ASSERT_EQ(expand(l, 8), naive_expand(l, 8));
    }
}

TEST(RiordanProperty, InverseLaw) {
    Rng rng(202);
    const RiordanPair id = RiordanPair::identity(N);
    for (int trial = 0; trial < 60; ++trial) {
        const RiordanPair l = random_proper_pair(rng, N);
        const RiordanPair li = rinv(l);
        ASSERT_EQ(rmul(l, li), id);
        ASSERT_EQ(rmul(li, l), id);
        ASSERT_EQ(rinv(li), l);
    }
}

TEST(RiordanProperty, ApplyMatchesMatrixVector) {
    Rng rng(203);
    for (int trial = 0; trial < 60; ++trial) {
        const RiordanPair l = random_proper_pair(rng, N);
        const TruncSeries h = random_series(rng, N);
        ASSERT_EQ(prefix(apply(l, h), 10), naive_matvec(expand(l, 10), h));
    }
}

TEST(RiordanProperty, PseudoInvolutionIffMamIsInverse) {
    Rng rng(204);
    for (int trial = 0; trial < 40; ++trial) {
        const RiordanPair pi = random_pseudo_involution(rng, N);
        ASSERT_TRUE(is_pseudo_involution(pi, N));
        ASSERT_EQ(mam_conjugate(pi), rinv(pi));
        ASSERT_TRUE(is_pseudo_involution(rinv(pi), N));

        const RiordanPair other = random_proper_pair(rng, N);
        ASSERT_EQ(is_pseudo_involution(other, N), mam_conjugate(other) == rinv(other));
    }
}

TEST(RiordanProperty, SubgroupElementsWithOrderTwoSeedsArePseudoInvolutions) {
    Rng rng(205);
    for (int trial = 0; trial < 20; ++trial) {
        // -f has compositional order 2 whenever (g, f) is a pseudo-involution.
        const TruncSeries f = random_pseudo_involution(rng, N).f();
        for (Subgroup kind : {Subgroup::bell, Subgroup::associated, Subgroup::derivative, Subgroup::hitting_time}) {
            const RiordanPair p = subgroup_elt(kind, f);
            ASSERT_TRUE(is_pseudo_involution(p, p.order())) << to_string(kind);
        }
        // Appell: g(z) = h(z)/h(-z) satisfies g(z) g(-z) = 1.
        const TruncSeries h = random_g(rng, N);
        const TruncSeries h_neg = detail::alternate(h);
        ASSERT_TRUE(is_pseudo_involution(subgroup_elt(Subgroup::appell, divide(h, h_neg)), N));
    }
}
