#include <gtest/gtest.h>

#include "riordan/errors.hpp"
#include "riordan/expr.hpp"
#include "riordan/named.hpp"
#include "support.hpp"

using namespace riordan;
using namespace riordan::testing;

namespace {

using K = Expr::Kind;

template <class E>
std::size_t error_offset(const char* text) {
    try {
        parse(text);
    } catch (const E& e) {
        return e.offset();
    }
    ADD_FAILURE() << "no error for " << text;
    return SIZE_MAX;
}

ExprPtr random_tree(Rng& rng, int depth) {
    std::uniform_int_distribution<int> leaf(0, 2);
    std::uniform_int_distribution<int> node(0, 6);
    if (depth == 0) {
        switch (leaf(rng)) {
        case 0: return Expr::make_literal(std::uniform_int_distribution<long>(0, 99)(rng));
        case 1: return Expr::make_variable();
        default: return Expr::make_name(std::string(named_gfs[rng() % named_gfs.size()].name));
        }
    }
    auto sub = [&] { return random_tree(rng, depth - 1); };
    switch (node(rng)) {
    case 0: return Expr::make_unary(K::neg, sub());
    case 1: return Expr::make_binary(K::add, sub(), sub());
    case 2: return Expr::make_binary(K::sub, sub(), sub());
    case 3: return Expr::make_binary(K::mul, sub(), sub());
    case 4: return Expr::make_binary(K::div, sub(), sub());
    case 5: return Expr::make_pow(sub(), rng() % 5);
    default: return Expr::make_unary(K::sqrt, sub());
    }
}

} // namespace

TEST(Parse, Examples) {
    EXPECT_NO_THROW(parse("1/(1-z-z^2)"));
    EXPECT_NO_THROW(parse("(1+z^2)/(1-z-z^2)"));
    EXPECT_NO_THROW(parse("  sqrt ( 1 - 4 * z )  "));
    EXPECT_EQ(print(*parse("1/(1-z-z^2)")), "(1/((1-z)-z^2))");
}

TEST(Parse, Precedence) {
    // Exponentiation binds tighter than unary minus.
    const ExprPtr e = parse("-z^2");
    ASSERT_EQ(e->kind, K::neg);
    EXPECT_EQ(e->args[0]->kind, K::pow);
    EXPECT_EQ(eval_series("-z^2", 4), series_of({0, 0, -1, 0}));
    EXPECT_EQ(eval_series("(-z)^2", 4), series_of({0, 0, 1, 0}));

    EXPECT_EQ(print(*parse("1+2*z")), "(1+(2*z))");
    EXPECT_EQ(print(*parse("1-z-z")), "((1-z)-z)");
    EXPECT_EQ(print(*parse("z/2/3")), "((z/2)/3)");
}

TEST(Parse, Errors) {
    EXPECT_EQ(error_offset<syntax_error>("sqrt("), 5u);
    EXPECT_EQ(error_offset<syntax_error>("1+"), 2u);
    EXPECT_EQ(error_offset<syntax_error>("(1+z"), 4u);
    EXPECT_EQ(error_offset<syntax_error>("2z"), 1u);
    EXPECT_EQ(error_offset<syntax_error>("z^-1"), 2u);
    EXPECT_EQ(error_offset<syntax_error>("z^"), 2u);
    EXPECT_EQ(error_offset<syntax_error>("1 $ 2"), 2u);
    EXPECT_EQ(error_offset<syntax_error>(""), 0u);
    EXPECT_EQ(error_offset<unknown_name_error>("1+foo*z"), 2u);

    try {
        parse("sqrt(");
        FAIL();
    } catch (const syntax_error& e) {
        EXPECT_NE(std::string(e.what()).find("at offset 5"), std::string::npos);
    }
}

TEST(Eval, Examples) {
    EXPECT_EQ(prefix(eval_series("1/(1-z-z^2)", 8), 8), ints({1, 1, 2, 3, 5, 8, 13, 21}));
    EXPECT_EQ(eval_series("z", 4), series_of({0, 1, 0, 0}));
    EXPECT_EQ(prefix(eval_series("(1-z-z^2-sqrt(5*z^4+10*z^3-z^2-6*z+1))/(2-2*z-2*z^2)", 8), 8),
              ints({0, 1, 3, 9, 32, 126, 538, 2429}));
    EXPECT_EQ(eval_series("fib", 12), eval_series("1/(1-z-z^2)", 12));
    EXPECT_THROW(eval_series("z", 0), order_error);
}

TEST(Eval, PropagatesSeriesErrors) {
    EXPECT_THROW(eval_series("1/0", 4), division_by_zero_series);
    EXPECT_THROW(eval_series("z/z^2", 4), valuation_error);
    EXPECT_THROW(eval_series("sqrt(2+z)", 4), sqrt_error);
}

TEST(Eval, DivisionCancellationShrinksOrder) {
    const TruncSeries s = eval_series("z^2/z", 8);
    EXPECT_EQ(s.order(), 7u);
    EXPECT_EQ(prefix(s, 3), ints({0, 1, 0}));
}

TEST(Named, RegistryEntriesEvaluate) {
    for (const auto& n : named_gfs) {
        EXPECT_NO_THROW(named_series(n.name, 16)) << n.name;
    }
    EXPECT_EQ(find_named("nope"), nullptr);
    EXPECT_EQ(prefix(named_series("lucas", 8), 7), ints({1, 1, 3, 4, 7, 11, 18}));
}

// ---------------------------------------------------------------------------
// Properties

TEST(ExprProperty, PrintParseRoundTrip) {
    Rng rng(501);
    for (int trial = 0; trial < 100; ++trial) {
        const ExprPtr e = random_tree(rng, 1 + trial % 4);
        const std::string text = print(*e);
        const ExprPtr back = parse(text);
        ASSERT_TRUE(same_tree(*e, *back)) << text;
        ASSERT_EQ(print(*back), text);
    }
}

TEST(ExprProperty, LowerOrderIsAPrefix) {
    for (const char* text : {"fib", "lucasf", "fibf^3+z", "sqrt(1-4*z)/(1+z)", "(z+2*z^2)/(1-z-z^2)"}) {
        const TruncSeries hi = eval_series(text, 24);
        for (std::size_t order = 1; order < 24; order += 5) {
            const TruncSeries lo = eval_series(text, order);
            ASSERT_TRUE(agree(lo, hi)) << text << " at " << order;
            ASSERT_EQ(lo.order(), order);
        }
    }
}
