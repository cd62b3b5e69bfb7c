#pragma once

/**
 * Reference fixtures: recipes paired with the exact matrices and sequence
 * prefixes they must reproduce.
 *
 * Verification is split in two steps. evaluate() does all the series work
 * and records every quantity a fixture asks about; compare() only looks at
 * the recorded data, so expected values can be swapped out cheaply.
 */

#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "production.hpp"
#include "rational.hpp"
#include "riordan.hpp"
#include "series.hpp"

namespace riordan {

enum class RecipeKind { pair, inverse, stochastic, pseudo_from_g, power_pseudo, family, series };

NLOHMANN_JSON_SERIALIZE_ENUM(RecipeKind, {
    {RecipeKind::pair, "pair"},
    {RecipeKind::inverse, "inverse"},
    {RecipeKind::stochastic, "stochastic"},
    {RecipeKind::pseudo_from_g, "pseudo_from_g"},
    {RecipeKind::power_pseudo, "power_pseudo"},
    {RecipeKind::family, "family"},
    {RecipeKind::series, "series"},
})

/**
 * How to build the object under test.
 *
 *   pair           (g, f)
 *   inverse        (g, f)^-1
 *   stochastic     stochastic_from_g(g)
 *   pseudo_from_g  pseudo_from_g(g)
 *   power_pseudo   power_pseudo(P, n), P = (g, f) or pseudo_from_g(g) when f is empty
 *   family         family_from_f(f), four pairs
 *   series         the series g itself
 */
struct Recipe {
    RecipeKind kind = RecipeKind::pair;
    std::string g;
    std::string f;
    unsigned long n = 1;
};

struct ExpectedMatrix {
    std::string label;
    std::vector<std::vector<Rational>> rows;
};

struct Fixture {
    std::string id;
    std::string source;
    Recipe recipe;
    std::vector<ExpectedMatrix> matrices;  // one per constructed pair, in order
    std::vector<Rational> coeff_prefix;    // f of the first pair, or the series
    std::vector<Rational> z_prefix;        // of the first pair
    std::vector<Rational> a_prefix;
    std::size_t pseudo_order = 0;          // if nonzero, every pair must be a pseudo-involution mod z^order
    std::size_t row_sum_rows = 0;          // if nonzero, rows 0..row_sum_rows-1 of the first pair sum to 1
    bool shared_a = false;                 // every pair has the same A-sequence prefix (8 terms)
};

struct Computed {
    std::vector<RiordanPair> pairs;
    std::optional<TruncSeries> series;
    std::vector<TriMatrix> triangles;            // sized to the matching expected matrix
    std::optional<SeqReport> az;                 // first pair
    std::vector<std::vector<Rational>> a_seqs;   // every pair, when shared_a
    std::vector<InvolutionCheck> pseudo_checks;  // every pair, when pseudo_order
    std::optional<TriMatrix> row_sum_triangle;
};

// Location and values of the first disagreement.
struct Mismatch {
    std::string target;
    std::size_t row = 0;
    std::optional<std::size_t> col;
    std::string expected;
    std::string actual;

    std::string describe() const {
        std::string at = col ? "(" + std::to_string(row) + ", " + std::to_string(*col) + ")"
                             : "[" + std::to_string(row) + "]";
        return target + " " + at + ": expected " + expected + ", got " + actual;
    }
};

struct FixtureResult {
    std::string id;
    bool ok = false;
    std::optional<Mismatch> mismatch;
    std::string message;
};

inline constexpr std::size_t shared_a_terms = 8;

inline std::vector<RiordanPair> build_pairs(const Recipe& r, std::size_t order) {
    auto ev = [&](const std::string& text) { return eval_series(text, order); };
    switch (r.kind) {
    case RecipeKind::pair: return {RiordanPair(ev(r.g), ev(r.f))};
    case RecipeKind::inverse: return {rinv(RiordanPair(ev(r.g), ev(r.f)))};
    case RecipeKind::stochastic: return {stochastic_from_g(ev(r.g))};
    case RecipeKind::pseudo_from_g: return {pseudo_from_g(ev(r.g))};
    case RecipeKind::power_pseudo: {
        const RiordanPair base = r.f.empty() ? pseudo_from_g(ev(r.g)) : RiordanPair(ev(r.g), ev(r.f));
        return {power_pseudo(base, r.n)};
    }
    case RecipeKind::family: {
        const auto fam = family_from_f(ev(r.f));
        return {fam.begin(), fam.end()};
    }
    case RecipeKind::series: return {};
    }
    throw error("unknown recipe kind");
}

inline Computed evaluate(const Fixture& fx, std::size_t order) {
    Computed c;
    if (fx.recipe.kind == RecipeKind::series) {
        c.series = eval_series(fx.recipe.g, order);
        return c;
    }
    c.pairs = build_pairs(fx.recipe, order);
    for (std::size_t i = 0; i < fx.matrices.size() && i < c.pairs.size(); ++i) {
        c.triangles.push_back(expand(c.pairs[i], fx.matrices[i].rows.size()));
    }
    if (!fx.z_prefix.empty() || !fx.a_prefix.empty()) {
        c.az = extract_az(c.pairs.front(), std::max(fx.z_prefix.size(), fx.a_prefix.size()));
    }
    if (fx.shared_a) {
        for (const auto& p : c.pairs) {
            c.a_seqs.push_back(a_sequence(p, shared_a_terms));
        }
    }
    if (fx.pseudo_order > 0) {
        for (const auto& p : c.pairs) {
            c.pseudo_checks.push_back(check_pseudo_involution(p, fx.pseudo_order));
        }
    }
    if (fx.row_sum_rows > 0) {
        c.row_sum_triangle = expand(c.pairs.front(), fx.row_sum_rows);
    }
    return c;
}

namespace detail {

inline std::optional<Mismatch> compare_seq(const std::string& target, const std::vector<Rational>& expected,
                                           const std::vector<Rational>& actual) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i >= actual.size()) {
            return Mismatch{target, i, std::nullopt, expected[i].to_string(), "<missing>"};
        }
        if (expected[i] != actual[i]) {
            return Mismatch{target, i, std::nullopt, expected[i].to_string(), actual[i].to_string()};
        }
    }
    return std::nullopt;
}

} // namespace detail

inline FixtureResult compare(const Fixture& fx, const Computed& c) {
    FixtureResult r{fx.id, false, std::nullopt, {}};
    auto fail = [&](Mismatch m) {
        r.message = m.describe();
        r.mismatch = std::move(m);
        return r;
    };
    auto fail_msg = [&](std::string msg) {
        r.message = std::move(msg);
        return r;
    };

    if (c.pairs.size() < fx.matrices.size()) {
        return fail_msg("recipe produced " + std::to_string(c.pairs.size()) + " pairs, fixture expects " +
                        std::to_string(fx.matrices.size()));
    }
    for (std::size_t i = 0; i < fx.matrices.size(); ++i) {
        const auto& want = fx.matrices[i];
        const TriMatrix& got = c.triangles.at(i);
        for (std::size_t n = 0; n < want.rows.size(); ++n) {
            if (want.rows[n].size() != n + 1) {
                return fail_msg(want.label + " row " + std::to_string(n) + " is malformed");
            }
            for (std::size_t k = 0; k <= n; ++k) {
                if (want.rows[n][k] != got.entry(n, k)) {
                    return fail({want.label, n, k, want.rows[n][k].to_string(), got.entry(n, k).to_string()});
                }
            }
        }
    }
    if (!fx.coeff_prefix.empty()) {
        const TruncSeries& s = c.series ? *c.series : c.pairs.front().f();
        const std::vector<Rational> got(s.coeffs().begin(), s.coeffs().end());
        if (auto m = detail::compare_seq(c.series ? "series" : "f", fx.coeff_prefix, got)) {
            return fail(*m);
        }
    }
    if (c.az) {
        if (auto m = detail::compare_seq("Z", fx.z_prefix, c.az->z_seq)) {
            return fail(*m);
        }
        if (auto m = detail::compare_seq("A", fx.a_prefix, c.az->a_seq)) {
            return fail(*m);
        }
    }
    for (std::size_t i = 1; i < c.a_seqs.size(); ++i) {
        if (auto m = detail::compare_seq("A of pair " + std::to_string(i), c.a_seqs.front(), c.a_seqs[i])) {
            return fail(*m);
        }
    }
    for (std::size_t i = 0; i < c.pseudo_checks.size(); ++i) {
        const auto& chk = c.pseudo_checks[i];
        if (!chk.holds) {
            return fail_msg("pair " + std::to_string(i) + " is not a pseudo-involution: " + chk.condition +
                            " fails at z^" + std::to_string(*chk.first_failure));
        }
        if (chk.order < fx.pseudo_order) {
            return fail_msg("pair " + std::to_string(i) + " could only be checked to order " +
                            std::to_string(chk.order));
        }
    }
    if (c.row_sum_triangle) {
        for (std::size_t n = 0; n < c.row_sum_triangle->size(); ++n) {
            const Rational s = c.row_sum_triangle->row_sum(n);
            if (s != Rational(1)) {
                return fail({"row sum", n, std::nullopt, "1", s.to_string()});
            }
        }
    }
    r.ok = true;
    return r;
}

inline FixtureResult verify_fixture(const Fixture& fx, std::size_t order) {
    try {
        return compare(fx, evaluate(fx, order));
    } catch (const error& e) {
        return {fx.id, false, std::nullopt, std::string("evaluation failed: ") + e.what()};
    }
}

// Fixtures are independent, so they are checked concurrently.
inline std::vector<FixtureResult> verify_all(const std::vector<Fixture>& fixtures, std::size_t order) {
    std::vector<std::future<FixtureResult>> jobs;
    jobs.reserve(fixtures.size());
    for (const auto& fx : fixtures) {
        jobs.push_back(std::async(std::launch::async, [&fx, order] { return verify_fixture(fx, order); }));
    }
    std::vector<FixtureResult> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) {
        out.push_back(j.get());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Built-in fixtures, transcribed from the published tables.

namespace detail {

using IntRows = std::initializer_list<std::initializer_list<long>>;

inline std::vector<std::vector<Rational>> rows_of(IntRows rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

inline std::vector<Rational> seq_of(std::initializer_list<const char*> items) {
    std::vector<Rational> out;
    for (const char* s : items) {
        out.push_back(Rational::parse(s));
    }
    return out;
}

inline std::vector<Rational> ints_of(std::initializer_list<long> items) { return {items.begin(), items.end()}; }

} // namespace detail

inline std::vector<Fixture> builtin_fixtures() {
    using detail::ints_of;
    using detail::rows_of;
    using detail::seq_of;
    std::vector<Fixture> fx;

    {
        Fixture f;
        f.id = "fibonacci";
        f.source = "Fibonacci numbers 1, 1, 2, 3, 5, 8, 13";
        f.recipe = {RecipeKind::series, "fib", "", 1};
        f.coeff_prefix = ints_of({1, 1, 2, 3, 5, 8, 13});
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "modified-lucas";
        f.source = "modified Lucas numbers 1, 1, 3, 4, 7, 11, 18";
        f.recipe = {RecipeKind::series, "lucas", "", 1};
        f.coeff_prefix = ints_of({1, 1, 3, 4, 7, 11, 18});
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "pascal-inverse";
        f.source = "inverse Pascal triangle, signed binomials";
        f.recipe = {RecipeKind::inverse, "1/(1-z)", "z/(1-z)", 1};
        f.matrices.push_back({"pascal-inverse", rows_of({
            {1},
            {-1, 1},
            {1, -2, 1},
            {-1, 3, -3, 1},
            {1, -4, 6, -4, 1},
            {-1, 5, -10, 10, -5, 1},
            {1, -6, 15, -20, 15, -6, 1},
        })});
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "pascal-from-g";
        f.source = "pseudo-involution from g = 1/(1-z) recovers z/(1-z)";
        f.recipe = {RecipeKind::pseudo_from_g, "1/(1-z)", "", 1};
        f.coeff_prefix.push_back(0);
        for (int i = 1; i < 32; ++i) {
            f.coeff_prefix.push_back(1);
        }
        f.pseudo_order = 16;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "appell-k3";
        f.source = "Appell pseudo-involution ((1+3z)/(1-3z), z)";
        f.recipe = {RecipeKind::pair, "(1+3*z)/(1-3*z)", "z", 1};
        f.pseudo_order = 16;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "stochastic-lucas-array";
        f.source = "stochastic Lucas array";
        f.recipe = {RecipeKind::stochastic, "lucas", "", 1};
        f.matrices.push_back({"stochastic-lucas-array", rows_of({
            {1},
            {1, 0},
            {3, -2, 0},
            {4, -3, 0, 0},
            {7, -10, 4, 0, 0},
            {11, -18, 8, 0, 0, 0},
            {18, -38, 29, -8, 0, 0, 0},
            {29, -71, 63, -20, 0, 0, 0, 0},
            {47, -134, 150, -78, 16, 0, 0, 0, 0},
            {76, -245, 317, -195, 48, 0, 0, 0, 0, 0},
        })});
        f.coeff_prefix = ints_of({0, 0, -2, -1, -3, -4, -7});
        f.row_sum_rows = 32;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "stochastic-lucas-matrix";
        f.source = "stochastic Lucas matrix and its A/Z sequences";
        f.recipe = {RecipeKind::stochastic, "(1+2*z)/(1-z-z^2)", "", 1};
        f.matrices.push_back({"stochastic-lucas-matrix", rows_of({
            {1},
            {3, -2},
            {4, -7, 4},
            {7, -14, 16, -8},
            {11, -31, 41, -36, 16},
            {18, -60, 105, -110, 80, -32},
            {29, -116, 235, -315, 280, -176, 64},
            {47, -216, 512, -790, 880, -688, 384, -128},
            {76, -397, 1063, -1894, 2425, -2344, 1648, -832, 256},
            {123, -718, 2153, -4298, 6303, -7002, 6032, -3872, 1792, -512},
        })});
        f.z_prefix = seq_of({"3", "5/2", "25/8", "25/8", "375/128", "375/128", "3125/1024", "3125/1024"});
        f.a_prefix = seq_of({"-2", "1/2", "-5/8", "0", "25/128", "0", "-125/1024", "0"});
        f.row_sum_rows = 32;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "lucas-pi";
        f.source = "Lucas pseudo-involution and its A/Z sequences";
        f.recipe = {RecipeKind::pseudo_from_g, "lucas", "", 1};
        f.matrices.push_back({"lucas-pi", rows_of({
            {1},
            {1, 1},
            {3, 6, 1},
            {4, 33, 11, 1},
            {7, 214, 88, 16, 1},
            {11, 1572, 699, 168, 21, 1},
            {18, 12686, 5787, 1584, 273, 26, 1},
            {29, 108583, 50036, 14652, 2994, 403, 31, 1},
            {47, 967294, 447998, 136436, 30792, 5054, 558, 36, 1},
        })});
        f.z_prefix = ints_of({1, 2, -11, 58, -384, 2872, -23416, 201608});
        f.a_prefix = ints_of({1, 5, 0, 45, -225, 1980, -16200, 142920});
        f.pseudo_order = 16;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "cfib2-pi";
        f.source = "convolved Fibonacci pseudo-involution, n = 2, and its A/Z sequences";
        f.recipe = {RecipeKind::power_pseudo, "fib", "", 2};
        f.matrices.push_back({"cfib2-pi", rows_of({
            {1},
            {2, 1},
            {5, 5, 1},
            {10, 20, 8, 1},
            {20, 75, 44, 11, 1},
            {38, 285, 212, 77, 14, 1},
            {71, 1138, 976, 448, 119, 17, 1},
            {130, 4820, 4476, 2390, 810, 170, 20, 1},
            {235, 21545, 20838, 12266, 4905, 1325, 230, 23, 1},
        })});
        f.z_prefix = ints_of({2, 1, -5, 20, -77, 308, -1303, 5805});
        f.a_prefix = ints_of({1, 3, 0, 5, -15, 70, -310, 1455});
        f.pseudo_order = 16;
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "fib-f";
        f.source = "Fibonacci-derived f(z), column 1 of (1, f)";
        f.recipe = {RecipeKind::series, "fibf", "", 1};
        f.coeff_prefix = ints_of({0, 1, 3, 9, 32, 126, 538, 2429, 11412, 55201});
        fx.push_back(std::move(f));
    }
    {
        Fixture f;
        f.id = "fib-f-family";
        f.source = "associated, Bell, derivative and hitting-time pseudo-involutions from the Fibonacci-derived f";
        f.recipe = {RecipeKind::family, "", "fibf", 1};
        f.matrices.push_back({"associated", rows_of({
            {1},
            {0, 1},
            {0, 3, 1},
            {0, 9, 6, 1},
            {0, 32, 27, 9, 1},
            {0, 126, 118, 54, 12, 1},
            {0, 538, 525, 285, 90, 15, 1},
            {0, 2429, 2408, 1440, 560, 135, 18, 1},
            {0, 11412, 11378, 7203, 3195, 970, 189, 21, 1},
            {0, 55201, 55146, 36162, 17488, 6195, 1542, 252, 24, 1},
        })});
        f.matrices.push_back({"bell", rows_of({
            {1},
            {3, 1},
            {9, 6, 1},
            {32, 27, 9, 1},
            {126, 118, 54, 12, 1},
            {538, 525, 285, 90, 15, 1},
            {2429, 2408, 1440, 560, 135, 18, 1},
            {11412, 11378, 7203, 3195, 970, 189, 21, 1},
            {55201, 55146, 36162, 17488, 6195, 1542, 252, 24, 1},
            {272993, 272904, 183132, 93926, 37043, 10926, 2303, 324, 27, 1},
        })});
        f.matrices.push_back({"derivative", rows_of({
            {1},
            {6, 1},
            {27, 9, 1},
            {128, 54, 12, 1},
            {630, 295, 90, 15, 1},
            {3228, 1575, 570, 135, 18, 1},
            {17003, 8428, 3360, 980, 189, 21, 1},
            {91296, 45512, 19208, 6390, 1552, 252, 24, 1},
            {496809, 248157, 108486, 39348, 11151, 2313, 324, 27, 1},
            {2729930, 1364520, 610440, 234815, 74086, 18210, 3290, 405, 30, 1},
        })});
        f.matrices.push_back({"hitting-time", rows_of({
            {1},
            {3, 1},
            {9, 6, 1},
            {42, 27, 9, 1},
            {201, 128, 54, 12, 1},
            {1043, 630, 295, 90, 15, 1},
            {5544, 3228, 1575, 570, 135, 18, 1},
            {30012, 17003, 8428, 3360, 980, 189, 21, 1},
            {164281, 91296, 45512, 19208, 6390, 1552, 252, 24, 1},
            {906693, 496809, 248157, 108486, 39348, 11151, 2313, 324, 27, 1},
        })});
        f.pseudo_order = 16;
        f.shared_a = true;
        fx.push_back(std::move(f));
    }
    return fx;
}

// ---------------------------------------------------------------------------
// JSON form, rationals as "p/q" strings.

inline nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) {
        out.push_back(x.to_string());
    }
    return out;
}

inline std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) {
        out.push_back(Rational::parse(x.get<std::string>()));
    }
    return out;
}

inline nlohmann::json fixture_to_json(const Fixture& fx) {
    nlohmann::json j;
    j["id"] = fx.id;
    j["source"] = fx.source;
    j["recipe"] = {{"kind", fx.recipe.kind}, {"g", fx.recipe.g}, {"f", fx.recipe.f}, {"n", fx.recipe.n}};
    j["matrices"] = nlohmann::json::array();
    for (const auto& m : fx.matrices) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : m.rows) {
            rows.push_back(rationals_to_json(r));
        }
        j["matrices"].push_back({{"label", m.label}, {"rows", rows}});
    }
    j["coeff_prefix"] = rationals_to_json(fx.coeff_prefix);
    j["z_prefix"] = rationals_to_json(fx.z_prefix);
    j["a_prefix"] = rationals_to_json(fx.a_prefix);
    j["pseudo_order"] = fx.pseudo_order;
    j["row_sum_rows"] = fx.row_sum_rows;
    j["shared_a"] = fx.shared_a;
    return j;
}

inline Fixture fixture_from_json(const nlohmann::json& j) {
    Fixture fx;
    fx.id = j.at("id").get<std::string>();
    fx.source = j.value("source", "");
    const auto& r = j.at("recipe");
    fx.recipe.kind = r.at("kind").get<RecipeKind>();
    fx.recipe.g = r.value("g", "");
    fx.recipe.f = r.value("f", "");
    fx.recipe.n = r.value("n", 1UL);
    for (const auto& m : j.value("matrices", nlohmann::json::array())) {
        ExpectedMatrix em;
        em.label = m.at("label").get<std::string>();
        for (const auto& row : m.at("rows")) {
            em.rows.push_back(rationals_from_json(row));
        }
        fx.matrices.push_back(std::move(em));
    }
    fx.coeff_prefix = rationals_from_json(j.value("coeff_prefix", nlohmann::json::array()));
    fx.z_prefix = rationals_from_json(j.value("z_prefix", nlohmann::json::array()));
    fx.a_prefix = rationals_from_json(j.value("a_prefix", nlohmann::json::array()));
    fx.pseudo_order = j.value("pseudo_order", std::size_t{0});
    fx.row_sum_rows = j.value("row_sum_rows", std::size_t{0});
    fx.shared_a = j.value("shared_a", false);
    return fx;
}

} // namespace riordan
