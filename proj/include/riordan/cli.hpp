#pragma once

/**
 * The `riordan` command line.
 *
 *   riordan [--order N] [--rows N] [--format table|csv|json] <command> ...
 *
 *   show G F [ROWS]             expand (G, F)
 *   mul G1 F1 G2 F2             product of two pairs
 *   inv G F                     inverse pair
 *   apply G F H                 (G, F) acting on H
 *   az G F [TERMS]              A- and Z-sequences
 *   stochastic G [ROWS]         (G, 1 - G + zG) with row sums
 *   pseudo from-g G             the f making (G, f) a pseudo-involution
 *   pseudo check G F            pseudo-involution test
 *   pseudo family F             the four canonical pseudo-involutions for F
 *   pseudo power G F N          (G^N, F)
 *   verify [ID|all]             recompute the built-in fixtures
 *
 * Exit codes: 0 success, 1 verification mismatch (or a failed check),
 * 2 parse error, 3 invariant violation, 4 construction precondition failure.
 */

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "constructions.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "fixtures.hpp"
#include "production.hpp"
#include "render.hpp"
#include "riordan.hpp"
#include "series.hpp"

namespace riordan::cli {

enum exit_code : int {
    ok = 0,
    mismatch = 1,
    parse_failure = 2,
    invariant_violation = 3,
    precondition_failure = 4,
};

namespace detail {

struct Settings {
    std::size_t order = 32;
    std::size_t rows = 10;
    std::string format = "table";
    Format fmt = Format::table;
};

class Session {
public:
    Session(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

    TruncSeries series(const std::string& text) const { return eval_series(text, s_.order); }

    RiordanPair pair(const std::string& g, const std::string& f) const { return {series(g), series(f)}; }

    void warn_if_stretched(const RiordanPair& p) const {
        if (p.stretched()) {
            err_ << "warning: f has zero linear coefficient; this is a vertically stretched array, "
                    "not a Riordan group element\n";
        }
    }

    void triangle(const RiordanPair& p, std::size_t rows, const std::string& g_label,
                  const std::vector<Rational>* row_sums = nullptr) const {
        const TriMatrix t = expand(p, rows);
        switch (s_.fmt) {
        case Format::table: out_ << render_table(t, row_sums); break;
        case Format::csv: out_ << render_csv(t); break;
        case Format::json: {
            nlohmann::json j = triangle_json(t, g_label, p.f(), s_.order);
            j["g_coeffs"] = coeffs_json(p.g());
            if (row_sums != nullptr) {
                nlohmann::json sums = nlohmann::json::array();
                for (const auto& v : *row_sums) {
                    sums.push_back(v.to_string());
                }
                j["row_sums"] = sums;
            }
            out_ << j.dump() << '\n';
            break;
        }
        }
    }

    void sequence(const std::string& label, const std::vector<Rational>& v) const {
        if (s_.fmt == Format::csv) {
            out_ << label;
            for (const auto& x : v) {
                out_ << ',' << x;
            }
            out_ << '\n';
            return;
        }
        out_ << label << ": ";
        for (std::size_t i = 0; i < v.size(); ++i) {
            out_ << (i ? ", " : "") << v[i];
        }
        out_ << '\n';
    }

    std::vector<Rational> prefix(const TruncSeries& s, std::size_t n) const {
        n = std::min(n, s.order());
        return {s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(n)};
    }

    const Settings& settings() const { return s_; }
    std::ostream& out() const { return out_; }
    std::ostream& err() const { return err_; }

private:
    const Settings& s_;
    std::ostream& out_;
    std::ostream& err_;
};

inline int report_fixtures(const Session& ss, const std::vector<Fixture>& fixtures, const std::string& which) {
    std::vector<Fixture> selected;
    if (which == "all") {
        selected = fixtures;
    } else {
        for (const auto& f : fixtures) {
            if (f.id == which) {
                selected.push_back(f);
            }
        }
        if (selected.empty()) {
            ss.err() << "error: no fixture named '" << which << "'\n";
            return parse_failure;
        }
    }
    const auto results = verify_all(selected, ss.settings().order);
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.ok) {
            ++passed;
            ss.out() << "PASS " << r.id << '\n';
        } else {
            ss.out() << "FAIL " << r.id << ": " << r.message << '\n';
        }
    }
    ss.out() << passed << "/" << results.size() << " fixtures passed\n";
    return passed == results.size() ? ok : mismatch;
}

} // namespace detail

/**
 * Runs one command. `args` excludes the program name. `fixtures` replaces
 * the built-in fixture set for `verify` when given.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const std::vector<Fixture>* fixtures = nullptr) {
    detail::Settings settings;
    CLI::App app{"Exact Riordan-array toolkit", "riordan"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--order", settings.order, "series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--rows", settings.rows, "rows to display")->check(CLI::PositiveNumber);
    app.add_option("--format", settings.format, "output format")->check(CLI::IsMember({"table", "csv", "json"}));

    std::function<int(const detail::Session&)> action;
    std::optional<std::size_t> rows_pos;
    std::string g, f, g2, f2, h, fixture_id = "all", fixtures_file;
    std::size_t terms = 8;
    unsigned long power_n = 1;
    bool dump = false;

    auto rows_or_default = [&] { return rows_pos.value_or(settings.rows); };

    auto* show = app.add_subcommand("show", "expand a Riordan pair");
    show->add_option("G", g)->required();
    show->add_option("F", f)->required();
    show->add_option("ROWS", rows_pos);
    show->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            const RiordanPair p = ss.pair(g, f);
            ss.warn_if_stretched(p);
            ss.triangle(p, rows_or_default(), g);
            return ok;
        };
    });

    auto* mul = app.add_subcommand("mul", "multiply two Riordan pairs");
    mul->add_option("G1", g)->required();
    mul->add_option("F1", f)->required();
    mul->add_option("G2", g2)->required();
    mul->add_option("F2", f2)->required();
    mul->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            const RiordanPair p = rmul(ss.pair(g, f), ss.pair(g2, f2));
            ss.triangle(p, settings.rows, "(" + g + ")*((" + g2 + ") o (" + f + "))");
            return ok;
        };
    });

    auto* inv = app.add_subcommand("inv", "invert a Riordan pair");
    inv->add_option("G", g)->required();
    inv->add_option("F", f)->required();
    inv->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            const RiordanPair p = rinv(ss.pair(g, f));
            ss.triangle(p, settings.rows, "1/((" + g + ") o fbar)");
            return ok;
        };
    });

    auto* app_apply = app.add_subcommand("apply", "apply a pair to a series: g * h(f)");
    app_apply->add_option("G", g)->required();
    app_apply->add_option("F", f)->required();
    app_apply->add_option("H", h)->required();
    app_apply->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            const RiordanPair p = ss.pair(g, f);
            const TruncSeries r = apply(p, ss.series(h));
            const auto coeffs = ss.prefix(r, settings.rows);
            if (settings.fmt == Format::json) {
                nlohmann::json j{{"coeffs", rationals_to_json(coeffs)}, {"order", settings.order}};
                ss.out() << j.dump() << '\n';
            } else {
                ss.sequence("coeffs", coeffs);
            }
            return ok;
        };
    });

    auto* az = app.add_subcommand("az", "A- and Z-sequences of a proper pair");
    az->add_option("G", g)->required();
    az->add_option("F", f)->required();
    az->add_option("TERMS", terms, "number of terms")->check(CLI::PositiveNumber);
    az->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            const RiordanPair p = ss.pair(g, f);
            if (p.stretched()) {
                throw propriety_error("A/Z sequences need a proper pair; f has zero linear coefficient");
            }
            const SeqReport r = extract_az(p, terms);
            if (settings.fmt == Format::json) {
                nlohmann::json j{{"a_seq", rationals_to_json(r.a_seq)},
                                 {"z_seq", rationals_to_json(r.z_seq)},
                                 {"terms", r.terms}};
                ss.out() << j.dump() << '\n';
            } else {
                ss.sequence("A", r.a_seq);
                ss.sequence("Z", r.z_seq);
            }
            return ok;
        };
    });

    auto* stochastic = app.add_subcommand("stochastic", "stochastic array (g, 1 - g + z g)");
    stochastic->add_option("G", g)->required();
    stochastic->add_option("ROWS", rows_pos);
    stochastic->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            const TruncSeries gs = ss.series(g);
            if (gs[0].is_zero()) {
                throw invariant_error("g must have a nonzero constant term");
            }
            const RiordanPair p = stochastic_from_g(gs);
            ss.warn_if_stretched(p);
            const TriMatrix t = expand(p, rows_or_default());
            std::vector<Rational> sums;
            for (std::size_t n = 0; n < t.size(); ++n) {
                sums.push_back(t.row_sum(n));
            }
            ss.triangle(p, rows_or_default(), g, &sums);
            return ok;
        };
    });

    auto* pseudo = app.add_subcommand("pseudo", "pseudo-involution constructions");
    pseudo->require_subcommand(1);

    auto* from_g = pseudo->add_subcommand("from-g", "unique f with (g, f) a pseudo-involution");
    from_g->add_option("G", g)->required();
    from_g->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            const RiordanPair p = pseudo_from_g(ss.series(g));
            if (settings.fmt == Format::table) {
                ss.sequence("f", ss.prefix(p.f(), settings.rows));
            }
            ss.triangle(p, settings.rows, g);
            return ok;
        };
    });

    auto* check = pseudo->add_subcommand("check", "test whether (g, f) is a pseudo-involution");
    check->add_option("G", g)->required();
    check->add_option("F", f)->required();
    check->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            const RiordanPair p = ss.pair(g, f);
            const InvolutionCheck c = check_pseudo_involution(p, settings.order);
            if (c) {
                ss.out() << "PASS: pseudo-involution modulo z^" << c.order << '\n';
                return ok;
            }
            ss.out() << "FAIL at order " << *c.first_failure << ": " << c.condition << '\n';
            return mismatch;
        };
    });

    auto* family = pseudo->add_subcommand("family", "the four canonical pseudo-involutions sharing f");
    family->add_option("F", f)->required();
    family->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            static constexpr const char* labels[] = {"associated (1, f)", "bell (f/z, f)", "derivative (f', f)",
                                                     "hitting-time (z f'/f, f)"};
            const auto fam = family_from_f(ss.series(f));
            if (settings.fmt == Format::json) {
                nlohmann::json all = nlohmann::json::array();
                for (std::size_t i = 0; i < fam.size(); ++i) {
                    nlohmann::json j = triangle_json(expand(fam[i], settings.rows), labels[i], fam[i].f(),
                                                     settings.order);
                    j["label"] = labels[i];
                    j["g_coeffs"] = coeffs_json(fam[i].g());
                    all.push_back(std::move(j));
                }
                ss.out() << all.dump() << '\n';
                return ok;
            }
            for (std::size_t i = 0; i < fam.size(); ++i) {
                ss.out() << (i ? "\n" : "") << "# " << labels[i] << '\n';
                ss.triangle(fam[i], settings.rows, labels[i]);
            }
            return ok;
        };
    });

    auto* power_cmd = pseudo->add_subcommand("power", "(g^n, f) from a pseudo-involution (g, f)");
    power_cmd->add_option("G", g)->required();
    power_cmd->add_option("F", f)->required();
    power_cmd->add_option("N", power_n)->required()->check(CLI::PositiveNumber);
    power_cmd->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            const RiordanPair p = power_pseudo(ss.pair(g, f), power_n);
            ss.triangle(p, settings.rows, "(" + g + ")^" + std::to_string(power_n));
            return ok;
        };
    });

    auto* verify = app.add_subcommand("verify", "recompute fixtures and compare exactly");
    verify->add_option("FIXTURE", fixture_id, "fixture id or 'all'");
    verify->add_option("--fixtures", fixtures_file, "read fixtures from a JSON file")->check(CLI::ExistingFile);
    verify->add_flag("--dump", dump, "print the fixture set as JSON and exit");
    verify->callback([&] {
        action = [&](const detail::Session& ss) -> int {
            std::vector<Fixture> set = fixtures != nullptr ? *fixtures : builtin_fixtures();
            if (!fixtures_file.empty()) {
                std::ifstream in(fixtures_file);
                const nlohmann::json j = nlohmann::json::parse(in);
                set.clear();
                for (const auto& item : j) {
                    set.push_back(fixture_from_json(item));
                }
            }
            if (dump) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& fx : set) {
                    j.push_back(fixture_to_json(fx));
                }
                ss.out() << j.dump(2) << '\n';
                return ok;
            }
            return detail::report_fixtures(ss, set, fixture_id);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return parse_failure;
    }
    settings.fmt = *parse_format(settings.format);
    if (!action) {
        err << "error: no command given\n";
        return parse_failure;
    }

    const detail::Session session(settings, out, err);
    try {
        return action(session);
    } catch (const syntax_error& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const unknown_name_error& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const precondition_error& e) {
        err << "precondition failed: " << e.what() << '\n';
        return precondition_failure;
    } catch (const order_two_error& e) {
        err << "precondition failed: " << e.what() << '\n';
        return precondition_failure;
    } catch (const error& e) {
        err << "invariant violation: " << e.what() << '\n';
        return invariant_violation;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    }
}

} // namespace riordan::cli
