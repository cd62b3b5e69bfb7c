#pragma once

/**
 * Generating-function expressions.
 *
 * Grammar (whitespace is insignificant, there is no implicit multiplication):
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := '-'? atom ('^' uint)?
 *   atom   := uint | 'z' | name | '(' expr ')' | 'sqrt' '(' expr ')'
 *
 * '^' binds tighter than the unary minus, so "-z^2" is -(z^2). Names resolve
 * against the NamedGF registry at parse time.
 */

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "named.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace riordan {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { literal, variable, name, neg, add, sub, mul, div, pow, sqrt };

    Kind kind;
    mpz_class literal;           // literal
    std::string name;            // name
    unsigned long exponent = 0;  // pow
    std::vector<ExprPtr> args;   // neg, sqrt: 1; binary ops and pow: 2 / 1

    static ExprPtr make_literal(mpz_class v) { return std::make_shared<const Expr>(Expr{Kind::literal, std::move(v), {}, 0, {}}); }
    static ExprPtr make_variable() { return std::make_shared<const Expr>(Expr{Kind::variable, 0, {}, 0, {}}); }
    static ExprPtr make_name(std::string n) { return std::make_shared<const Expr>(Expr{Kind::name, 0, std::move(n), 0, {}}); }
    static ExprPtr make_unary(Kind k, ExprPtr a) { return std::make_shared<const Expr>(Expr{k, 0, {}, 0, {std::move(a)}}); }
    static ExprPtr make_binary(Kind k, ExprPtr a, ExprPtr b) {
        return std::make_shared<const Expr>(Expr{k, 0, {}, 0, {std::move(a), std::move(b)}});
    }
    static ExprPtr make_pow(ExprPtr base, unsigned long e) {
        return std::make_shared<const Expr>(Expr{Kind::pow, 0, {}, e, {std::move(base)}});
    }
};

// Structural equality.
inline bool same_tree(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.literal != b.literal || a.name != b.name || a.exponent != b.exponent ||
        a.args.size() != b.args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!same_tree(*a.args[i], *b.args[i])) {
            return false;
        }
    }
    return true;
}

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw syntax_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            throw syntax_error(std::string("expected '") + c + "'", pos_);
        }
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = Expr::make_binary(Expr::Kind::add, lhs, term());
            } else if (accept('-')) {
                lhs = Expr::make_binary(Expr::Kind::sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = Expr::make_binary(Expr::Kind::mul, lhs, factor());
            } else if (accept('/')) {
                lhs = Expr::make_binary(Expr::Kind::div, lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr factor() {
        const bool negated = accept('-');
        ExprPtr a = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t at = pos_;
            const std::string digits = read_digits();
            if (digits.empty()) {
                throw syntax_error("expected a non-negative integer exponent", at);
            }
            unsigned long e = 0;
            try {
                std::size_t used = 0;
                e = std::stoul(digits, &used);
            } catch (const std::exception&) {
                throw syntax_error("exponent out of range", at);
            }
            a = Expr::make_pow(std::move(a), e);
        }
        return negated ? Expr::make_unary(Expr::Kind::neg, std::move(a)) : a;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            throw syntax_error("expected an expression", pos_);
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Expr::make_literal(mpz_class(read_digits(), 10));
        }
        if (c == '(') {
            ++pos_;
            ExprPtr inner = expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ident += text_[pos_++];
            }
            if (ident == "z") {
                return Expr::make_variable();
            }
            if (ident == "sqrt") {
                expect('(');
                ExprPtr inner = expr();
                expect(')');
                return Expr::make_unary(Expr::Kind::sqrt, std::move(inner));
            }
            if (find_named(ident) == nullptr) {
                throw unknown_name_error(ident, start);
            }
            return Expr::make_name(std::move(ident));
        }
        throw syntax_error(std::string("unexpected '") + c + "'", pos_);
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_++];
        }
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline bool is_atom(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::literal:
    case Expr::Kind::variable:
    case Expr::Kind::name:
    case Expr::Kind::sqrt:
        return true;
    default:
        return false;
    }
}

} // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::ExprParser(text).parse(); }

// Canonical printer: every binary node is parenthesised, so parse(print(e))
// rebuilds e exactly.
inline std::string print(const Expr& e) {
    auto as_atom = [](const Expr& x) {
        return detail::is_atom(x) ? print(x) : "(" + print(x) + ")";
    };
    switch (e.kind) {
    case Expr::Kind::literal: return e.literal.get_str();
    case Expr::Kind::variable: return "z";
    case Expr::Kind::name: return e.name;
    case Expr::Kind::sqrt: return "sqrt(" + print(*e.args[0]) + ")";
    case Expr::Kind::neg: {
        const Expr& a = *e.args[0];
        return "-" + (detail::is_atom(a) || a.kind == Expr::Kind::pow ? print(a) : "(" + print(a) + ")");
    }
    case Expr::Kind::pow: return as_atom(*e.args[0]) + "^" + std::to_string(e.exponent);
    case Expr::Kind::add: return "(" + print(*e.args[0]) + "+" + print(*e.args[1]) + ")";
    case Expr::Kind::sub: return "(" + print(*e.args[0]) + "-" + print(*e.args[1]) + ")";
    case Expr::Kind::mul: return "(" + print(*e.args[0]) + "*" + print(*e.args[1]) + ")";
    case Expr::Kind::div: return "(" + print(*e.args[0]) + "/" + print(*e.args[1]) + ")";
    }
    return {};
}

inline TruncSeries eval_series(const Expr& e, std::size_t order);

inline TruncSeries named_series(std::string_view name, std::size_t order) {
    const NamedGF* n = find_named(name);
    if (n == nullptr) {
        throw unknown_name_error(std::string(name), 0);
    }
    return eval_series(*parse(n->expr), order);
}

// Bottom-up evaluation to the requested order. Division cancels common
// powers of z and therefore may return fewer than `order` coefficients.
inline TruncSeries eval_series(const Expr& e, std::size_t order) {
    if (order == 0) {
        throw order_error("evaluation order must be positive");
    }
    switch (e.kind) {
    case Expr::Kind::literal: return TruncSeries::constant(Rational(e.literal), order);
    case Expr::Kind::variable: return TruncSeries::variable(order);
    case Expr::Kind::name: return named_series(e.name, order);
    case Expr::Kind::neg: return -eval_series(*e.args[0], order);
    case Expr::Kind::sqrt: return sqrt(eval_series(*e.args[0], order));
    case Expr::Kind::pow: return power(eval_series(*e.args[0], order), e.exponent);
    case Expr::Kind::add: return eval_series(*e.args[0], order) + eval_series(*e.args[1], order);
    case Expr::Kind::sub: return eval_series(*e.args[0], order) - eval_series(*e.args[1], order);
    case Expr::Kind::mul: return eval_series(*e.args[0], order) * eval_series(*e.args[1], order);
    case Expr::Kind::div: return divide(eval_series(*e.args[0], order), eval_series(*e.args[1], order));
    }
    throw error("unknown expression node");
}

inline TruncSeries eval_series(std::string_view text, std::size_t order) { return eval_series(*parse(text), order); }

} // namespace riordan
