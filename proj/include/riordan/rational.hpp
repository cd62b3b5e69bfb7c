#pragma once

/**
 * Exact rational numbers.
 *
 * Thin value type over GMP's mpq_class. Every value is kept canonical
 * (lowest terms, positive denominator), so equality is plain structural
 * equality and printing is deterministic: integers print as "p", all other
 * values as "p/q".
 */

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace riordan {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit by design of the number tower
    Rational(const mpz_class& numerator) : value_(numerator) {}  // NOLINT

    Rational(const mpz_class& numerator, const mpz_class& denominator) {
        if (denominator == 0) {
            throw error("rational with zero denominator");
        }
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    // Accepts "p" or "p/q" with optional leading sign on p.
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) {
            throw error("empty rational literal");
        }
        const auto slash = s.find('/');
        mpz_class num;
        mpz_class den = 1;
        auto read = [&](const std::string& part, mpz_class& out) {
            if (part.empty() || out.set_str(part, 10) != 0) {
                throw error("malformed rational literal '" + s + "'");
            }
        };
        if (slash == std::string::npos) {
            read(s, num);
        } else {
            read(s.substr(0, slash), num);
            read(s.substr(slash + 1), den);
            if (den.get_str().front() == '-') {
                throw error("malformed rational literal '" + s + "'");
            }
        }
        return Rational(num, den);
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Non-negative rational square root, if one exists.
    std::optional<Rational> sqrt() const {
        if (sign() < 0) {
            return std::nullopt;
        }
        const mpz_class& num = value_.get_num();
        const mpz_class& den = value_.get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
            mpz_perfect_square_p(den.get_mpz_t()) == 0) {
            return std::nullopt;
        }
        return Rational(::sqrt(num), ::sqrt(den));
    }

    std::string to_string() const {
        if (is_integer()) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return from_mpq(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw error("rational division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    mpq_class value_;
};

} // namespace riordan
