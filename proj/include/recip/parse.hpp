/*
   Copyright 2026 The recip Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file parse.hpp
 * @brief Text syntax for elements of F_p(t).
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := unary (('*' | '/') unary)*
 *   unary  := '-' unary | power
 *   power  := atom ('^' exp)?
 *   exp    := '-'? INT ('^' exp)?          (right-associative)
 *   atom   := INT | 't' | '(' expr ')'
 */

#ifndef RECIP_PARSE_HPP
#define RECIP_PARSE_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ff.hpp"
#include "poly.hpp"
#include "ratfun.hpp"

namespace recip {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument("at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    /// 0-based offset into the source text.
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

inline constexpr long max_parse_exponent = 4096;

namespace detail {

struct Fraction {
    Polynomial num;
    Polynomial den;
};

class Parser {
public:
    Parser(std::string_view src, Field k) : src_(src), k_(std::move(k)) {}

    Fraction parse() {
        Fraction v = expr();
        skip();
        if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Fraction expr() {
        Fraction acc = term();
        for (;;) {
            if (accept('+')) {
                acc = add(acc, term(), false);
            } else if (accept('-')) {
                acc = add(acc, term(), true);
            } else {
                return acc;
            }
        }
    }

    Fraction term() {
        Fraction acc = unary();
        for (;;) {
            if (accept('*')) {
                Fraction r = unary();
                acc = {acc.num * r.num, acc.den * r.den};
            } else if (accept('/')) {
                skip();
                const std::size_t at = pos_;
                Fraction r = unary();
                if (r.num.is_zero()) fail_at("division by zero", at);
                acc = {acc.num * r.den, acc.den * r.num};
            } else {
                return acc;
            }
            reduce(acc);
        }
    }

    Fraction unary() {
        if (accept('-')) {
            Fraction v = unary();
            return {Polynomial(k_) - v.num, v.den};
        }
        return power();
    }

    Fraction power() {
        Fraction base = atom();
        if (!accept('^')) return base;
        skip();
        const std::size_t at = pos_;
        const long e = exponent();
        if (e < 0) {
            if (base.num.is_zero()) fail_at("negative power of zero", at);
            std::swap(base.num, base.den);
        }
        const auto m = static_cast<std::uint64_t>(e < 0 ? -e : e);
        const auto deg = static_cast<std::uint64_t>(std::max(base.num.degree(), base.den.degree()));
        if (deg * m > static_cast<std::uint64_t>(max_parse_exponent)) fail_at("power too large", at);
        return {base.num.pow(m), base.den.pow(m)};
    }

    long exponent() {
        skip();
        const std::size_t at = pos_;
        const bool neg = accept('-');
        skip();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected an integer exponent");
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_++] - '0');
            if (v > max_parse_exponent) fail_at("exponent too large", at);
        }
        if (accept('^')) {
            const long inner = exponent();
            if (inner < 0) fail_at("negative exponent inside an exponent", at);
            long r = 1;
            for (long i = 0; i < inner; ++i) {
                r *= v;
                if (r > max_parse_exponent) fail_at("exponent too large", at);
            }
            if (inner == 0) r = 1;
            v = r;
        }
        return neg ? -v : v;
    }

    Fraction atom() {
        skip();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Fraction v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 't') {
            ++pos_;
            return {Polynomial::x(k_), Polynomial::one(k_)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t p = k_.characteristic();
            std::uint64_t v = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                v = (v * 10 + static_cast<std::uint64_t>(src_[pos_++] - '0')) % p;
            return {Polynomial::constant(k_.from_int(static_cast<std::int64_t>(v))), Polynomial::one(k_)};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    static Fraction add(const Fraction& a, const Fraction& b, bool subtract) {
        Fraction r = subtract ? Fraction{a.num * b.den - b.num * a.den, a.den * b.den}
                              : Fraction{a.num * b.den + b.num * a.den, a.den * b.den};
        reduce(r);
        return r;
    }

    static void reduce(Fraction& f) {
        if (f.num.is_zero()) {
            f.den = Polynomial::one(f.den.field());
            return;
        }
        const Polynomial g = gcd(f.num, f.den);
        if (g.degree() > 0) {
            f.num = f.num / g;
            f.den = f.den / g;
        }
    }

    std::string_view src_;
    Field k_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and normalizes an element of F_p(t)^*.
inline RationalFunction parse_rational(std::string_view src, const Field& k, std::uint64_t seed = default_seed) {
    const auto v = detail::Parser(src, k).parse();
    if (v.num.is_zero()) throw ParseError("the expression is the zero function", 0);
    return RationalFunction::normalize(v.num, v.den, seed);
}

inline RationalFunction parse_rational(std::string_view src, std::uint64_t p, std::uint64_t seed = default_seed) {
    return parse_rational(src, Field::prime(p), seed);
}

/// Parses an expression that must reduce to a polynomial.
inline Polynomial parse_polynomial(std::string_view src, const Field& k) {
    const auto v = detail::Parser(src, k).parse();
    if (v.den.degree() > 0) throw ParseError("expected a polynomial", 0);
    return v.num.scale(v.den.leading().inv());
}

}  // namespace recip

#endif  // RECIP_PARSE_HPP
