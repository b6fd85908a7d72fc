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
 * @file ratfun.hpp
 * @brief The rational function field F_p(t) of the projective line.
 *
 * Nonzero rational functions are kept factored as
 *     constant * prod_P P^{e_P}
 * over distinct monic irreducibles P with nonzero exponents. Valuations at
 * finite places are exponent lookups; the valuation at infinity is
 * -sum e_P deg P.
 */

#ifndef RECIP_RATFUN_HPP
#define RECIP_RATFUN_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ff.hpp"
#include "poly.hpp"

namespace recip {

/// A place of F_p(t): a monic irreducible generator, or infinity.
class ClosedPoint {
public:
    static ClosedPoint infinity() { return ClosedPoint(); }

    /// Throws PolynomialError unless `gen` is monic and irreducible.
    static ClosedPoint finite(Polynomial gen) {
        if (gen.is_zero() || !gen.is_monic()) throw PolynomialError("closed point generator must be monic");
        if (!gen.field().is_prime_field()) throw PolynomialError("closed points live over a prime field");
        if (!is_irreducible(gen)) throw PolynomialError("generator " + gen.to_string() + " is not irreducible");
        return ClosedPoint(std::move(gen));
    }

    static ClosedPoint finite_unchecked(Polynomial gen) { return ClosedPoint(std::move(gen)); }

    bool is_infinity() const { return !gen_.has_value(); }
    const Polynomial& generator() const {
        if (!gen_) throw std::logic_error("the point at infinity has no generator");
        return *gen_;
    }
    long degree() const { return gen_ ? gen_->degree() : 1; }

    std::string to_string() const { return gen_ ? "(" + gen_->to_string() + ")" : "inf"; }

    friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) { return a.gen_ == b.gen_; }
    /// Finite points in PolynomialOrder, infinity last.
    friend bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
        if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
        return PolynomialOrder{}(*a.gen_, *b.gen_);
    }

private:
    ClosedPoint() = default;
    explicit ClosedPoint(Polynomial gen) : gen_(std::move(gen)) {}
    std::optional<Polynomial> gen_;
};

class RationalFunctionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class RationalFunction {
public:
    using FactorMap = std::map<Polynomial, long, PolynomialOrder>;

    RationalFunction() = default;

    static RationalFunction constant(const Element& c) {
        if (c.is_zero()) throw RationalFunctionError("the zero function is not a unit");
        if (!c.field().is_prime_field()) throw RationalFunctionError("constants must lie in a prime field");
        return RationalFunction(c, {});
    }
    static RationalFunction one(const Field& k) { return constant(k.one()); }
    static RationalFunction t(const Field& k) { return from_factors(k.one(), {{Polynomial::x(k), 1}}); }

    /// Builds c * prod P^e from already-factored data; zero exponents are dropped.
    static RationalFunction from_factors(const Element& c, const std::vector<std::pair<Polynomial, long>>& factors) {
        RationalFunction r = constant(c);
        for (const auto& [g, e] : factors) {
            if (!g.is_monic() || g.degree() < 1) throw RationalFunctionError("factors must be monic of positive degree");
            if (e != 0) r.factors_[g] += e;
        }
        r.drop_zeros();
        return r;
    }

    static RationalFunction from_polynomial(const Polynomial& f, std::uint64_t seed = default_seed) {
        if (f.is_zero()) throw RationalFunctionError("the zero function is not a unit");
        if (!f.field().is_prime_field()) throw RationalFunctionError("rational functions live over a prime field");
        const auto fac = factor(f, seed);
        RationalFunction r(fac.leading, {});
        for (const auto& [g, e] : fac.factors) r.factors_[g] += e;
        return r;
    }

    /// num/den, factored and cancelled.
    static RationalFunction normalize(const Polynomial& num, const Polynomial& den, std::uint64_t seed = default_seed) {
        if (num.is_zero()) throw RationalFunctionError("zero numerator: the zero function is not a unit");
        if (den.is_zero()) throw RationalFunctionError("zero denominator");
        return from_polynomial(num, seed) / from_polynomial(den, seed);
    }

    const Field& field() const { return constant_.field(); }
    const Element& constant_factor() const { return constant_; }
    const FactorMap& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        RationalFunction r(a.constant_ * b.constant_, a.factors_);
        for (const auto& [g, e] : b.factors_) r.factors_[g] += e;
        r.drop_zeros();
        return r;
    }
    RationalFunction inverse() const {
        RationalFunction r(constant_.inv(), factors_);
        for (auto& [g, e] : r.factors_) e = -e;
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
    RationalFunction pow(long e) const {
        if (e == 0) return one(field());
        RationalFunction r(constant_.pow(e), factors_);
        for (auto& [g, x] : r.factors_) x *= e;
        return r;
    }

    /// Numerator with the constant folded in, and the monic denominator.
    Polynomial numerator() const {
        Polynomial acc = Polynomial::constant(constant_);
        for (const auto& [g, e] : factors_)
            if (e > 0) acc *= g.pow(static_cast<std::uint64_t>(e));
        return acc;
    }
    Polynomial denominator() const {
        Polynomial acc = Polynomial::one(field());
        for (const auto& [g, e] : factors_)
            if (e < 0) acc *= g.pow(static_cast<std::uint64_t>(-e));
        return acc;
    }

    /// Sum and difference refactor only the new numerator; the denominator
    /// factorization is merged exponent-wise.
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return a.add(b, false); }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a.add(b, true); }

    long valuation(const ClosedPoint& x) const {
        if (x.is_infinity()) {
            long s = 0;
            for (const auto& [g, e] : factors_) s -= e * g.degree();
            return s;
        }
        auto it = factors_.find(x.generator());
        return it == factors_.end() ? 0 : it->second;
    }

    /// Points with nonzero valuation, in ClosedPoint order (infinity last).
    std::vector<ClosedPoint> support() const {
        std::vector<ClosedPoint> out;
        for (const auto& [g, e] : factors_) out.push_back(ClosedPoint::finite_unchecked(g));
        if (valuation(ClosedPoint::infinity()) != 0) out.push_back(ClosedPoint::infinity());
        return out;
    }

    /// Value at x of a function with v_x = 0, as an element of k(x).
    /// At infinity this is the ratio of leading coefficients, i.e. the constant.
    Element residue(const ClosedPoint& x) const {
        if (valuation(x) != 0) {
            throw RationalFunctionError("residue requires valuation 0 at " + x.to_string());
        }
        if (x.is_infinity()) return constant_;
        const auto [kx, tbar] = residue_field(x.generator());
        Element acc = constant_.cast_to(kx);
        for (const auto& [g, e] : factors_) acc *= g.evaluate_in(tbar).pow(e);
        return acc;
    }

    /// sum_x deg(x) v_x(f); zero for every f on the projective line.
    long degree_sum() const {
        long s = 0;
        for (const auto& x : support()) s += x.degree() * valuation(x);
        return s;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.constant_ == b.constant_ && a.factors_ == b.factors_;
    }

    /// Parseable text, e.g. "2*(t+1)^2*(t^2+1)^-1".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        if (!constant_.is_one() || factors_.empty()) {
            os << constant_.to_string();
            first = false;
        }
        for (const auto& [g, e] : factors_) {
            if (!first) os << "*";
            first = false;
            os << "(" << g.to_string() << ")";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

private:
    RationalFunction(Element c, FactorMap f) : constant_(std::move(c)), factors_(std::move(f)) {}

    void drop_zeros() {
        for (auto it = factors_.begin(); it != factors_.end();) {
            it = it->second == 0 ? factors_.erase(it) : std::next(it);
        }
    }

    RationalFunction add(const RationalFunction& b, bool subtract) const {
        if (!(field() == b.field())) throw FieldError("rational functions over different fields");
        // Common denominator: max of the negative exponents.
        FactorMap den;
        for (const auto* src : {&factors_, &b.factors_}) {
            for (const auto& [g, e] : *src) {
                if (e < 0) {
                    auto& slot = den[g];
                    slot = std::max(slot, -e);
                }
            }
        }
        auto cleared = [&den](const RationalFunction& f) {
            Polynomial acc = Polynomial::constant(f.constant_);
            for (const auto& [g, e] : f.factors_)
                if (e > 0) acc *= g.pow(static_cast<std::uint64_t>(e));
            for (const auto& [g, d] : den) {
                auto it = f.factors_.find(g);
                const long own = (it != f.factors_.end() && it->second < 0) ? -it->second : 0;
                acc *= g.pow(static_cast<std::uint64_t>(d - own));
            }
            return acc;
        };
        Polynomial num = subtract ? cleared(*this) - cleared(b) : cleared(*this) + cleared(b);
        if (num.is_zero()) throw RationalFunctionError("the result is the zero function");
        RationalFunction r = from_polynomial(num);
        for (const auto& [g, d] : den) r.factors_[g] -= d;
        r.drop_zeros();
        return r;
    }

    Element constant_;
    FactorMap factors_;
};

}  // namespace recip

#endif  // RECIP_RATFUN_HPP
