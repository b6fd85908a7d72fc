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
 * @file laurent.hpp
 * @brief Lazy Laurent expansion of a rational function at t = 0.
 */

#ifndef RECIP_LAURENT_HPP
#define RECIP_LAURENT_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "ff.hpp"
#include "poly.hpp"
#include "ratfun.hpp"

namespace recip {

/// f = t^v * num/den with den(0) != 0; coefficients are produced by long
/// division on demand and memoized. Copies share the memo.
class LaurentExpansion {
public:
    explicit LaurentExpansion(const RationalFunction& f) : state_(std::make_shared<State>(f)) {}

    const RationalFunction& source() const { return state_->source; }
    long valuation() const { return state_->v; }

    /// Coefficient of t^n.
    Element coeff(long n) const {
        const State& s = *state_;
        if (n < s.v) return s.source.field().zero();
        const auto k = static_cast<std::size_t>(n - s.v);
        std::lock_guard<std::mutex> lock(s.mu);
        while (s.unit.size() <= k) {
            const std::size_t j = s.unit.size();
            Element acc = s.num.coeff(j);
            for (std::size_t i = 1; i <= j && i < s.den.coeffs().size(); ++i) acc -= s.den.coeff(i) * s.unit[j - i];
            s.unit.push_back(acc * s.den0_inv);
        }
        return s.unit[k];
    }

    /// c_v, ..., c_{v+count-1}.
    std::vector<Element> leading_coeffs(std::size_t count) const {
        std::vector<Element> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(coeff(valuation() + static_cast<long>(i)));
        return out;
    }

private:
    struct State {
        explicit State(const RationalFunction& f) : source(f), num(Polynomial::constant(f.constant_factor())),
                                                    den(Polynomial::one(f.field())) {
            const Polynomial t = Polynomial::x(f.field());
            for (const auto& [g, e] : f.factors()) {
                if (g == t) {
                    v = e;
                } else if (e > 0) {
                    num = num * g.pow(static_cast<std::uint64_t>(e));
                } else {
                    den = den * g.pow(static_cast<std::uint64_t>(-e));
                }
            }
            den0_inv = den.coeff(0).inv();
        }
        RationalFunction source;
        long v = 0;
        Polynomial num;
        Polynomial den;
        Element den0_inv;
        mutable std::mutex mu;
        mutable std::vector<Element> unit;
    };
    std::shared_ptr<const State> state_;
};

}  // namespace recip

#endif  // RECIP_LAURENT_HPP
