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
 * @file symbols.hpp
 * @brief Local symbols at closed points of P^1 over F_p and the global
 * product laws.
 *
 * For f, g in F_p(t)^* and a closed point x:
 *
 *   commutator {f,g}_x = N_{k(x)/k}( (f^{v_x(g)} / g^{v_x(f)})(x) )
 *   tame       (f,g)_x = (-1)^{deg(x) v_x(f) v_x(g)} {f,g}_x
 *   Hilbert    (f,g)_x^{(p-1)/m}  in mu_m, for m | p - 1
 *   character  deg(x) v_x(f) mod n  (exponent of a fixed generator of mu_n)
 *
 * The global checks run over supp(f) u supp(g) u {inf}.
 */

#ifndef RECIP_SYMBOLS_HPP
#define RECIP_SYMBOLS_HPP

#include <algorithm>
#include <cstdint>
#include <future>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ff.hpp"
#include "ratfun.hpp"

namespace recip {

struct LocalSymbolReport {
    ClosedPoint point = ClosedPoint::infinity();
    long v_f = 0;
    long v_g = 0;
    long index_f = 0;  // deg(x) * v_f
    long index_g = 0;
    Element commutator;
    Element tame;
    /// The factor entering the global product: tame for Weil, the
    /// Hilbert value for the norm-residue law.
    Element value;
};

struct ReciprocityReport {
    std::string law;     // "weil" or "hilbert"
    std::uint64_t m = 0; // Hilbert exponent, 0 for Weil
    std::vector<LocalSymbolReport> points;
    Element product;
    bool passed = false;
};

enum class Execution { sequential, parallel };

/// (-1)^{a b c} in the prime field of f, from parities only.
inline Element sign_power(const Field& k, long a, long b, long c) {
    const bool odd = (a & 1) && (b & 1) && (c & 1);
    return odd ? -k.one() : k.one();
}

inline Element commutator_value(const RationalFunction& f, const RationalFunction& g, const ClosedPoint& x) {
    const long vf = f.valuation(x);
    const long vg = g.valuation(x);
    // Exponent arithmetic on the factored forms; the quotient is a unit at x.
    const RationalFunction ratio = f.pow(vg) / g.pow(vf);
    return ratio.residue(x).norm();
}

inline Element tame_symbol(const RationalFunction& f, const RationalFunction& g, const ClosedPoint& x) {
    return sign_power(f.field(), x.degree(), f.valuation(x), g.valuation(x)) * commutator_value(f, g, x);
}

inline void check_hilbert_exponent(const Field& k, std::uint64_t m) {
    const auto q = k.order_checked();
    if (m == 0 || (q - 1) % m != 0) {
        throw FieldError("m = " + std::to_string(m) + " does not divide q - 1 = " + std::to_string(q - 1));
    }
}

inline Element hilbert_symbol(const RationalFunction& f, const RationalFunction& g, const ClosedPoint& x,
                              std::uint64_t m) {
    check_hilbert_exponent(f.field(), m);
    return tame_symbol(f, g, x).unity_power(m);
}

inline LocalSymbolReport local_symbol(const RationalFunction& f, const RationalFunction& g, const ClosedPoint& x) {
    LocalSymbolReport r;
    r.point = x;
    r.v_f = f.valuation(x);
    r.v_g = g.valuation(x);
    r.index_f = x.degree() * r.v_f;
    r.index_g = x.degree() * r.v_g;
    r.commutator = commutator_value(f, g, x);
    r.tame = sign_power(f.field(), x.degree(), r.v_f, r.v_g) * r.commutator;
    r.value = r.tame;
    return r;
}

/// supp(f) u supp(g) u {inf}, in ClosedPoint order.
inline std::vector<ClosedPoint> joint_support(const RationalFunction& f, const RationalFunction& g) {
    std::vector<ClosedPoint> pts = f.support();
    for (auto& x : g.support()) pts.push_back(std::move(x));
    pts.push_back(ClosedPoint::infinity());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

namespace detail {

template <class Fn>
std::vector<LocalSymbolReport> per_point(const std::vector<ClosedPoint>& pts, Execution exec, Fn fn) {
    std::vector<LocalSymbolReport> out;
    out.reserve(pts.size());
    if (exec == Execution::parallel && pts.size() > 1) {
        std::vector<std::future<LocalSymbolReport>> jobs;
        jobs.reserve(pts.size());
        for (const auto& x : pts) jobs.push_back(std::async(std::launch::async, fn, x));
        for (auto& j : jobs) out.push_back(j.get());
    } else {
        for (const auto& x : pts) out.push_back(fn(x));
    }
    return out;
}

inline ReciprocityReport finish(std::string law, std::uint64_t m, std::vector<LocalSymbolReport> pts, const Field& k) {
    ReciprocityReport rep;
    rep.law = std::move(law);
    rep.m = m;
    rep.product = k.one();
    for (const auto& p : pts) rep.product *= p.value;
    rep.points = std::move(pts);
    rep.passed = rep.product.is_one();
    return rep;
}

}  // namespace detail

inline ReciprocityReport weil_check(const RationalFunction& f, const RationalFunction& g,
                                    Execution exec = Execution::sequential) {
    auto pts = detail::per_point(joint_support(f, g), exec,
                                 [&](const ClosedPoint& x) { return local_symbol(f, g, x); });
    return detail::finish("weil", 0, std::move(pts), f.field());
}

inline ReciprocityReport hilbert_check(const RationalFunction& f, const RationalFunction& g, std::uint64_t m,
                                       Execution exec = Execution::sequential) {
    check_hilbert_exponent(f.field(), m);
    auto pts = detail::per_point(joint_support(f, g), exec, [&](const ClosedPoint& x) {
        auto r = local_symbol(f, g, x);
        r.value = r.tame.unity_power(m);
        return r;
    });
    return detail::finish("hilbert", m, std::move(pts), f.field());
}

/// deg(x) v_x(f) mod n, in [0, n).
inline std::uint64_t character_value(const RationalFunction& f, const ClosedPoint& x, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("character order must be positive");
    const long e = x.degree() * f.valuation(x);
    const auto nn = static_cast<long>(n);
    return static_cast<std::uint64_t>(((e % nn) + nn) % nn);
}

/// Sum of character exponents over supp(f) u {inf}, mod n.
inline std::uint64_t character_check(const RationalFunction& f, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("character order must be positive");
    std::uint64_t s = 0;
    auto pts = f.support();
    if (pts.empty() || !pts.back().is_infinity()) pts.push_back(ClosedPoint::infinity());
    for (const auto& x : pts) s = (s + character_value(f, x, n)) % n;
    return s;
}

}  // namespace recip

#endif  // RECIP_SYMBOLS_HPP
