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
 * @file serialize.hpp
 * @brief JSON encodings. Requires nlohmann/json (json.hpp) on the include path.
 */

#ifndef RECIP_SERIALIZE_HPP
#define RECIP_SERIALIZE_HPP

#include <set>
#include <string>

#include <json.hpp>

#include "detline.hpp"
#include "ff.hpp"
#include "poly.hpp"
#include "ratfun.hpp"
#include "seqspace.hpp"
#include "symbols.hpp"

namespace recip {

using json = nlohmann::ordered_json;

/// F_p element -> integer; F_{p^d} element -> array of d integers, lowest first.
inline json to_json(const Element& a) {
    if (a.field().is_prime_field()) return a.value();
    return a.coeffs();
}

inline json to_json(const Polynomial& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

inline json to_json(const ClosedPoint& x) {
    if (x.is_infinity()) return "inf";
    return to_json(x.generator());
}

inline json to_json(const RationalFunction& f) {
    json factors = json::array();
    for (const auto& [g, e] : f.factors()) factors.push_back({{"gen", to_json(g)}, {"exp", e}});
    return {{"constant", to_json(f.constant_factor())}, {"factors", factors}};
}

inline json to_json(const LocalSymbolReport& r) {
    return {{"point", to_json(r.point)},   {"degree", r.point.degree()}, {"v_f", r.v_f},
            {"v_g", r.v_g},               {"index_f", r.index_f},       {"index_g", r.index_g},
            {"tame", to_json(r.tame)},    {"commutator", to_json(r.commutator)},
            {"value", to_json(r.value)}};
}

inline json to_json(const ReciprocityReport& r) {
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(to_json(p));
    json out = {{"law", r.law}};
    if (r.law == "hilbert") out["m"] = r.m;
    out["points"] = pts;
    out["product"] = to_json(r.product);
    out["passed"] = r.passed;
    return out;
}

inline json to_json(const CommutatorResult& r) {
    return {{"value", to_json(r.value)}, {"oracle", to_json(r.oracle)}, {"match", r.match}};
}

inline json to_json(const QuotientData& q) { return {{"incoming", q.incoming}, {"outgoing", q.outgoing}}; }

inline json to_json(const EventuallyPeriodicSet& s) {
    return {{"head", s.head_members()}, {"N0", s.n0()}, {"period", s.period()}, {"residues", s.residues()}};
}

/// Inverse of to_json(EventuallyPeriodicSet); throws SeqSpaceError on bad data.
inline EventuallyPeriodicSet periodic_set_from_json(const json& j) {
    try {
        return EventuallyPeriodicSet::from_parts(j.at("head").get<std::set<long>>(), j.at("N0").get<long>(),
                                                 j.at("period").get<long>(), j.at("residues").get<std::set<long>>());
    } catch (const json::exception& e) {
        throw SeqSpaceError(std::string("malformed index set: ") + e.what());
    }
}

inline json to_json(const GlkSide& s) {
    return {{"space", s.label},
            {"sigma_quotient", to_json(s.sigma_quotient)},
            {"tau_quotient", to_json(s.tau_quotient)},
            {"sigma_tau", to_json(s.sigma_tau)},
            {"tau_sigma", to_json(s.tau_sigma)},
            {"expected_sigma_tau", to_json(s.expected_sigma_tau)},
            {"expected_tau_sigma", to_json(s.expected_tau_sigma)},
            {"commutator", to_json(s.commutator)},
            {"index_sigma", s.index_sigma},
            {"index_tau", s.index_tau}};
}

inline json to_json(const GlkExample& e) {
    return {{"a", to_json(e.a)},
            {"b", to_json(e.b)},
            {"lambda", to_json(e.lambda)},
            {"mu", to_json(e.mu)},
            {"sides", {to_json(e.odd), to_json(e.even)}},
            {"passed", e.passed}};
}

}  // namespace recip

#endif  // RECIP_SERIALIZE_HPP
