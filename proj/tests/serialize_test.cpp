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

#include <gtest/gtest.h>

#include <random>

#include "recip/serialize.hpp"
#include "support.hpp"

using namespace recip;

TEST(Json, FieldElementsAndPolynomials) {
    const Field k = Field::prime(5);
    EXPECT_EQ(to_json(k.from_int(3)), json(3));
    const Field f9 = Field::extension_unchecked(3, {1, 0, 1});
    EXPECT_EQ(to_json(f9.generator()), json::parse("[0,1]"));
    EXPECT_EQ(to_json(Polynomial::from_ints(k, {1, 0, 4})), json::parse("[1,0,4]"));
    EXPECT_EQ(to_json(ClosedPoint::infinity()), json("inf"));
}

TEST(Json, RationalFunction) {
    const Field k = Field::prime(3);
    const auto f = parse_rational("2*(t^2+1)/t", k);
    EXPECT_EQ(to_json(f), json::parse(R"({"constant":2,"factors":[{"gen":[0,1],"exp":-1},{"gen":[1,0,1],"exp":1}]})"));
}

TEST(Json, ReciprocityReport) {
    const Field k = Field::prime(5);
    const auto j = to_json(weil_check(parse_rational("t", k), parse_rational("1-t", k)));
    EXPECT_EQ(j["law"], "weil");
    EXPECT_FALSE(j.contains("m"));
    EXPECT_EQ(j["product"], 1);
    EXPECT_EQ(j["passed"], true);
    ASSERT_EQ(j["points"].size(), 3u);
    for (const auto* key : {"point", "v_f", "v_g", "tame", "commutator"}) EXPECT_TRUE(j["points"][0].contains(key));
    const auto h = to_json(hilbert_check(parse_rational("t", k), parse_rational("1-t", k), 2));
    EXPECT_EQ(h["m"], 2);
}

TEST(Json, CommutatorResult) {
    const Field k = Field::prime(7);
    const auto j = to_json(commutator_check(parse_rational("t", k), parse_rational("3", k)));
    EXPECT_EQ(j, json::parse(R"({"value":5,"oracle":5,"match":true})"));
}

TEST(Json, PeriodicSetRoundTrip) {
    std::mt19937_64 rng(311);
    for (int i = 0; i < 200; ++i) {
        std::set<long> head, res;
        const long n0 = 1 + static_cast<long>(rng() % 8), period = 1 + static_cast<long>(rng() % 5);
        for (long n = 1; n < n0; ++n)
            if (rng() % 2) head.insert(n);
        for (long r = 0; r < period; ++r)
            if (rng() % 2) res.insert(r);
        const auto s = EventuallyPeriodicSet::from_parts(head, n0, period, res);
        EXPECT_EQ(periodic_set_from_json(to_json(s)), s);
    }
    const auto odds = to_json(EventuallyPeriodicSet::residue_class(1, 2));
    EXPECT_EQ(odds, json::parse(R"({"head":[],"N0":1,"period":2,"residues":[1]})"));
    EXPECT_THROW(periodic_set_from_json(json::parse(R"({"head":[]})")), SeqSpaceError);
    EXPECT_THROW(periodic_set_from_json(json::parse(R"({"head":[],"N0":0,"period":1,"residues":[]})")),
                 SeqSpaceError);
}

TEST(Json, GoldenExample) {
    const auto j = to_json(glk_example(Field::prime(7), 2, 3, 4));
    EXPECT_EQ(j["mu"], 6);
    EXPECT_EQ(j["sides"][0]["sigma_tau"], 3);
    EXPECT_EQ(j["sides"][1]["commutator"], 1);
    EXPECT_EQ(j["passed"], true);
}
