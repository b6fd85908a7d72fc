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
#include <set>

#include "support.hpp"

using namespace recip;
using EPS = EventuallyPeriodicSet;

namespace {

EPS random_set(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> n0d(1, 10), perd(1, 6);
    const long n0 = n0d(rng), period = perd(rng);
    std::set<long> head, res;
    for (long n = 1; n < n0; ++n)
        if (rng() % 2) head.insert(n);
    for (long r = 0; r < period; ++r)
        if (rng() % 2) res.insert(r);
    return EPS::from_parts(head, n0, period, res);
}

std::set<long> window(const EPS& s, long bound = 150) {
    const auto v = s.members_upto(bound);
    return {v.begin(), v.end()};
}

std::vector<MonomialSubspace> residue_family(long r) {
    std::vector<MonomialSubspace> fam;
    for (long i = 1; i <= r; ++i) fam.emplace_back(EPS::residue_class(i, r));
    return fam;
}

}  // namespace

TEST(PeriodicSet, AlgebraExamples) {
    const EPS evens = EPS::residue_class(0, 2), odds = EPS::residue_class(1, 2);
    EXPECT_EQ(evens.intersection(odds), EPS::empty());
    EXPECT_EQ(evens.set_union(odds), EPS::all());
    EXPECT_EQ(evens.set_union(EPS::finite({1})).difference(evens), EPS::finite({1}));
    EXPECT_TRUE(odds.contains(1));
    EXPECT_FALSE(odds.contains(0));
    EXPECT_EQ(evens.members_upto(7), (std::vector<long>{2, 4, 6}));
}

TEST(PeriodicSet, CanonicalForm) {
    // period 4 with residues {0, 2} collapses to evens
    const EPS a = EPS::from_parts({}, 1, 4, {0, 2});
    EXPECT_EQ(a, EPS::residue_class(0, 2));
    EXPECT_EQ(a.period(), 2);
    EXPECT_EQ(a.n0(), 1);
    const EPS b = EPS::from_parts({2, 4}, 5, 2, {0});
    EXPECT_EQ(b, EPS::residue_class(0, 2));
    EXPECT_EQ(EPS::progression(5, 3).head_members(), (std::set<long>{}));
    EXPECT_EQ(EPS::progression(5, 3).n0(), 3);
    EXPECT_THROW(EPS::from_parts({}, 0, 1, {}), SeqSpaceError);
    EXPECT_THROW(EPS::from_parts({3}, 2, 1, {}), SeqSpaceError);
    EXPECT_THROW(EPS::from_parts({}, 1, 2, {2}), SeqSpaceError);
    EXPECT_THROW(EPS::finite({0}), SeqSpaceError);
}

TEST(PeriodicSet, SizeAndFiniteness) {
    EXPECT_EQ(EPS::finite({1, 4, 9}).size(), 3);
    EXPECT_TRUE(EPS::empty().is_finite());
    EXPECT_TRUE(EPS::all().is_cofinite());
    EXPECT_THROW(EPS::all().size(), SeqSpaceError);
}

TEST(PeriodicSetProperty, OperationsMatchMembership) {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 300; ++i) {
        const EPS a = random_set(rng), b = random_set(rng);
        const auto wa = window(a), wb = window(b);
        std::set<long> u, n, d, x;
        for (long k = 1; k <= 150; ++k) {
            const bool ia = wa.count(k), ib = wb.count(k);
            if (ia || ib) u.insert(k);
            if (ia && ib) n.insert(k);
            if (ia && !ib) d.insert(k);
            if (ia != ib) x.insert(k);
        }
        EXPECT_EQ(window(a.set_union(b)), u);
        EXPECT_EQ(window(a.intersection(b)), n);
        EXPECT_EQ(window(a.difference(b)), d);
        EXPECT_EQ(window(a.symmetric_difference(b)), x);
        EXPECT_EQ(a.complement().complement(), a);
        // equality is canonical: rebuilding from parts gives the same value
        EXPECT_EQ(EPS::from_parts(a.head_members(), a.n0(), a.period(), a.residues()), a);
        EXPECT_EQ(window(a) == window(b), a == b);
    }
}

TEST(Commensurable, Examples) {
    const auto evens = MonomialSubspace::evens(), odds = MonomialSubspace::odds();
    const MonomialSubspace e1(evens.index_set().set_union(EPS::finite({1})));
    EXPECT_TRUE(commensurable(evens, e1));
    EXPECT_FALSE(commensurable(evens, odds));
    EXPECT_TRUE(commensurable(odds, odds));
    EXPECT_THROW(relative_dims(evens, odds), SeqSpaceError);
}

TEST(Commensurable, RelativeDimsExamples) {
    const auto evens = MonomialSubspace::evens();
    const MonomialSubspace e1(evens.index_set().set_union(EPS::finite({1})));
    EXPECT_EQ(relative_dims(e1, evens), std::make_pair(1L, 0L));
    EXPECT_EQ(relative_dims(evens, evens), std::make_pair(0L, 0L));
    const MonomialSubspace b(evens.index_set().difference(EPS::finite({2})).set_union(EPS::finite({1, 3})));
    EXPECT_EQ(relative_dims(evens, b), std::make_pair(1L, 2L));
}

TEST(CommensurableProperty, EquivalenceRelation) {
    std::mt19937_64 rng(103);
    int transitive_cases = 0;
    for (int i = 0; i < 300; ++i) {
        const MonomialSubspace a(random_set(rng));
        const MonomialSubspace b(a.index_set().symmetric_difference(EPS::finite({1 + static_cast<long>(rng() % 9)})));
        const MonomialSubspace c = (rng() % 2) ? MonomialSubspace(random_set(rng))
                                               : MonomialSubspace(b.index_set().set_union(EPS::finite({17, 23})));
        EXPECT_TRUE(commensurable(a, a));
        EXPECT_TRUE(commensurable(a, b));
        EXPECT_EQ(commensurable(b, c), commensurable(c, b));
        if (commensurable(a, b) && commensurable(b, c)) {
            EXPECT_TRUE(commensurable(a, c));
            ++transitive_cases;
        }
    }
    EXPECT_GT(transitive_cases, 100);
}

TEST(BlockIndex, Examples) {
    const Field k = Field::prime(7);
    EXPECT_EQ(index(BlockOperator::identity(k, 4), MonomialSubspace::odds()), 0);
    const BlockOperator s(Matrix::from_ints(k, {{0, 3}, {2, 0}}));
    EXPECT_EQ(quotient_dims(s, MonomialSubspace::odds()), std::make_pair(1L, 1L));
    EXPECT_EQ(index(s, MonomialSubspace::odds()), 0);
    EXPECT_THROW(BlockOperator(Matrix::from_ints(k, {{1, 2}, {2, 4}})), SeqSpaceError);
}

TEST(BlockIndexProperty, RankIndexMatchesTruncation) {
    std::mt19937_64 rng(107);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        const Field k = Field::prime(p);
        for (int i = 0; i < 40; ++i) {
            const auto s = gen::block(k, 1 + rng() % 6, rng);
            const MonomialSubspace v(random_set(rng));
            const auto dims = quotient_dims(s, v);
            EXPECT_EQ(dims, oracle::truncated_quotient_dims(s, v, 4));
            EXPECT_EQ(index(s, v), 0);
        }
    }
}

TEST(BlockIndexProperty, MonomialOperatorsMatchRelativeDims) {
    std::mt19937_64 rng(109);
    const Field k = Field::prime(5);
    for (int i = 0; i < 100; ++i) {
        const auto s = gen::monomial_block(k, 1 + rng() % 6, rng);
        const MonomialSubspace v(random_set(rng));
        const auto image = s.monomial_image(v);
        ASSERT_TRUE(image.has_value());
        EXPECT_EQ(relative_dims(v, *image), quotient_dims(s, v));
    }
    EXPECT_FALSE(BlockOperator(Matrix::from_ints(k, {{1, 1}, {0, 1}})).monomial_image(MonomialSubspace::odds()));
}

TEST(BlockIndexProperty, CompositionAndSplitting) {
    std::mt19937_64 rng(113);
    const Field k = Field::prime(7);
    for (int i = 0; i < 60; ++i) {
        const auto s = gen::block(k, 1 + rng() % 6, rng), r = gen::block(k, 1 + rng() % 6, rng);
        const MonomialSubspace v(random_set(rng));
        EXPECT_EQ(index(s * r, v), index(s, v) + index(r, v));
        // V+ = H + W with W = V+ n (residue class), H the rest
        const EPS cls = EPS::residue_class(static_cast<long>(rng() % 3), 3);
        const MonomialSubspace w(v.index_set().intersection(cls)), h(v.index_set().difference(cls));
        EXPECT_EQ(index(s, v), index(s, h) + index(s, w));
        EXPECT_TRUE(index_additivity_check(s, {h, w}).passed);
    }
}

TEST(BlockOperatorAlgebra, PaddingAndInverse) {
    std::mt19937_64 rng(127);
    const Field k = Field::prime(13);
    for (int i = 0; i < 20; ++i) {
        const auto s = gen::block(k, 2 + rng() % 4, rng);
        EXPECT_EQ(s * s.inverse(), BlockOperator::identity(k, 1));
        EXPECT_EQ(s.padded(s.n0() + 3), s);
    }
}

TEST(AdmissibleFamily, Examples) {
    const auto two = admissible_family(AffineRule::linear(2), 2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], MonomialSubspace::odds());
    EXPECT_EQ(two[1], MonomialSubspace::evens());
    const auto three = admissible_family(AffineRule::linear(3), 3);
    for (long i = 1; i <= 3; ++i) EXPECT_EQ(three[static_cast<std::size_t>(i - 1)].index_set(), EPS::residue_class(i, 3));
    EXPECT_THROW(admissible_family(AffineRule{1, 0, 0}, 2), AdmissibilityError);
    EXPECT_THROW(admissible_family(AffineRule::linear(3), 2), AdmissibilityError);
    EXPECT_THROW(admissible_family(AffineRule::linear(2), 0), SeqSpaceError);
    // rows shifted by a finite amount are still admissible
    EXPECT_NO_THROW(admissible_family(AffineRule{2, 1, 4}, 2));
}

TEST(AdmissibleFamily, IndexAdditivityExamples) {
    const Field k = Field::prime(7);
    EXPECT_TRUE(index_additivity_check(BlockOperator::identity(k, 3), residue_family(3)).passed);
    const BlockOperator s(Matrix::from_ints(k, {{0, 3}, {2, 0}}));
    const auto rep = index_additivity_check(s, residue_family(2));
    EXPECT_TRUE(rep.passed);
    EXPECT_TRUE(rep.admissible);
    EXPECT_EQ(rep.part_indices, (std::vector<long>{0, 0}));
    EXPECT_THROW(index_additivity_check(s, {MonomialSubspace::whole(), MonomialSubspace::odds()}),
                 AdmissibilityError);
}

TEST(AdmissibleFamilyProperty, IndicesSumToZero) {
    std::mt19937_64 rng(131);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        const Field k = Field::prime(p);
        for (int i = 0; i < 25; ++i) {
            const long r = 2 + static_cast<long>(rng() % 3);
            const auto fam = admissible_family(AffineRule::linear(r), r);
            const auto s = gen::block(k, 1 + rng() % 6, rng);
            const auto rep = index_additivity_check(s, fam);
            EXPECT_TRUE(rep.passed);
            EXPECT_EQ(rep.total, 0);
            for (std::size_t j = 0; j < fam.size(); ++j)
                EXPECT_EQ(oracle::truncated_quotient_dims(s, fam[j], 3), quotient_dims(s, fam[j]));
        }
    }
}
