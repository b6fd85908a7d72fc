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

#include "support.hpp"

using namespace recip;

namespace {

Field f9() { return Field::extension_unchecked(3, {1, 0, 1}); }

}  // namespace

TEST(Field, PrimeFieldBasics) {
    const Field k = Field::prime(5);
    EXPECT_EQ(k.from_int(2).inv(), k.from_int(3));
    EXPECT_TRUE(k.from_int(4).pow(0).is_one());
    EXPECT_EQ(k.from_int(-1), k.from_int(4));
    EXPECT_EQ(k.from_int(3).value(), 3u);
}

TEST(Field, RejectsBadCharacteristic) {
    EXPECT_THROW(Field::prime(4), FieldError);
    EXPECT_THROW(Field::prime(1), FieldError);
    EXPECT_THROW(Field::prime(2147483659ULL), FieldError);
    EXPECT_NO_THROW(Field::prime(2147483647ULL));
}

TEST(Field, LargePrimeArithmetic) {
    const Field k = Field::prime(2147483647ULL);
    const Element a = k.from_int(2147483646);
    EXPECT_TRUE((a * a).is_one());
    EXPECT_TRUE((a.pow(-3) * a.pow(3)).is_one());
}

TEST(Field, ExtensionSquareOfGenerator) {
    const Field k = f9();
    const Element x = k.generator();
    EXPECT_EQ(x * x, k.from_int(2));
}

TEST(Field, MakeExtensionChecksIrreducibility) {
    const Field k = Field::prime(3);
    EXPECT_NO_THROW(make_extension(Polynomial::from_ints(k, {1, 0, 1})));
    EXPECT_THROW(make_extension(Polynomial::from_ints(k, {2, 0, 1})), FieldError);
}

TEST(Field, NormExamples) {
    EXPECT_TRUE(f9().generator().norm().is_one());
    EXPECT_TRUE(f9().one().norm().is_one());
    const Field f4 = Field::extension_unchecked(2, {1, 1, 1});
    EXPECT_TRUE(f4.generator().norm().is_one());
}

TEST(Field, UnityPowerExamples) {
    const Field f5 = Field::prime(5);
    EXPECT_EQ(f5.from_int(2).unity_power(4), f5.from_int(2));
    EXPECT_TRUE(f5.one().unity_power(2).is_one());
    const Field f13 = Field::prime(13);
    EXPECT_EQ(f13.from_int(2).unity_power(3), f13.from_int(3));
    EXPECT_THROW(f13.from_int(2).unity_power(5), FieldError);
}

namespace {

// Every extension with q^d <= 81 built from the lexicographically first modulus.
std::vector<Field> small_extensions() {
    std::vector<Field> out;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        std::uint64_t q = p;
        for (int d = 2; q * p <= 81; ++d) {
            q *= p;
            out.push_back(make_extension(find_irreducible(Field::prime(p), d)));
        }
    }
    return out;
}

std::vector<Element> all_elements(const Field& k) {
    std::vector<Element> out;
    for (std::uint64_t i = 0; i < k.order_checked(); ++i) out.push_back(detail::element_by_index(k, i));
    return out;
}

}  // namespace

TEST(FieldProperty, NormMatchesConjugateProduct) {
    for (const Field& k : small_extensions()) {
        const auto p = static_cast<std::int64_t>(k.characteristic());
        oracle::Vec m(k.modulus().begin(), k.modulus().end());
        const oracle::Ext ext{p, m};
        for (const Element& a : all_elements(k)) {
            if (a.is_zero()) continue;
            oracle::Vec v(a.coeffs().begin(), a.coeffs().end());
            oracle::trim(v);
            const Element n = a.norm();
            ASSERT_TRUE(n.in_prime_field());
            EXPECT_EQ(static_cast<std::int64_t>(n.coeffs()[0]), ext.norm(v)) << k.to_string() << " " << a;
        }
    }
}

TEST(FieldProperty, NormIsMultiplicativeAndLandsInBase) {
    std::mt19937_64 rng(11);
    for (const Field& k : small_extensions()) {
        const Field base = k.prime_subfield();
        for (int i = 0; i < 40; ++i) {
            const Element a = detail::random_element(k, rng);
            const Element b = detail::random_element(k, rng);
            if (a.is_zero() || b.is_zero()) continue;
            EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
            EXPECT_TRUE(a.norm().cast_to(base).pow_u(k.characteristic() - 1).is_one());
        }
    }
}

TEST(FieldProperty, FieldAxiomsOnF27) {
    const Field k = make_extension(find_irreducible(Field::prime(3), 3));
    const auto els = all_elements(k);
    for (const auto& a : els) {
        if (a.is_zero()) continue;
        EXPECT_TRUE((a * a.inv()).is_one());
        EXPECT_TRUE(a.pow_u(26).is_one());
        EXPECT_EQ(a.frobenius(), a * a * a);
    }
}

TEST(FieldProperty, UnityPowerHasOrderDividingM) {
    for (std::uint64_t p : {5, 7, 13}) {
        const Field k = Field::prime(p);
        for (std::uint64_t m = 1; m < p; ++m) {
            if ((p - 1) % m) continue;
            for (std::uint64_t a = 1; a < p; ++a)
                EXPECT_TRUE(k.from_int(static_cast<std::int64_t>(a)).unity_power(m).pow_u(m).is_one());
        }
    }
}
