/*
   Copyright 2026 The norlund authors

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

#include "norlund/umbral.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace {

using norlund::Rational;
using norlund::UmbralPoly;
using norlund::eval_classical;
using norlund::eval_lucas;
using norlund::lucas_umbral_product;
using norlund::make_rational;
using norlund::rising_factorial_umbral;
using norlund::umbral_mul;

UmbralPoly random_umbral(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> coeffs(static_cast<std::size_t>(max_degree) + 1);
    for (auto& c : coeffs) {
        c = make_rational(num(rng), den(rng));
    }
    return UmbralPoly(coeffs);
}

TEST(UmbralPoly, CanonicalTrimAndAccess) {
    const UmbralPoly u({0, 1, 0, 0});
    EXPECT_EQ(u.degree(), 1);
    EXPECT_EQ(u.coefficient(1), 1);
    EXPECT_EQ(u.coefficient(5), 0);
    EXPECT_EQ(UmbralPoly().degree(), -1);
    EXPECT_THROW(UmbralPoly::monomial(-1), norlund::DomainError);
}

TEST(UmbralMul, Distributivity) {
    const UmbralPoly beta = UmbralPoly::monomial(1);
    const UmbralPoly one_plus_beta({1, 1});
    EXPECT_EQ(umbral_mul(beta, one_plus_beta), UmbralPoly({0, 1, 1}));
}

TEST(UmbralMul, Identity) {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 20; ++round) {
        const UmbralPoly u = random_umbral(rng, 8);
        EXPECT_EQ(umbral_mul(u, UmbralPoly::constant(1)), u);
    }
}

TEST(UmbralMul, ThreeFactorExpansion) {
    // u^2 (1+u)(2+u) = 2u^2 + 3u^3 + u^4
    const UmbralPoly product = umbral_mul(
        umbral_mul(UmbralPoly::monomial(2), UmbralPoly({1, 1})), UmbralPoly({2, 1}));
    EXPECT_EQ(product, UmbralPoly({0, 0, 2, 3, 1}));
}

TEST(RisingFactorialUmbral, SmallCases) {
    EXPECT_EQ(rising_factorial_umbral(0), UmbralPoly({1}));
    EXPECT_EQ(rising_factorial_umbral(1), UmbralPoly({1, 1}));
    EXPECT_EQ(rising_factorial_umbral(2), UmbralPoly({2, 3, 1}));
    EXPECT_THROW(rising_factorial_umbral(-1), norlund::DomainError);
}

TEST(EvalLucas, ExpandedLucasExample) {
    // u^2 + u^3 -> B_2/2 + B_3/3 = 1/12; with Lucas's prefactor -6 for
    // (n, p) = (3, 2) this lands on the generalized Bernoulli value -1/2.
    const Rational value = eval_lucas(UmbralPoly({0, 0, 1, 1}));
    EXPECT_EQ(value, make_rational(1, 12));
    EXPECT_EQ(Rational(-6) * value, make_rational(-1, 2));
}

TEST(EvalLucas, ConstantsPassThrough) {
    EXPECT_EQ(eval_lucas(UmbralPoly::constant(5)), 5);
    EXPECT_EQ(eval_lucas(UmbralPoly()), 0);
}

TEST(EvalLucas, HigherPowers) {
    // u^3 + u^4 -> 0 + (-1/30)/4
    EXPECT_EQ(eval_lucas(UmbralPoly({0, 0, 0, 1, 1})), make_rational(-1, 120));
}

TEST(EvalLucas, RequiresLongEnoughTable) {
    const std::vector<Rational> too_short = {1, make_rational(-1, 2)};
    EXPECT_THROW(eval_lucas(UmbralPoly({0, 0, 1}), too_short), norlund::DomainError);
}

TEST(EvalClassical, SmallCases) {
    EXPECT_EQ(eval_classical(UmbralPoly::monomial(1)), make_rational(-1, 2));
    EXPECT_EQ(eval_classical(UmbralPoly::constant(1)), 1);
    // (1+B)^2 = 1 + 2B + B^2 -> 1 - 1 + 1/6
    EXPECT_EQ(eval_classical(umbral_mul(UmbralPoly({1, 1}), UmbralPoly({1, 1}))),
              make_rational(1, 6));
}

TEST(EvalMaps, SubstitutionOnlyAfterExpansion) {
    // Evaluating factors separately and multiplying is not the same map:
    // expanded u^2(1+u) evaluates to 1/12, the termwise product to 1/24.
    const UmbralPoly square = UmbralPoly::monomial(2);
    const UmbralPoly shifted({1, 1});
    const Rational expanded = eval_lucas(umbral_mul(square, shifted));
    const Rational termwise = eval_lucas(square) * eval_lucas(shifted);
    EXPECT_EQ(expanded, make_rational(1, 12));
    EXPECT_EQ(termwise, make_rational(1, 24));
    EXPECT_NE(expanded, termwise);
}

TEST(EvalMaps, Linearity) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int round = 0; round < 40; ++round) {
        const UmbralPoly u = random_umbral(rng, 9);
        const UmbralPoly v = random_umbral(rng, 9);
        const Rational a = make_rational(num(rng), den(rng));
        const Rational b = make_rational(num(rng), den(rng));
        const UmbralPoly combo = u * a + v * b;
        EXPECT_EQ(eval_lucas(combo), a * eval_lucas(u) + b * eval_lucas(v));
        EXPECT_EQ(eval_classical(combo), a * eval_classical(u) + b * eval_classical(v));
    }
}

TEST(EvalClassical, ReflectionIdentity) {
    // f(-B) = f(B) + f'(0) for 50 random polynomials of degree <= 10.
    std::mt19937_64 rng(9);
    for (int round = 0; round < 50; ++round) {
        const UmbralPoly f = random_umbral(rng, 10);
        std::vector<Rational> reflected = f.coefficients();
        for (std::size_t j = 1; j < reflected.size(); j += 2) {
            reflected[j] = -reflected[j];
        }
        EXPECT_EQ(eval_classical(UmbralPoly(reflected)),
                  eval_classical(f) + f.coefficient(1))
            << "failed on round " << round;
    }
}

TEST(LucasUmbralProduct, MatchesHandExpansions) {
    EXPECT_EQ(lucas_umbral_product(3, 2), UmbralPoly({0, 0, 1, 1}));
    EXPECT_EQ(lucas_umbral_product(1, 1), UmbralPoly::monomial(1));
    EXPECT_EQ(lucas_umbral_product(4, 3), UmbralPoly({0, 0, 2, 3, 1}));
}

TEST(LucasUmbralProduct, DomainGuard) {
    EXPECT_THROW(lucas_umbral_product(2, 3), norlund::DomainError);
    EXPECT_THROW(lucas_umbral_product(3, 0), norlund::DomainError);
}

TEST(LucasUmbralProduct, MinimumExponentIsPositive) {
    // The m(0) = 1 convention is never load-bearing: every umbral product
    // fed to eval_lucas keeps its lowest exponent >= 1.
    for (int p = 1; p <= 8; ++p) {
        for (int n = p; n <= p + 8; ++n) {
            EXPECT_EQ(lucas_umbral_product(n, p).coefficient(0), 0);
        }
    }
}

}  // namespace
