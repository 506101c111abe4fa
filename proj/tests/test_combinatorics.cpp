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

#include "norlund/combinatorics.hpp"

#include <vector>

#include <gtest/gtest.h>

namespace {

using norlund::Integer;
using norlund::Rational;
using norlund::binomial;
using norlund::factorial;
using norlund::falling_factorial;
using norlund::make_rational;
using norlund::multinomial;
using norlund::pochhammer;
using norlund::pow2;

TEST(Combinatorics, Factorial) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(1), 1);
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
    EXPECT_THROW(factorial(-1), norlund::DomainError);
}

TEST(Combinatorics, BinomialMatchesPascalTriangle) {
    std::vector<std::vector<Integer>> pascal = {{1}};
    for (int n = 1; n <= 25; ++n) {
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] = pascal.back()[static_cast<std::size_t>(k - 1)] +
                                               pascal.back()[static_cast<std::size_t>(k)];
        }
        pascal.push_back(std::move(row));
    }
    for (int n = 0; n <= 25; ++n) {
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(binomial(n, k), pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
        }
    }
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(5, 6), 0);
}

TEST(Combinatorics, Multinomial) {
    EXPECT_EQ(multinomial(0, std::vector<int>{}), 1);
    EXPECT_EQ(multinomial(4, std::vector<int>{2, 2}), 6);
    EXPECT_EQ(multinomial(6, std::vector<int>{4, 2, 0}), 15);
    EXPECT_EQ(multinomial(6, std::vector<int>{2, 2, 2}), 90);
    EXPECT_THROW(multinomial(4, std::vector<int>{2, 1}), norlund::DomainError);
    EXPECT_THROW(multinomial(4, std::vector<int>{5, -1}), norlund::DomainError);
}

TEST(Combinatorics, MultinomialMatchesFactorialRatio) {
    const std::vector<std::vector<int>> cases = {
        {1, 2, 3}, {0, 0, 6}, {4, 4, 4}, {10, 0, 2, 3}, {7, 1, 1, 1}};
    for (const auto& parts : cases) {
        int top = 0;
        Integer denom = 1;
        for (int part : parts) {
            top += part;
            denom *= factorial(part);
        }
        EXPECT_EQ(multinomial(top, parts), factorial(top) / denom);
    }
}

TEST(Combinatorics, FallingFactorial) {
    EXPECT_EQ(falling_factorial(5, 0), 1);
    EXPECT_EQ(falling_factorial(5, 2), 20);
    EXPECT_EQ(falling_factorial(5, 5), 120);
    EXPECT_THROW(falling_factorial(3, 4), norlund::DomainError);
    EXPECT_THROW(falling_factorial(3, -1), norlund::DomainError);
}

TEST(Combinatorics, Pochhammer) {
    EXPECT_EQ(pochhammer(Rational(1), 5), Rational(120));
    EXPECT_EQ(pochhammer(Rational(2), 3), Rational(24));  // (2)_3 = 4!
    EXPECT_EQ(pochhammer(Rational(-3), 5), Rational(0));  // passes through zero
    EXPECT_EQ(pochhammer(make_rational(1, 2), 2), make_rational(3, 4));
    EXPECT_EQ(pochhammer(Rational(7), 0), Rational(1));
    EXPECT_THROW(pochhammer(Rational(1), -1), norlund::DomainError);
}

TEST(Combinatorics, PowerOfTwo) {
    EXPECT_EQ(pow2(0), 1);
    EXPECT_EQ(pow2(10), 1024);
    EXPECT_EQ(pow2(100), Integer("1267650600228229401496703205376"));
    EXPECT_THROW(pow2(-1), norlund::DomainError);
}

}  // namespace
