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

#pragma once

#include <span>

#include "norlund/rational.hpp"

namespace norlund {

inline Integer factorial(int n) {
    if (n < 0) {
        throw DomainError("factorial of negative integer");
    }
    Integer result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

/// Binomial coefficient by the multiplicative formula; every intermediate
/// division is exact. Out-of-range k yields 0.
inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Multinomial coefficient top! / (parts[0]! ... parts[m-1]!), computed as a
/// product of binomials so no division ever leaves the integers.
inline Integer multinomial(int top, std::span<const int> parts) {
    Integer result = 1;
    int remaining = top;
    for (int part : parts) {
        if (part < 0) {
            throw DomainError("multinomial with negative part");
        }
        result *= binomial(remaining, part);
        remaining -= part;
    }
    if (remaining != 0) {
        throw DomainError("multinomial parts do not sum to top index");
    }
    return result;
}

/// Falling factorial a (a-1) ... (a-k+1) = a!/(a-k)! for 0 <= k <= a.
inline Integer falling_factorial(int a, int k) {
    if (k < 0 || k > a) {
        throw DomainError("falling factorial out of range");
    }
    Integer result = 1;
    for (int i = 0; i < k; ++i) {
        result *= a - i;
    }
    return result;
}

/// Pochhammer symbol (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1.
inline Rational pochhammer(const Rational& a, int m) {
    if (m < 0) {
        throw DomainError("pochhammer with negative length");
    }
    Rational result = 1;
    for (int i = 0; i < m; ++i) {
        result *= a + i;
    }
    return result;
}

inline Integer pow2(int k) {
    if (k < 0) {
        throw DomainError("pow2 with negative exponent");
    }
    return Integer(1) << k;
}

}  // namespace norlund
