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

#include <utility>
#include <vector>

#include "norlund/combinatorics.hpp"
#include "norlund/poly.hpp"

namespace norlund {

/// Meixner-Pollaczek polynomials P_n^(1)(x; pi/2) for n = 0..max_degree.
/// Only this member of the family is built: it is the one whose coefficients
/// are all rational. P_n has exact degree n, leading coefficient 2^n/n!, and
/// only powers of x congruent to n mod 2.
struct MPFamily {
    std::vector<RationalPoly> polys;

    int max_degree() const { return static_cast<int>(polys.size()) - 1; }

    const RationalPoly& poly(int n) const {
        if (n < 0 || n > max_degree()) {
            throw DomainError("meixner-pollaczek degree out of range");
        }
        return polys[static_cast<std::size_t>(n)];
    }

    /// Coefficient p_k^(n) of x^k in P_n; zero for k > n or k of wrong parity.
    Rational coeff(int n, int k) const { return poly(n).coefficient(k); }
};

/// Builds the family from P_0 = 1, P_1 = 2x and the three-term recurrence
/// (n+1) P_{n+1} - 2x P_n + (n+1) P_{n-1} = 0.
inline MPFamily mp_family(int max_degree) {
    if (max_degree < 0) {
        throw DomainError("meixner-pollaczek family with negative degree");
    }
    MPFamily family;
    family.polys.reserve(static_cast<std::size_t>(max_degree) + 1);
    family.polys.push_back(RationalPoly::constant(1));
    if (max_degree == 0) {
        return family;
    }
    family.polys.push_back(RationalPoly({0, 2}));
    const RationalPoly two_x({0, 2});
    for (int n = 1; n < max_degree; ++n) {
        RationalPoly next = two_x * family.polys[static_cast<std::size_t>(n)] -
                            Rational(n + 1) * family.polys[static_cast<std::size_t>(n - 1)];
        next /= Rational(n + 1);
        family.polys.push_back(std::move(next));
    }
    return family;
}

inline Rational mp_coeff(int n, int k) {
    if (n < 0) {
        throw DomainError("meixner-pollaczek degree out of range");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    return mp_family(n).coeff(n, k);
}

/// Real form of (2i)^{1-N} P_{N-1}(-i u): the coefficient of u^k picks up the
/// factor (-1)^k i^{k-N+1} / 2^{N-1}, and k-N+1 is even wherever p_k^{(N-1)}
/// is nonzero, so i^{k-N+1} collapses to a sign and no complex arithmetic is
/// needed. The polynomial argument must be P_{N-1}; a nonzero coefficient of
/// the wrong parity trips ParityViolation.
inline RationalPoly mp_real_transform(const RationalPoly& p_n_minus_1, int N) {
    if (N < 1) {
        throw DomainError("transform requires N >= 1");
    }
    const Rational scale = make_rational(1, pow2(N - 1));
    std::vector<Rational> coeffs(static_cast<std::size_t>(p_n_minus_1.degree() + 1));
    for (int k = 0; k <= p_n_minus_1.degree(); ++k) {
        const Rational& c = p_n_minus_1.coefficient(k);
        if (c == 0) {
            continue;
        }
        const int e = k - N + 1;
        if (e % 2 != 0) {
            throw ParityViolation("coefficient of wrong parity in P_{N-1}");
        }
        // i^e = (-1)^{e/2} for even e, including negative e.
        int sign = ((e / 2) % 2 + 2) % 2 == 0 ? 1 : -1;
        if (k % 2 != 0) {
            sign = -sign;
        }
        coeffs[static_cast<std::size_t>(k)] = c * sign * scale;
    }
    return RationalPoly(std::move(coeffs));
}

inline RationalPoly mp_real_transform(int N) {
    if (N < 1) {
        throw DomainError("transform requires N >= 1");
    }
    return mp_real_transform(mp_family(N - 1).poly(N - 1), N);
}

}  // namespace norlund
