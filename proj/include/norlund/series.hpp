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

#include <algorithm>
#include <utility>
#include <vector>

#include "norlund/combinatorics.hpp"
#include "norlund/rational.hpp"

namespace norlund {

/// Formal power series over exact rationals, truncated at an explicit order.
/// A series of truncation order T stores exactly the coefficients c_0..c_T;
/// arithmetic on two series truncates to the shorter order, so a value never
/// claims more precision than both operands carry.
class TruncatedSeries {
   public:
    /// The truncation order is implied by the coefficient count (T = size-1).
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw DomainError("series needs at least the constant coefficient");
        }
    }

    static TruncatedSeries constant(const Rational& c, int order) {
        if (order < 0) {
            throw DomainError("negative truncation order");
        }
        std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
        coeffs[0] = c;
        return TruncatedSeries(std::move(coeffs));
    }

    static TruncatedSeries one(int order) { return constant(1, order); }

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int k) const {
        if (k < 0 || k > truncation_order()) {
            throw DomainError("series coefficient index out of range");
        }
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

   private:
    std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at min(T_a, T_b).
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.truncation_order(), b.truncation_order());
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Rational sum = 0;
        for (int j = 0; j <= k; ++j) {
            sum += a.coeff(j) * b.coeff(k - j);
        }
        coeffs[static_cast<std::size_t>(k)] = std::move(sum);
    }
    return TruncatedSeries(std::move(coeffs));
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}

/// Multiplicative inverse through the truncation order. Requires a nonzero
/// constant term.
inline TruncatedSeries series_invert(const TruncatedSeries& a) {
    if (a.coeff(0) == 0) {
        throw ZeroConstantTerm("series inversion requires a nonzero constant term");
    }
    const int order = a.truncation_order();
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
    coeffs[0] = Rational(1) / a.coeff(0);
    for (int k = 1; k <= order; ++k) {
        Rational sum = 0;
        for (int j = 1; j <= k; ++j) {
            sum += a.coeff(j) * coeffs[static_cast<std::size_t>(k - j)];
        }
        coeffs[static_cast<std::size_t>(k)] = -sum / a.coeff(0);
    }
    return TruncatedSeries(std::move(coeffs));
}

/// p-th power by binary exponentiation; p = 0 yields the unit series at the
/// operand's truncation order.
inline TruncatedSeries series_pow(const TruncatedSeries& a, int p) {
    if (p < 0) {
        throw DomainError("series power with negative exponent");
    }
    TruncatedSeries result = TruncatedSeries::one(a.truncation_order());
    TruncatedSeries base = a;
    while (p > 0) {
        if (p & 1) {
            result = series_mul(result, base);
        }
        p >>= 1;
        if (p > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

/// z/(e^z - 1) truncated at order T, computed by inverting the series with
/// coefficients 1/(k+1)!. The n-th coefficient is B_n/n!.
inline TruncatedSeries bernoulli_egf(int T) {
    if (T < 0) {
        throw DomainError("negative truncation order");
    }
    std::vector<Rational> denom(static_cast<std::size_t>(T) + 1);
    Integer fact = 1;  // (k+1)!
    for (int k = 0; k <= T; ++k) {
        fact *= k + 1;
        denom[static_cast<std::size_t>(k)] = make_rational(1, fact);
    }
    return series_invert(TruncatedSeries(std::move(denom)));
}

/// The classical Bernoulli numbers B_0..B_max_n, read off bernoulli_egf.
inline std::vector<Rational> bernoulli_row(int max_n) {
    const TruncatedSeries egf = bernoulli_egf(max_n);
    std::vector<Rational> row(static_cast<std::size_t>(max_n) + 1);
    Integer fact = 1;
    for (int n = 0; n <= max_n; ++n) {
        if (n > 1) {
            fact *= n;
        }
        row[static_cast<std::size_t>(n)] = egf.coeff(n) * fact;
    }
    return row;
}

}  // namespace norlund
