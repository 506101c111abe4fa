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

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "norlund/rational.hpp"
#include "norlund/series.hpp"

namespace norlund {

/// Polynomial in an anonymous umbra symbol. The symbol has no value of its
/// own; a linear evaluation map is applied only after the expression has been
/// fully expanded. Structurally this is a dense rational polynomial, kept as
/// a separate type so ring operations and evaluation maps cannot be mixed up
/// with ordinary polynomials in a real variable.
class UmbralPoly {
   public:
    UmbralPoly() = default;
    UmbralPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit UmbralPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UmbralPoly constant(const Rational& c) { return UmbralPoly({c}); }

    static UmbralPoly monomial(int j, const Rational& c = 1) {
        if (j < 0) {
            throw DomainError("umbral monomial with negative exponent");
        }
        std::vector<Rational> coeffs(static_cast<std::size_t>(j) + 1);
        coeffs.back() = c;
        return UmbralPoly(std::move(coeffs));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coefficient(int j) const {
        if (j < 0 || j > degree()) {
            return 0;
        }
        return coeffs_[static_cast<std::size_t>(j)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    UmbralPoly& operator+=(const UmbralPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] += rhs.coeffs_[i];
        }
        trim();
        return *this;
    }

    UmbralPoly& operator*=(const Rational& s) {
        for (auto& c : coeffs_) {
            c *= s;
        }
        trim();
        return *this;
    }

    friend UmbralPoly operator+(UmbralPoly a, const UmbralPoly& b) { return a += b; }
    friend UmbralPoly operator*(UmbralPoly a, const Rational& s) { return a *= s; }
    friend UmbralPoly operator*(const Rational& s, UmbralPoly a) { return a *= s; }

    bool operator==(const UmbralPoly&) const = default;

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

/// Coefficient convolution; expansion happens here, before any evaluation.
inline UmbralPoly umbral_mul(const UmbralPoly& a, const UmbralPoly& b) {
    if (a.degree() < 0 || b.degree() < 0) {
        return UmbralPoly();
    }
    std::vector<Rational> product(
        static_cast<std::size_t>(a.degree() + b.degree()) + 1);
    for (int i = 0; i <= a.degree(); ++i) {
        for (int j = 0; j <= b.degree(); ++j) {
            product[static_cast<std::size_t>(i + j)] += a.coefficient(i) * b.coefficient(j);
        }
    }
    return UmbralPoly(std::move(product));
}

inline UmbralPoly operator*(const UmbralPoly& a, const UmbralPoly& b) {
    return umbral_mul(a, b);
}

/// Rising factorial (u+1)(u+2)...(u+m) in the umbra u; m = 0 is the empty
/// product 1.
inline UmbralPoly rising_factorial_umbral(int m) {
    if (m < 0) {
        throw DomainError("rising factorial with negative length");
    }
    UmbralPoly result = UmbralPoly::constant(1);
    for (int t = 1; t <= m; ++t) {
        result = umbral_mul(result, UmbralPoly({Rational(t), 1}));
    }
    return result;
}

namespace detail {

inline std::vector<Rational> bernoulli_prefix(int max_index) {
    return bernoulli_row(max_index < 0 ? 0 : max_index);
}

}  // namespace detail

/// Lucas's substitution u^j -> B_j/j for j >= 1, extended by u^0 -> 1 so
/// constants pass through. The map is linear, not multiplicative; it is
/// applied termwise to an already expanded polynomial. The `bernoulli` span
/// must contain B_0..B_d for d = degree of u.
inline Rational eval_lucas(const UmbralPoly& u, std::span<const Rational> bernoulli) {
    if (u.degree() >= static_cast<int>(bernoulli.size())) {
        throw DomainError("bernoulli table too short for umbral evaluation");
    }
    Rational result = u.coefficient(0);
    for (int j = 1; j <= u.degree(); ++j) {
        result += u.coefficient(j) * bernoulli[static_cast<std::size_t>(j)] / j;
    }
    return result;
}

inline Rational eval_lucas(const UmbralPoly& u) {
    return eval_lucas(u, detail::bernoulli_prefix(u.degree()));
}

/// The classical umbral substitution u^j -> B_j (with B_0 = 1).
inline Rational eval_classical(const UmbralPoly& u, std::span<const Rational> bernoulli) {
    if (u.degree() >= static_cast<int>(bernoulli.size())) {
        throw DomainError("bernoulli table too short for umbral evaluation");
    }
    Rational result = 0;
    for (int j = 0; j <= u.degree(); ++j) {
        result += u.coefficient(j) * bernoulli[static_cast<std::size_t>(j)];
    }
    return result;
}

inline Rational eval_classical(const UmbralPoly& u) {
    return eval_classical(u, detail::bernoulli_prefix(u.degree()));
}

/// The umbral factor u^{n-p+1} (1+u)(2+u)...(p-1+u) of Lucas's formula,
/// valid for n >= p >= 1.
inline UmbralPoly lucas_umbral_product(int n, int p) {
    if (p < 1 || n < p) {
        throw DomainError("lucas umbral product requires n >= p >= 1");
    }
    return umbral_mul(UmbralPoly::monomial(n - p + 1), rising_factorial_umbral(p - 1));
}

}  // namespace norlund
