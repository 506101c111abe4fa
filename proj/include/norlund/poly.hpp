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
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "norlund/rational.hpp"

namespace norlund {

/// Dense polynomial over exact rationals in one formal variable. Trailing
/// zero coefficients are trimmed, so equal polynomials compare equal
/// memberwise. The zero polynomial has an empty coefficient list and
/// degree() == -1.
class RationalPoly {
   public:
    RationalPoly() = default;
    RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }

    static RationalPoly monomial(int k, const Rational& c = 1) {
        if (k < 0) {
            throw DomainError("monomial with negative exponent");
        }
        std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
        coeffs.back() = c;
        return RationalPoly(std::move(coeffs));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero beyond the degree.
    Rational coefficient(int k) const {
        if (k < 0 || k > degree()) {
            return 0;
        }
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const {
        Rational result = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            result = result * x + *it;
        }
        return result;
    }

    RationalPoly& operator+=(const RationalPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] += rhs.coeffs_[i];
        }
        trim();
        return *this;
    }

    RationalPoly& operator-=(const RationalPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
            coeffs_[i] -= rhs.coeffs_[i];
        }
        trim();
        return *this;
    }

    RationalPoly& operator*=(const RationalPoly& rhs) {
        if (coeffs_.empty() || rhs.coeffs_.empty()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                product[i + j] += coeffs_[i] * rhs.coeffs_[j];
            }
        }
        coeffs_ = std::move(product);
        trim();
        return *this;
    }

    RationalPoly& operator*=(const Rational& s) {
        for (auto& c : coeffs_) {
            c *= s;
        }
        trim();
        return *this;
    }

    RationalPoly& operator/=(const Rational& s) {
        if (s == 0) {
            throw DomainError("polynomial division by zero scalar");
        }
        for (auto& c : coeffs_) {
            c /= s;
        }
        return *this;
    }

    RationalPoly operator-() const {
        RationalPoly result(*this);
        for (auto& c : result.coeffs_) {
            c = -c;
        }
        return result;
    }

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
    friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
    friend RationalPoly operator/(RationalPoly a, const Rational& s) { return a /= s; }

    bool operator==(const RationalPoly&) const = default;

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

/// Ascending coefficient list `[c0, c1, ...]`; the zero polynomial prints
/// as `[0]`.
inline std::string to_coefficient_list(const RationalPoly& p) {
    if (p.is_zero()) {
        return "[0]";
    }
    std::string out = "[";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) {
            out += ", ";
        }
        out += to_string(p.coefficient(k));
    }
    out += "]";
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RationalPoly& p) {
    return os << to_coefficient_list(p);
}

/// Exact Lagrange interpolation through the given nodes. Node abscissas must
/// be pairwise distinct.
inline RationalPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> nodes) {
    RationalPoly result;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        RationalPoly basis = RationalPoly::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) {
                continue;
            }
            basis *= RationalPoly({-nodes[j].first, 1});
            denom *= nodes[i].first - nodes[j].first;
        }
        if (denom == 0) {
            throw DomainError("interpolation nodes must be distinct");
        }
        result += basis * (nodes[i].second / denom);
    }
    return result;
}

}  // namespace norlund
