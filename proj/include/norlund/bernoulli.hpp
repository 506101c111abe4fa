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

#include <string>
#include <utility>
#include <vector>

#include "norlund/combinatorics.hpp"
#include "norlund/poly.hpp"
#include "norlund/series.hpp"
#include "norlund/umbral.hpp"

namespace norlund {

/// Classical Bernoulli number B_n (B_1 = -1/2 in this convention).
inline Rational classical_bernoulli(int n) {
    if (n < 0) {
        throw DomainError("bernoulli number with negative index");
    }
    return bernoulli_egf(n).coeff(n) * factorial(n);
}

/// Generalized Bernoulli number B_n^(p) as n! times the z^n coefficient of
/// (z/(e^z - 1))^p.
inline Rational gen_bernoulli_gf(int n, int p) {
    if (n < 0 || p < 0) {
        throw DomainError("generalized bernoulli with negative index");
    }
    return series_pow(bernoulli_egf(n), p).coeff(n) * factorial(n);
}

/// B_n^(p) by Lucas's symbolic formula
///   B_n^(p) = (-1)^{p-1}/(p-1)! * n!/(n-p)! * u^{n-p+1}(1+u)...(p-1+u),
/// expanded first and then mapped by u^j -> B_j/j. Valid for n >= p >= 1.
inline Rational gen_bernoulli_lucas(int n, int p) {
    if (p < 1 || n < p) {
        throw DomainError("lucas requires n >= p >= 1");
    }
    const Rational evaluated = eval_lucas(lucas_umbral_product(n, p));
    Integer numer = falling_factorial(n, p);
    if (p % 2 == 0) {
        numer = -numer;
    }
    return evaluated * make_rational(numer, factorial(p - 1));
}

/// Signed Stirling numbers of the first kind for a fixed order p: the
/// coefficients s_1^(p)..s_p^(p) of z(z-1)...(z-(p-1)).
struct StirlingRow {
    int p = 0;
    std::vector<Rational> entries;  // entries[k-1] = s_k^(p)

    Rational at(int k) const {
        if (k < 1 || k > p) {
            throw DomainError("stirling index k out of 1..p");
        }
        return entries[static_cast<std::size_t>(k - 1)];
    }
};

inline StirlingRow stirling_first_row(int p) {
    if (p < 1) {
        throw DomainError("stirling row requires p >= 1");
    }
    RationalPoly falling = RationalPoly::monomial(1);
    for (int t = 1; t < p; ++t) {
        falling *= RationalPoly({Rational(-t), 1});
    }
    std::vector<Rational> entries(static_cast<std::size_t>(p));
    for (int k = 1; k <= p; ++k) {
        entries[static_cast<std::size_t>(k - 1)] = falling.coefficient(k);
    }
    return StirlingRow{p, std::move(entries)};
}

/// B_n^(p) = s_{p-n}^(p) / C(p-1, n), valid in the small range 0 <= n <= p-1
/// where Lucas's formula does not apply.
inline Rational gen_bernoulli_stirling(int n, int p) {
    if (n < 0 || p < 1 || n > p - 1) {
        throw DomainError("stirling requires 0 <= n <= p-1");
    }
    return stirling_first_row(p).at(p - n) / Rational(binomial(p - 1, n));
}

/// Rows p = 0..max_p of generalized Bernoulli numbers, each row holding
/// B_0^(p)..B_max_n^(p). Row 0 is the Kronecker delta; row 1 is the classical
/// numbers; row q+1 follows from row q via
///   q B_m^(q+1) = (q-m) B_m^(q) - q m B_{m-1}^(q).
inline std::vector<std::vector<Rational>> gen_bernoulli_table(int max_n, int max_p) {
    if (max_n < 0 || max_p < 0) {
        throw DomainError("generalized bernoulli table with negative bound");
    }
    std::vector<std::vector<Rational>> table;
    table.reserve(static_cast<std::size_t>(max_p) + 1);

    std::vector<Rational> delta(static_cast<std::size_t>(max_n) + 1);
    delta[0] = 1;
    table.push_back(std::move(delta));
    if (max_p == 0) {
        return table;
    }
    table.push_back(bernoulli_row(max_n));
    for (int q = 1; q < max_p; ++q) {
        const auto& row = table.back();
        std::vector<Rational> next(static_cast<std::size_t>(max_n) + 1);
        for (int m = 0; m <= max_n; ++m) {
            Rational value = Rational(q - m) * row[static_cast<std::size_t>(m)];
            if (m > 0) {
                value -= Rational(q) * m * row[static_cast<std::size_t>(m - 1)];
            }
            next[static_cast<std::size_t>(m)] = value / q;
        }
        table.push_back(std::move(next));
    }
    return table;
}

/// B_n^(p) by dynamic programming over the order recurrence.
inline Rational gen_bernoulli_recurrence(int n, int p) {
    if (n < 0 || p < 0) {
        throw DomainError("generalized bernoulli with negative index");
    }
    if (p == 0) {
        return n == 0 ? 1 : 0;
    }
    std::vector<Rational> row = bernoulli_row(n);
    for (int q = 1; q < p; ++q) {
        std::vector<Rational> next(row.size());
        for (int m = 0; m <= n; ++m) {
            Rational value = Rational(q - m) * row[static_cast<std::size_t>(m)];
            if (m > 0) {
                value -= Rational(q) * m * row[static_cast<std::size_t>(m - 1)];
            }
            next[static_cast<std::size_t>(m)] = value / q;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(n)];
}

enum class GenBernoulliMethod { gf, lucas, stirling, recurrence, auto_ };

inline std::string to_string(GenBernoulliMethod m) {
    switch (m) {
        case GenBernoulliMethod::gf: return "gf";
        case GenBernoulliMethod::lucas: return "lucas";
        case GenBernoulliMethod::stirling: return "stirling";
        case GenBernoulliMethod::recurrence: return "recurrence";
        case GenBernoulliMethod::auto_: return "auto";
    }
    throw DomainError("unknown method");
}

/// Dispatcher over the four algorithms; auto picks the recurrence, which is
/// total over n, p >= 0.
inline Rational gen_bernoulli(int n, int p,
                              GenBernoulliMethod method = GenBernoulliMethod::auto_) {
    switch (method) {
        case GenBernoulliMethod::gf: return gen_bernoulli_gf(n, p);
        case GenBernoulliMethod::lucas: return gen_bernoulli_lucas(n, p);
        case GenBernoulliMethod::stirling: return gen_bernoulli_stirling(n, p);
        case GenBernoulliMethod::recurrence:
        case GenBernoulliMethod::auto_: return gen_bernoulli_recurrence(n, p);
    }
    throw DomainError("unknown method");
}

/// B_n^(p) viewed as a polynomial in the order p.
struct NorlundPoly {
    int n = 0;
    RationalPoly poly;
};

/// The unique polynomial of degree <= n through (p, B_n^(p)) for p = 0..n,
/// by exact Lagrange interpolation. Agreement beyond the interpolation nodes
/// is checked by the verification suites.
inline NorlundPoly norlund_polynomial(int n) {
    if (n < 0) {
        throw DomainError("norlund polynomial with negative index");
    }
    const auto table = gen_bernoulli_table(n, n);
    std::vector<std::pair<Rational, Rational>> nodes;
    nodes.reserve(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        nodes.emplace_back(Rational(p), table[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)]);
    }
    return NorlundPoly{n, lagrange_interpolate(nodes)};
}

}  // namespace norlund
