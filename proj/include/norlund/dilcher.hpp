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
#include <string>
#include <utility>
#include <vector>

#include "norlund/bernoulli.hpp"
#include "norlund/combinatorics.hpp"
#include "norlund/meixner_pollaczek.hpp"
#include "norlund/umbral.hpp"

namespace norlund {

// The Dilcher sum S_N(n) is the sum of multinomial(2n; 2j_1..2j_N)
// B_{2j_1}...B_{2j_N} over all weak compositions j_1+...+j_N = n. The
// functions below compute it by six routes with distinct validity ranges;
// the verification suites check that all of them coincide wherever two
// ranges overlap.

/// Triangle of coefficients b_k^(N) from the recurrence
///   b_k^(N+1) = -(1/N) b_k^(N) + (1/4) b_{k-1}^(N-1),
/// with b_0^(1) = 1 and zero outside 0 <= k <= floor((N-1)/2). Row 0 is all
/// zero by convention. Lookups outside the stored k-range return zero, so the
/// table is total in k.
class DilcherTriangle {
   public:
    explicit DilcherTriangle(int max_N) : max_N_(max_N) {
        if (max_N < 1) {
            throw DomainError("triangle requires max_N >= 1");
        }
        rows_.resize(static_cast<std::size_t>(max_N) + 1);
        rows_[1] = {Rational(1)};
        for (int N = 1; N < max_N; ++N) {
            const int width = N / 2 + 1;  // k = 0..floor(((N+1)-1)/2)
            std::vector<Rational> row(static_cast<std::size_t>(width));
            for (int k = 0; k < width; ++k) {
                row[static_cast<std::size_t>(k)] =
                    -at(N, k) / N + at(N - 1, k - 1) / 4;
            }
            rows_[static_cast<std::size_t>(N) + 1] = std::move(row);
        }
    }

    int max_N() const { return max_N_; }

    Rational at(int N, int k) const {
        if (N < 0 || N > max_N_) {
            throw DomainError("triangle row out of range");
        }
        const auto& row = rows_[static_cast<std::size_t>(N)];
        if (k < 0 || k >= static_cast<int>(row.size())) {
            return 0;
        }
        return row[static_cast<std::size_t>(k)];
    }

    /// Copy with one entry replaced. Exists for fault-injection checks only;
    /// the result no longer satisfies the triangle's defining recurrence.
    DilcherTriangle with_entry(int N, int k, const Rational& value) const {
        DilcherTriangle copy(*this);
        auto& row = copy.rows_.at(static_cast<std::size_t>(N));
        row.at(static_cast<std::size_t>(k)) = value;
        return copy;
    }

   private:
    int max_N_;
    std::vector<std::vector<Rational>> rows_;
};

inline DilcherTriangle dilcher_triangle(int max_N) { return DilcherTriangle(max_N); }

/// The same coefficients read off the Meixner-Pollaczek table:
///   b_k^(N) = (-1)^{N-1-k}/2^{N-1} * p_{N-1-2k}^(N-1).
inline Rational b_from_mp(int N, int k, const MPFamily& family) {
    if (N < 1 || k < 0 || 2 * k > N - 1) {
        throw DomainError("dilcher coefficient requires 0 <= k <= floor((N-1)/2)");
    }
    Rational value = family.coeff(N - 1, N - 1 - 2 * k) / Rational(pow2(N - 1));
    if ((N - 1 - k) % 2 != 0) {
        value = -value;
    }
    return value;
}

inline Rational b_from_mp(int N, int k) {
    if (N < 1) {
        throw DomainError("dilcher coefficient requires N >= 1");
    }
    return b_from_mp(N, k, mp_family(N - 1));
}

namespace detail {

/// Walks the partitions of n into at most max_parts positive parts, largest
/// part first. Each partition stands for all compositions sharing its
/// multiset of parts.
template <typename Visit>
void for_each_partition(int n, int max_parts, Visit&& visit) {
    std::vector<int> parts;
    const auto descend = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_parts) {
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    descend(descend, n, n);
}

}  // namespace detail

/// Brute-force S_N(n). Compositions are grouped by their underlying
/// partition: a partition with part multiplicities m_v (zeros included)
/// accounts for N!/prod(m_v!) compositions, each contributing the same term.
inline Rational s_brute(int N, int n) {
    if (N < 1 || n < 0) {
        throw DomainError("dilcher sum requires N >= 1 and n >= 0");
    }
    const std::vector<Rational> bernoulli = bernoulli_row(2 * n);
    Rational sum = 0;
    detail::for_each_partition(n, N, [&](const std::vector<int>& parts) {
        Integer arrangements = factorial(N);
        int run = 1;
        for (std::size_t i = 1; i <= parts.size(); ++i) {
            if (i < parts.size() && parts[i] == parts[i - 1]) {
                ++run;
            } else {
                arrangements /= factorial(run);
                run = 1;
            }
        }
        arrangements /= factorial(N - static_cast<int>(parts.size()));

        std::vector<int> doubled(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            doubled[i] = 2 * parts[i];
        }
        Rational term = Rational(multinomial(2 * n, doubled)) * arrangements;
        for (int part : parts) {
            term *= bernoulli[static_cast<std::size_t>(2 * part)];
        }
        sum += term;
    });
    return sum;
}

/// S_N(n) = sum_{k=0}^{N} (2n)!/(2n-k)! 2^{-k} C(N,k) B_{2n-k}^{(N-k)}.
/// Stated for 2n > N; the B^{(0)} = delta convention makes it hold at
/// 2n = N as well, so the guard admits the boundary.
inline Rational s_prop1(int N, int n) {
    if (N < 1 || n < 1) {
        throw DomainError("dilcher sum requires N >= 1 and n >= 1");
    }
    if (2 * n < N) {
        throw DomainError("prop1 requires 2n >= N");
    }
    const auto table = gen_bernoulli_table(2 * n, N);
    Rational sum = 0;
    for (int k = 0; k <= N; ++k) {
        sum += make_rational(falling_factorial(2 * n, k) * binomial(N, k), pow2(k)) *
               table[static_cast<std::size_t>(N - k)][static_cast<std::size_t>(2 * n - k)];
    }
    return sum;
}

/// S_N(n) = (2n)!/(2n-N)! * L(u^{2n-N+1} sum_{l=0}^{N-1} C(N,l+1) (-1)^l
/// 2^{-(N-1-l)} (u+1)_l / l!) where L is Lucas's substitution. Fails at
/// 2n = N, hence the strict guard.
inline Rational s_prop2(int N, int n) {
    if (N < 1 || n < 1) {
        throw DomainError("dilcher sum requires N >= 1 and n >= 1");
    }
    if (2 * n <= N) {
        throw DomainError("prop2 requires 2n > N");
    }
    UmbralPoly series;
    for (int l = 0; l <= N - 1; ++l) {
        Rational scalar = make_rational(binomial(N, l + 1), pow2(N - 1 - l) * factorial(l));
        if (l % 2 != 0) {
            scalar = -scalar;
        }
        series += rising_factorial_umbral(l) * scalar;
    }
    const UmbralPoly expanded = umbral_mul(UmbralPoly::monomial(2 * n - N + 1), series);
    return eval_lucas(expanded) * Rational(falling_factorial(2 * n, N));
}

/// Hypergeometric form: S_N(n) = (2n)!/(2n-N)! 2^{1-N} N *
/// L(u^{2n-N+1} 2F1(1-N, 1+u; 2; 2)) with the terminating 2F1 expanded as an
/// umbral polynomial.
inline Rational s_hyper(int N, int n) {
    if (N < 1 || n < 1) {
        throw DomainError("dilcher sum requires N >= 1 and n >= 1");
    }
    if (2 * n <= N) {
        throw DomainError("hyper requires 2n > N");
    }
    UmbralPoly f21;
    for (int l = 0; l <= N - 1; ++l) {
        const Rational scalar = pochhammer(Rational(1 - N), l) * Rational(pow2(l)) /
                                (pochhammer(Rational(2), l) * Rational(factorial(l)));
        f21 += rising_factorial_umbral(l) * scalar;
    }
    const UmbralPoly expanded = umbral_mul(UmbralPoly::monomial(2 * n - N + 1), f21);
    return eval_lucas(expanded) * make_rational(falling_factorial(2 * n, N) * N, pow2(N - 1));
}

/// Meixner-Pollaczek form: S_N(n) = (2n)!/(2n-N)! *
/// L(u^{2n-N+1} q(u)) with q the real transform of P_{N-1}.
inline Rational s_mp(int N, int n) {
    if (N < 1 || n < 1) {
        throw DomainError("dilcher sum requires N >= 1 and n >= 1");
    }
    if (2 * n <= N) {
        throw DomainError("mp requires 2n > N");
    }
    const RationalPoly q = mp_real_transform(N);
    const UmbralPoly expanded =
        umbral_mul(UmbralPoly::monomial(2 * n - N + 1), UmbralPoly(q.coefficients()));
    return eval_lucas(expanded) * Rational(falling_factorial(2 * n, N));
}

/// Dilcher's closed form from the coefficient triangle:
/// S_N(n) = (2n)!/(2n-N)! sum_k b_k^(N) B_{2n-2k}/(2n-2k).
inline Rational s_dilcher_coeff(int N, int n, const DilcherTriangle& triangle) {
    if (N < 1 || n < 1) {
        throw DomainError("dilcher sum requires N >= 1 and n >= 1");
    }
    if (2 * n <= N) {
        throw DomainError("coeff requires 2n > N");
    }
    const std::vector<Rational> bernoulli = bernoulli_row(2 * n);
    Rational sum = 0;
    for (int k = 0; 2 * k <= N - 1; ++k) {
        sum += triangle.at(N, k) * bernoulli[static_cast<std::size_t>(2 * n - 2 * k)] /
               Rational(2 * n - 2 * k);
    }
    return sum * Rational(falling_factorial(2 * n, N));
}

inline Rational s_dilcher_coeff(int N, int n) {
    if (N < 1) {
        throw DomainError("dilcher sum requires N >= 1");
    }
    return s_dilcher_coeff(N, n, dilcher_triangle(N));
}

/// Small regime 2n <= N-1, where the sum collapses to a single coefficient:
///   S_N(n) = (-1)^n (2n)! (N-2n-1)!/2^{N-1} p_{N-2n-1}^(N-1)
///          = (-1)^{N-1} (2n)! (N-2n-1)! b_n^(N).
/// Both displayed forms are computed and must agree.
inline Rational s_small(int N, int n, const MPFamily& family, const DilcherTriangle& triangle) {
    if (N < 1 || n < 0) {
        throw DomainError("dilcher sum requires N >= 1 and n >= 0");
    }
    if (2 * n > N - 1) {
        throw DomainError("small form requires 2n <= N-1");
    }
    const Rational shared = Rational(factorial(2 * n) * factorial(N - 2 * n - 1));
    Rational via_mp = shared * family.coeff(N - 1, N - 2 * n - 1) / Rational(pow2(N - 1));
    if (n % 2 != 0) {
        via_mp = -via_mp;
    }
    Rational via_triangle = shared * triangle.at(N, n);
    if ((N - 1) % 2 != 0) {
        via_triangle = -via_triangle;
    }
    if (via_mp != via_triangle) {
        throw InternalInconsistency("small-regime forms disagree at N=" + std::to_string(N) +
                                    ", n=" + std::to_string(n) + ": " + to_string(via_mp) +
                                    " vs " + to_string(via_triangle));
    }
    return via_mp;
}

inline Rational s_small(int N, int n) {
    if (N < 1) {
        throw DomainError("dilcher sum requires N >= 1");
    }
    return s_small(N, n, mp_family(N - 1), dilcher_triangle(N));
}

/// Total dispatcher: the small form below 2n = N, the generalized-Bernoulli
/// form on the boundary, and the coefficient form above it.
inline Rational s_auto(int N, int n) {
    if (N < 1 || n < 0) {
        throw DomainError("dilcher sum requires N >= 1 and n >= 0");
    }
    if (2 * n <= N - 1) {
        return s_small(N, n);
    }
    if (2 * n == N) {
        return s_prop1(N, n);
    }
    return s_dilcher_coeff(N, n);
}

enum class DilcherMethod { auto_, brute, prop1, prop2, hyper, mp, coeff, small };

inline std::string to_string(DilcherMethod m) {
    switch (m) {
        case DilcherMethod::auto_: return "auto";
        case DilcherMethod::brute: return "brute";
        case DilcherMethod::prop1: return "prop1";
        case DilcherMethod::prop2: return "prop2";
        case DilcherMethod::hyper: return "hyper";
        case DilcherMethod::mp: return "mp";
        case DilcherMethod::coeff: return "coeff";
        case DilcherMethod::small: return "small";
    }
    throw DomainError("unknown method");
}

inline Rational dilcher_sum(int N, int n, DilcherMethod method = DilcherMethod::auto_) {
    switch (method) {
        case DilcherMethod::auto_: return s_auto(N, n);
        case DilcherMethod::brute: return s_brute(N, n);
        case DilcherMethod::prop1: return s_prop1(N, n);
        case DilcherMethod::prop2: return s_prop2(N, n);
        case DilcherMethod::hyper: return s_hyper(N, n);
        case DilcherMethod::mp: return s_mp(N, n);
        case DilcherMethod::coeff: return s_dilcher_coeff(N, n);
        case DilcherMethod::small: return s_small(N, n);
    }
    throw DomainError("unknown method");
}

}  // namespace norlund
