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
#include <random>
#include <string>
#include <vector>

#include "norlund/bernoulli.hpp"
#include "norlund/dilcher.hpp"
#include "norlund/meixner_pollaczek.hpp"
#include "norlund/output.hpp"
#include "norlund/series.hpp"
#include "norlund/umbral.hpp"

namespace norlund {

struct CheckResult {
    std::string suite;
    bool pass = true;
    std::string detail;  // first failing (indices, expected, got) when !pass
};

struct VerifyOptions {
    int max_N = 8;
    int max_n = 12;
    int max_p = 10;
    /// Tampers with one Dilcher coefficient before the consistency suites
    /// run. Exists so the failure path of the verifier itself is exercisable.
    bool corrupt_triangle = false;
};

namespace verify_detail {

inline CheckResult ok(std::string suite) { return {std::move(suite), true, ""}; }

inline CheckResult fail(std::string suite, std::string indices, const Rational& expected,
                        const Rational& got) {
    return {std::move(suite), false,
            indices + ": expected " + to_string(expected) + ", got " + to_string(got)};
}

class RationalGen {
   public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    Rational small() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 9);
        return make_rational(num(rng_), den(rng_));
    }

    Rational small_nonzero() {
        Rational q = small();
        return q == 0 ? Rational(1) : q;
    }

    std::vector<Rational> list(int count) {
        std::vector<Rational> values(static_cast<std::size_t>(count));
        for (auto& v : values) {
            v = small();
        }
        return values;
    }

   private:
    std::mt19937_64 rng_;
};

inline CheckResult series_ring() {
    const std::string suite = "series-ring";
    RationalGen gen(0x5e51e5u);
    constexpr int kOrder = 10;
    for (int round = 0; round < 25; ++round) {
        auto coeffs_a = gen.list(kOrder + 1);
        auto coeffs_b = gen.list(kOrder + 1);
        auto coeffs_c = gen.list(kOrder + 1);
        coeffs_a[0] = gen.small_nonzero();
        const TruncatedSeries a{coeffs_a}, b{coeffs_b}, c{coeffs_c};

        if (series_mul(a, b) != series_mul(b, a)) {
            return {suite, false, "commutativity failed on random series"};
        }
        if (series_mul(series_mul(a, b), c) != series_mul(a, series_mul(b, c))) {
            return {suite, false, "associativity failed on random series"};
        }
        if (series_mul(a, series_invert(a)) != TruncatedSeries::one(kOrder)) {
            return {suite, false, "a * invert(a) != 1 on random series"};
        }
        const int p = round % 4, q = round % 3;
        if (series_pow(a, p + q) != series_mul(series_pow(a, p), series_pow(a, q))) {
            return {suite, false, "pow additivity failed on random series"};
        }
    }
    return ok(suite);
}

inline CheckResult series_egf_odd(int max_n) {
    const std::string suite = "series-egf-odd";
    const int order = std::max(2 * max_n + 1, 11);
    const TruncatedSeries egf = bernoulli_egf(order);
    for (int k = 1; 2 * k + 1 <= order; ++k) {
        if (egf.coeff(2 * k + 1) != 0) {
            return fail(suite, "(order " + std::to_string(2 * k + 1) + ")", 0,
                        egf.coeff(2 * k + 1));
        }
    }
    return ok(suite);
}

inline CheckResult bernoulli_four_methods(int max_n, int max_p) {
    const std::string suite = "bernoulli-four-methods";
    const auto table = gen_bernoulli_table(max_n, max_p);
    for (int p = 1; p <= max_p; ++p) {
        for (int n = 0; n <= max_n; ++n) {
            const std::string at = "(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")";
            const Rational& reference = table[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)];
            const Rational gf = gen_bernoulli_gf(n, p);
            if (gf != reference) {
                return fail(suite, "gf vs recurrence " + at, reference, gf);
            }
            if (n >= p) {
                const Rational lucas = gen_bernoulli_lucas(n, p);
                if (lucas != reference) {
                    return fail(suite, "lucas vs recurrence " + at, reference, lucas);
                }
            }
            if (n <= p - 1) {
                const Rational stirling = gen_bernoulli_stirling(n, p);
                if (stirling != reference) {
                    return fail(suite, "stirling vs recurrence " + at, reference, stirling);
                }
            }
        }
    }
    return ok(suite);
}

inline CheckResult bernoulli_odd_vanish() {
    const std::string suite = "bernoulli-odd-vanish";
    for (int k = 1; 2 * k + 1 <= 41; ++k) {
        const Rational value = classical_bernoulli(2 * k + 1);
        if (value != 0) {
            return fail(suite, "(n=" + std::to_string(2 * k + 1) + ")", 0, value);
        }
    }
    return ok(suite);
}

inline CheckResult stirling_rows() {
    const std::string suite = "stirling-rows";
    for (int p = 1; p <= 20; ++p) {
        const StirlingRow row = stirling_first_row(p);
        if (row.at(p) != 1) {
            return fail(suite, "(p=" + std::to_string(p) + ", k=" + std::to_string(p) + ")", 1,
                        row.at(p));
        }
        Rational sum = 0;
        for (int k = 1; k <= p; ++k) {
            sum += row.at(k);
            const int expected_sign = (p - k) % 2 == 0 ? 1 : -1;
            if (row.at(k) * expected_sign <= 0) {
                return {suite, false,
                        "sign of s_" + std::to_string(k) + "^(" + std::to_string(p) +
                            ") is not (-1)^(p-k): got " + to_string(row.at(k))};
            }
        }
        if (p >= 2 && sum != 0) {
            return fail(suite, "(row sum, p=" + std::to_string(p) + ")", 0, sum);
        }
    }
    return ok(suite);
}

inline CheckResult norlund_unnumbered_identity() {
    const std::string suite = "norlund-unnumbered-identity";
    for (int p = 1; p <= 12; ++p) {
        RationalPoly lhs = RationalPoly::constant(1);
        for (int t = 1; t <= p; ++t) {
            lhs *= RationalPoly({Rational(-t), 1});
        }
        RationalPoly rhs;
        for (int l = 0; l <= p; ++l) {
            rhs += RationalPoly::monomial(l, Rational(binomial(p, l)) *
                                                 gen_bernoulli_recurrence(p - l, p + 1));
        }
        if (lhs != rhs) {
            return {suite, false,
                    "(p=" + std::to_string(p) + "): expected " + to_coefficient_list(lhs) +
                        ", got " + to_coefficient_list(rhs)};
        }
    }
    return ok(suite);
}

inline CheckResult norlund_polynomials(int max_n) {
    const std::string suite = "norlund-polynomials";
    const std::vector<RationalPoly> pinned = {
        RationalPoly({1}),
        RationalPoly({0, make_rational(-1, 2)}),
        RationalPoly({0, make_rational(-1, 12), make_rational(1, 4)}),
        RationalPoly({0, 0, make_rational(1, 8), make_rational(-1, 8)}),
    };
    const int bound = std::max(max_n, 3);
    for (int n = 0; n <= std::min(bound, 10); ++n) {
        const NorlundPoly np = norlund_polynomial(n);
        if (n < static_cast<int>(pinned.size()) && np.poly != pinned[static_cast<std::size_t>(n)]) {
            return {suite, false,
                    "(n=" + std::to_string(n) + "): expected " +
                        to_coefficient_list(pinned[static_cast<std::size_t>(n)]) + ", got " +
                        to_coefficient_list(np.poly)};
        }
        for (int p = 0; p <= 2 * n; ++p) {
            const Rational direct = gen_bernoulli_recurrence(n, p);
            const Rational interpolated = np.poly.evaluate(Rational(p));
            if (direct != interpolated) {
                return fail(suite, "(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")",
                            direct, interpolated);
            }
        }
    }
    return ok(suite);
}

inline CheckResult umbral_identity() {
    const std::string suite = "umbral-identity";
    RationalGen gen(0xb3127au);
    for (int round = 0; round < 50; ++round) {
        const UmbralPoly f{gen.list(11)};
        std::vector<Rational> reflected = f.coefficients();
        for (std::size_t j = 1; j < reflected.size(); j += 2) {
            reflected[j] = -reflected[j];
        }
        const Rational lhs = eval_classical(UmbralPoly{std::move(reflected)});
        const Rational rhs = eval_classical(f) + f.coefficient(1);
        if (lhs != rhs) {
            return fail(suite, "(round " + std::to_string(round) + ")", rhs, lhs);
        }
    }
    return ok(suite);
}

inline CheckResult umbral_linearity() {
    const std::string suite = "umbral-linearity";
    RationalGen gen(0x11e4au);
    for (int round = 0; round < 25; ++round) {
        const UmbralPoly u{gen.list(9)};
        const UmbralPoly v{gen.list(9)};
        const Rational a = gen.small(), b = gen.small();
        const UmbralPoly combo = u * a + v * b;
        if (eval_lucas(combo) != a * eval_lucas(u) + b * eval_lucas(v)) {
            return {suite, false, "eval_lucas is not linear on random polynomials"};
        }
        if (eval_classical(combo) != a * eval_classical(u) + b * eval_classical(v)) {
            return {suite, false, "eval_classical is not linear on random polynomials"};
        }
    }
    return ok(suite);
}

inline CheckResult umbral_expand_before_eval() {
    const std::string suite = "umbral-expand-before-eval";
    const UmbralPoly square = UmbralPoly::monomial(2);
    const UmbralPoly shifted({1, 1});
    const Rational expanded = eval_lucas(umbral_mul(square, shifted));
    if (expanded != make_rational(1, 12)) {
        return fail(suite, "(u^2 (1+u))", make_rational(1, 12), expanded);
    }
    const Rational termwise = eval_lucas(square) * eval_lucas(shifted);
    if (termwise != make_rational(1, 24)) {
        return fail(suite, "(termwise product)", make_rational(1, 24), termwise);
    }
    if (expanded == termwise) {
        return {suite, false, "substitution before expansion must differ, but values agree"};
    }
    return ok(suite);
}

inline CheckResult mp_structure() {
    const std::string suite = "mp-structure";
    constexpr int kMax = 20;
    const MPFamily family = mp_family(kMax);
    if (family.poly(2) != RationalPoly({-1, 0, 2})) {
        return {suite, false, "P_2 != 2x^2 - 1: got " + to_coefficient_list(family.poly(2))};
    }
    if (family.poly(3) != RationalPoly({0, make_rational(-8, 3), 0, make_rational(4, 3)})) {
        return {suite, false, "P_3 != (4/3)(x^3 - 2x): got " + to_coefficient_list(family.poly(3))};
    }
    for (int n = 0; n <= kMax; ++n) {
        if (family.poly(n).degree() != n) {
            return {suite, false, "P_" + std::to_string(n) + " has wrong degree"};
        }
        const Rational leading = family.coeff(n, n);
        if (leading != make_rational(pow2(n), factorial(n))) {
            return fail(suite, "(leading, n=" + std::to_string(n) + ")",
                        make_rational(pow2(n), factorial(n)), leading);
        }
        for (int k = 0; k <= n; ++k) {
            if ((k - n) % 2 != 0 && family.coeff(n, k) != 0) {
                return fail(suite, "(parity, n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")",
                            0, family.coeff(n, k));
            }
        }
    }
    for (int n = 1; n < kMax; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            const Rational residual = Rational(n + 1) * family.coeff(n + 1, k) -
                                      2 * family.coeff(n, k - 1) +
                                      Rational(n + 1) * family.coeff(n - 1, k);
            if (residual != 0) {
                return fail(suite,
                            "(three-term, n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")",
                            0, residual);
            }
        }
    }
    return ok(suite);
}

inline CheckResult mp_transform() {
    const std::string suite = "mp-transform";
    if (mp_real_transform(1) != RationalPoly({1})) {
        return {suite, false, "transform(1) != 1"};
    }
    if (mp_real_transform(2) != RationalPoly({0, -1})) {
        return {suite, false, "transform(2) != -u"};
    }
    if (mp_real_transform(4) !=
        RationalPoly({0, make_rational(-1, 3), 0, make_rational(-1, 6)})) {
        return {suite, false, "transform(4) != -(u^3 + 2u)/6"};
    }
    for (int N = 1; N <= 20; ++N) {
        const RationalPoly q = mp_real_transform(N);
        if (q.degree() != N - 1) {
            return {suite, false, "transform(" + std::to_string(N) + ") has wrong degree"};
        }
        for (int k = 0; k <= q.degree(); ++k) {
            if ((k - (N - 1)) % 2 != 0 && q.coefficient(k) != 0) {
                return fail(suite, "(parity, N=" + std::to_string(N) + ", k=" + std::to_string(k) + ")",
                            0, q.coefficient(k));
            }
        }
    }
    return ok(suite);
}

inline CheckResult dilcher_grand_crosscheck(int max_N, int max_n) {
    const std::string suite = "dilcher-grand-crosscheck";
    for (int N = 1; N <= max_N; ++N) {
        const DilcherTriangle triangle = dilcher_triangle(N);
        for (int n = N / 2 + 1; n <= max_n; ++n) {
            const std::string at = "(N=" + std::to_string(N) + ", n=" + std::to_string(n) + ")";
            const Rational reference = s_brute(N, n);
            const std::pair<const char*, Rational> others[] = {
                {"prop1", s_prop1(N, n)},       {"prop2", s_prop2(N, n)},
                {"hyper", s_hyper(N, n)},       {"mp", s_mp(N, n)},
                {"coeff", s_dilcher_coeff(N, n, triangle)},
            };
            for (const auto& [name, value] : others) {
                if (value != reference) {
                    return fail(suite, std::string(name) + " vs brute " + at, reference, value);
                }
            }
        }
    }
    return ok(suite);
}

inline CheckResult dilcher_boundary(int max_N) {
    const std::string suite = "dilcher-boundary-2n-eq-N";
    for (int N = 2; N <= max_N; N += 2) {
        const Rational reference = s_brute(N, N / 2);
        const Rational prop1 = s_prop1(N, N / 2);
        if (prop1 != reference) {
            return fail(suite, "(N=" + std::to_string(N) + ", n=" + std::to_string(N / 2) + ")",
                        reference, prop1);
        }
    }
    return ok(suite);
}

inline CheckResult dilcher_small_regime() {
    const std::string suite = "dilcher-small-regime";
    const MPFamily family = mp_family(11);
    const DilcherTriangle triangle = dilcher_triangle(12);
    for (int N = 2; N <= 12; ++N) {
        for (int n = 0; 2 * n <= N - 1; ++n) {
            const std::string at = "(N=" + std::to_string(N) + ", n=" + std::to_string(n) + ")";
            Rational small;
            try {
                small = s_small(N, n, family, triangle);
            } catch (const InternalInconsistency& e) {
                return {suite, false, at + ": " + e.what()};
            }
            const Rational reference = s_brute(N, n);
            if (small != reference) {
                return fail(suite, at, reference, small);
            }
        }
    }
    return ok(suite);
}

inline CheckResult dilcher_triangle_mp(const DilcherTriangle& triangle) {
    const std::string suite = "dilcher-triangle-mp";
    const MPFamily family = mp_family(triangle.max_N() - 1);
    for (int N = 1; N <= triangle.max_N(); ++N) {
        for (int k = 0; 2 * k <= N - 1; ++k) {
            const Rational expected = b_from_mp(N, k, family);
            const Rational got = triangle.at(N, k);
            if (got != expected) {
                return fail(suite, "(N=" + std::to_string(N) + ", k=" + std::to_string(k) + ")",
                            expected, got);
            }
        }
    }
    return ok(suite);
}

/// The triangle recurrence and the Meixner-Pollaczek three-term recurrence
/// imply each other under b_k^(N) = (-1)^{N-1-k}/2^{N-1} p_{N-1-2k}^(N-1).
/// Checked mechanically both ways on computed tables: coefficients read off
/// the polynomials must satisfy the triangle recurrence, and triangle entries
/// mapped back must satisfy the coefficient recurrence.
inline CheckResult dilcher_recurrence_equivalence() {
    const std::string suite = "dilcher-recurrence-equivalence";
    constexpr int kMax = 20;
    const MPFamily family = mp_family(kMax - 1);
    const DilcherTriangle triangle = dilcher_triangle(kMax);

    const auto b_mp = [&](int N, int k) -> Rational {
        if (N < 1 || k < 0 || 2 * k > N - 1) {
            return 0;
        }
        return b_from_mp(N, k, family);
    };
    for (int N = 1; N < kMax; ++N) {
        for (int k = 0; 2 * k <= N; ++k) {
            const Rational residual =
                b_mp(N + 1, k) + b_mp(N, k) / N - b_mp(N - 1, k - 1) / 4;
            if (residual != 0) {
                return fail(suite,
                            "(triangle recurrence on mapped coefficients, N=" + std::to_string(N) +
                                ", k=" + std::to_string(k) + ")",
                            0, residual);
            }
        }
    }

    const auto p_tri = [&](int n, int l) -> Rational {
        // Inverse map p_l^(n) = 2^n i^{n+l} b_{(n-l)/2}^(n+1); zero on the
        // opposite parity, where the triangle has no entry.
        if (n < 0 || l < 0 || l > n || (n - l) % 2 != 0) {
            return 0;
        }
        Rational value = Rational(pow2(n)) * triangle.at(n + 1, (n - l) / 2);
        if (((n + l) / 2) % 2 != 0) {
            value = -value;
        }
        return value;
    };
    for (int n = 1; n + 1 < kMax; ++n) {
        for (int l = 0; l <= n + 1; ++l) {
            const Rational residual = Rational(n + 1) * p_tri(n + 1, l) - 2 * p_tri(n, l - 1) +
                                      Rational(n + 1) * p_tri(n - 1, l);
            if (residual != 0) {
                return fail(suite,
                            "(three-term on mapped triangle, n=" + std::to_string(n) +
                                ", l=" + std::to_string(l) + ")",
                            0, residual);
            }
        }
    }
    return ok(suite);
}

inline CheckResult dilcher_closed_forms() {
    const std::string suite = "dilcher-closed-forms";
    const std::vector<Rational> bernoulli = bernoulli_row(20);
    for (int n = 2; n <= 10; ++n) {
        const Rational expected = Rational(2 * n - 1) * (n - 1) * bernoulli[static_cast<std::size_t>(2 * n)] +
                                  make_rational(n * (2 * n - 1), 2) * bernoulli[static_cast<std::size_t>(2 * n - 2)];
        const Rational got = s_auto(3, n);
        if (got != expected) {
            return fail(suite, "(S_3, n=" + std::to_string(n) + ")", expected, got);
        }
    }
    for (int n = 3; n <= 10; ++n) {
        const Rational expected =
            make_rational(-(2 * n - 1) * (n - 1) * (2 * n - 3), 3) * bernoulli[static_cast<std::size_t>(2 * n)] -
            make_rational(2 * n * (2 * n - 1) * (2 * n - 3), 3) * bernoulli[static_cast<std::size_t>(2 * n - 2)];
        const Rational got = s_auto(4, n);
        if (got != expected) {
            return fail(suite, "(S_4, n=" + std::to_string(n) + ")", expected, got);
        }
    }
    return ok(suite);
}

inline CheckResult format_roundtrip() {
    const std::string suite = "format-roundtrip";
    RationalGen gen(0xf04a7u);
    std::vector<Rational> samples = bernoulli_row(41);
    for (int i = 0; i < 200; ++i) {
        samples.push_back(gen.small());
    }
    samples.push_back(make_rational(pow2(200) + 1, pow2(100) * 3));
    for (const Rational& q : samples) {
        const Rational back = parse_rational(to_string(q));
        if (back != q) {
            return fail(suite, "('" + to_string(q) + "')", q, back);
        }
    }
    return ok(suite);
}

}  // namespace verify_detail

/// Runs every consistency suite and returns one result per suite, in a fixed
/// order. Sweep sizes scale with the given bounds; structural identities are
/// checked at their full fixed ranges regardless.
inline std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    namespace vd = verify_detail;
    if (options.max_N < 1 || options.max_n < 1 || options.max_p < 1) {
        throw DomainError("verification bounds must be >= 1");
    }
    DilcherTriangle triangle = dilcher_triangle(20);
    if (options.corrupt_triangle) {
        triangle = triangle.with_entry(5, 1, triangle.at(5, 1) + 1);
    }
    return {
        vd::series_ring(),
        vd::series_egf_odd(options.max_n),
        vd::bernoulli_four_methods(options.max_n, options.max_p),
        vd::bernoulli_odd_vanish(),
        vd::stirling_rows(),
        vd::norlund_unnumbered_identity(),
        vd::norlund_polynomials(options.max_n),
        vd::umbral_identity(),
        vd::umbral_linearity(),
        vd::umbral_expand_before_eval(),
        vd::mp_structure(),
        vd::mp_transform(),
        vd::dilcher_grand_crosscheck(options.max_N, options.max_n),
        vd::dilcher_boundary(options.max_N),
        vd::dilcher_small_regime(),
        vd::dilcher_triangle_mp(triangle),
        vd::dilcher_recurrence_equivalence(),
        vd::dilcher_closed_forms(),
        vd::format_roundtrip(),
    };
}

}  // namespace norlund
