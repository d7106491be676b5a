#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "quartic/local.hpp"

using namespace quartic;

namespace {

i64 mod_pow4(i64 x, i64 m) {
    i64 r = ((x % m) + m) % m;
    i64 r2 = static_cast<i64>(static_cast<i128>(r) * r % m);
    return static_cast<i64>(static_cast<i128>(r2) * r2 % m);
}

// Independent re-substitution of the quintic congruence.
i64 quintic_residual(const std::vector<i64>& y, i64 a, i64 m) {
    i64 total = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        i64 term = static_cast<i64>(static_cast<i128>(kQuinticCoefficients[i] % m) *
                                    mod_pow4(y[i], m) % m);
        total = (total + term) % m;
    }
    return ((total - a) % m + m) % m;
}

i64 int_pow(i64 base, int exponent) {
    i64 result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

}  // namespace

TEST_CASE("gauss sum base cases") {
    CHECK(gauss_sum(1, 7).value == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(gauss_sum(2, 1).value) < 1e-12);

    // odd fourth powers are 1 mod 16, even ones 0
    std::complex<double> expected =
        8.0 + 8.0 * std::polar(1.0, 2.0 * std::numbers::pi / 16.0);
    CHECK(std::abs(gauss_sum(16, 1).value - expected) < 1e-10);
    CHECK_THROWS_AS(gauss_sum(0, 1), PreconditionError);
}

TEST_CASE("gauss sum exact form sums to q") {
    for (i64 q : {3, 7, 16, 25, 48}) {
        GaussSumValue S = gauss_sum(q, 5);
        i64 total = 0;
        for (auto [count, numerator] : S.exact_form) {
            CHECK(count > 0);
            CHECK(numerator >= 0);
            CHECK(numerator < q);
            total += count;
        }
        CHECK(total == q);
    }
}

TEST_CASE("gauss sum magnitude bound and decay surrogate") {
    double scanned_max = 0.0;
    for (i64 q = 1; q <= 120; ++q)
        for (i64 a = 1; a <= q; ++a) {
            double magnitude = std::abs(gauss_sum(q, a).value);
            CHECK(magnitude <= static_cast<double>(q) * (1.0 + 1e-12));
            scanned_max = std::max(scanned_max, magnitude * std::pow(static_cast<double>(q), -0.75) *
                                                    std::pow(static_cast<double>(std::gcd(q, a)), -0.25));
        }
    // the q <= 500 scan maximum is 2.5887 (at q = 80, a = 11); q <= 120
    // already attains it
    CHECK(scanned_max <= 2.5888);
    CHECK(scanned_max > 2.58);
}

TEST_CASE("gauss sums factor through coprime moduli with cubed twists") {
    for (auto [q, r] : {std::pair<i64, i64>{3, 5}, {4, 9}, {7, 8}, {16, 27}, {25, 27}}) {
        REQUIRE(std::gcd(q, r) == 1);
        for (i64 a : {i64{1}, i64{2}, i64{11}}) {
            std::complex<double> whole = gauss_sum(q * r, a).value;
            std::complex<double> left = gauss_sum(q, a * r * r * r).value;
            std::complex<double> right = gauss_sum(r, a * q * q * q).value;
            CHECK(std::abs(whole - left * right) < 1e-8);
        }
    }
}

TEST_CASE("quintic congruence solver") {
    SUBCASE("documented cases") {
        auto y = solve_congruence_quintic(5, 2);
        CHECK(quintic_residual({y.begin(), y.end()}, 2, 5) == 0);
        CHECK(y[3] == 0);  // coefficient-5 slot
        bool nonzero = false;
        for (i64 v : y) nonzero = nonzero || v % 5 != 0;
        CHECK(nonzero);

        CHECK(solve_congruence_quintic(3, 1) == std::array<i64, 5>{1, 0, 0, 0, 0});
    }
    SUBCASE("every residue class for every odd prime up to 60") {
        for (i64 p : primes_up_to(60)) {
            if (p == 2) continue;
            for (i64 a = 0; a < p; ++a) {
                auto y = solve_congruence_quintic(p, a);
                CHECK(quintic_residual({y.begin(), y.end()}, a, p) == 0);
                bool unit = false;
                for (i64 v : y) unit = unit || v % p != 0;
                CHECK(unit);
                if (p == 3) CHECK(y[2] == 0);
                if (p == 5) CHECK(y[3] == 0);
                if (p == 7) CHECK(y[4] == 0);
            }
        }
    }
    SUBCASE("rejects non-primes and even numbers") {
        CHECK_THROWS_AS(solve_congruence_quintic(9, 1), PreconditionError);
        CHECK_THROWS_AS(solve_congruence_quintic(2, 1), PreconditionError);
    }
}

TEST_CASE("mod-16 solver covers every residue with a literal one") {
    for (i64 a = 0; a < 16; ++a) {
        auto y = solve_mod16(a);
        CHECK(quintic_residual({y.begin(), y.end()}, a, 16) == 0);
        CHECK(std::count(y.begin(), y.end(), 1) >= 1);
    }
    CHECK(solve_mod16(0) == std::array<i64, 5>{1, 2, 1, 1, 1});
    CHECK(solve_mod16(1) == std::array<i64, 5>{1, 2, 2, 2, 2});
    CHECK(solve_mod16(35) == solve_mod16(3));
}

TEST_CASE("p-adic points on the quintic form") {
    SUBCASE("odd prime verification by substitution") {
        for (i64 p : {3, 5, 7, 11, 17}) {
            for (i64 a : {i64{0}, i64{1}, i64{17}, i64{-9}, i64{123}}) {
                PadicVector z = padic_point(p, a, 6);
                i64 modulus = int_pow(p, 6);
                CHECK(quintic_residual(z.coords, ((a % modulus) + modulus) % modulus, modulus) == 0);
                CHECK(z.witness_index >= 0);
                CHECK(z.coords[z.witness_index] % p != 0);
            }
        }
    }
    SUBCASE("trivially exact seed") {
        PadicVector z = padic_point(3, 1, 6);
        CHECK(z.coords == std::vector<i64>{1, 0, 0, 0, 0});
    }
    SUBCASE("two-adic lifting") {
        for (i64 a : {i64{0}, i64{1}, i64{5}, i64{-3}, i64{100}}) {
            PadicVector z = padic_point(2, a, 8);
            CHECK(quintic_residual(z.coords, ((a % 256) + 256) % 256, 256) == 0);
        }
        PadicVector shallow = padic_point(2, 7, 3);
        CHECK(quintic_residual(shallow.coords, 7 % 8, 8) == 0);
    }
}

TEST_CASE("diagonal p-adic solubility") {
    SUBCASE("the four-variable subform is soluble at 5") {
        DiagonalSolubility verdict = qp_soluble_diagonal({1, 1, -6, -12}, 5, 6);
        REQUIRE(verdict.soluble);
        const auto& x = verdict.witness->coords;
        i64 modulus = int_pow(5, 6);
        i64 f = 0;
        std::vector<i64> coeffs{1, 1, -6, -12};
        for (int i = 0; i < 4; ++i)
            f = ((f + static_cast<i128>(coeffs[i] % modulus) * mod_pow4(x[i], modulus)) % modulus +
                 modulus) %
                modulus;
        CHECK(f == 0);
    }
    SUBCASE("two fourth powers cannot cancel at 3") {
        DiagonalSolubility verdict = qp_soluble_diagonal({1, 1}, 3, 4);
        CHECK(!verdict.soluble);
        CHECK(verdict.concluded_modulus == 3);
    }
    SUBCASE("a difference of fourth powers is soluble everywhere") {
        for (i64 p : {2, 3, 5, 7, 13}) {
            DiagonalSolubility verdict = qp_soluble_diagonal({1, -1}, p, p == 2 ? 6 : 5);
            REQUIRE(verdict.soluble);
            CHECK(verdict.witness->coords == std::vector<i64>{1, 1});
        }
    }
    SUBCASE("rejects degenerate input") {
        CHECK_THROWS_AS(qp_soluble_diagonal({}, 3, 4), PreconditionError);
        CHECK_THROWS_AS(qp_soluble_diagonal({1, 0}, 3, 4), PreconditionError);
        CHECK_THROWS_AS(qp_soluble_diagonal({1, 1}, 2, 3), PreconditionError);
    }
}

TEST_CASE("integer search") {
    SUBCASE("difference form, bound two") {
        IntegerSearchResult result = integer_search(std::vector<i64>{1, -1}, 2);
        REQUIRE(result.solutions.size() == 9);
        CHECK(std::is_sorted(result.solutions.begin(), result.solutions.end()));
        for (const auto& sol : result.solutions) CHECK(std::abs(sol[0]) == std::abs(sol[1]));
    }
    SUBCASE("positive definite forms only vanish at zero") {
        IntegerSearchResult result = integer_search(std::vector<i64>{7, 5, 3, 1, 1}, 10);
        REQUIRE(result.solutions.size() == 1);
        CHECK(result.solutions[0] == std::vector<i64>{0, 0, 0, 0, 0});
    }
    SUBCASE("the quartic obstruction form has only the zero point") {
        IntegerSearchResult result = integer_search(std::vector<i64>{1, 1, -6, -12}, 20);
        REQUIRE(result.solutions.size() == 1);
    }
    SUBCASE("pair version on the failing system") {
        IntegerSearchResult result = integer_search(counterexample_system(9), 6);
        REQUIRE(result.solutions.size() == 1);
        CHECK(result.solutions[0] == std::vector<i64>(9, 0));
    }
    SUBCASE("bad bounds and budgets") {
        CHECK_THROWS_AS(integer_search(std::vector<i64>{1, -1}, 0), PreconditionError);
        Budget tiny;
        tiny.max_multiset_entries = 4;
        CHECK_THROWS_AS(integer_search(std::vector<i64>{1, -1, 2, -2}, 10, tiny), BudgetExceeded);
    }
}

TEST_CASE("integer search matches a sign-complete expansion") {
    // x1^4 + x2^4 = 2 x3^4 has the diagonal family |x1| = |x2| = |x3|
    IntegerSearchResult result = integer_search(std::vector<i64>{1, 1, -2}, 3);
    u64 expected = 1 + 3 * 8;  // zero plus sign choices of (±m, ±m, ±m), m = 1..3
    CHECK(result.solutions.size() == expected);
}

TEST_CASE("the failing system verifier") {
    SUBCASE("small-scale run confirms") {
        SolubilityReport report = verify_counterexample(9, 6, 20);
        CHECK(report.conclusion == HasseConclusion::CounterexampleConfirmedAtScale);
        CHECK(report.real_verdict.soluble);
        CHECK(std::abs(report.real_verdict.residual1) < 1e-9);
        CHECK(std::abs(report.real_verdict.residual2) < 1e-9);
        REQUIRE(report.local_verdicts.size() == primes_up_to(20).size());
        for (const auto& verdict : report.local_verdicts) {
            CHECK(verdict.soluble);
            CHECK(verdict.jacobian_full_rank);
            // independent re-substitution of both equations
            FormPair system = counterexample_system(9);
            i64 modulus = int_pow(verdict.p, verdict.precision);
            i64 f1 = 0, f2 = 0;
            for (int j = 0; j < 9; ++j) {
                i64 pow4 = mod_pow4(verdict.point[j], modulus);
                f1 = ((f1 + static_cast<i128>(system.A[j] % modulus) * pow4) % modulus + modulus) %
                     modulus;
                f2 = ((f2 + static_cast<i128>(system.B[j] % modulus) * pow4) % modulus + modulus) %
                     modulus;
            }
            CHECK(f1 == 0);
            CHECK(f2 == 0);
        }
    }
    SUBCASE("degenerate search bound is inconclusive") {
        SolubilityReport report = verify_counterexample(9, 0, 10);
        CHECK(report.conclusion == HasseConclusion::Inconclusive);
    }
    SUBCASE("too few variables") {
        CHECK_THROWS_AS(verify_counterexample(8, 5, 10), PreconditionError);
        CHECK_THROWS_AS(counterexample_system(8), PreconditionError);
    }
    SUBCASE("wider systems pad with positive definite columns") {
        SolubilityReport report = verify_counterexample(11, 2, 5);
        CHECK(report.conclusion == HasseConclusion::CounterexampleConfirmedAtScale);
    }
}

TEST_CASE("single-form place analysis") {
    SUBCASE("globally soluble difference form") {
        SolubilityReport report = analyze_diagonal_form({1, -1}, 10, 3);
        CHECK(report.conclusion == HasseConclusion::HassePrincipleEvidence);
        CHECK(report.real_verdict.soluble);
        CHECK(report.integer_solutions.size() > 1);
    }
    SUBCASE("positive definite form is consistent evidence") {
        SolubilityReport report = analyze_diagonal_form({1, 2}, 10, 3);
        CHECK(!report.real_verdict.soluble);
        CHECK(report.conclusion == HasseConclusion::HassePrincipleEvidence);
        CHECK(report.integer_solutions.size() == 1);
    }
    SUBCASE("no search is inconclusive") {
        SolubilityReport report = analyze_diagonal_form({1, -1}, 5, 0);
        CHECK(report.conclusion == HasseConclusion::Inconclusive);
    }
}
