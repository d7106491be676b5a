#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "quartic/smooth.hpp"

using namespace quartic;

TEST_CASE("smooth set membership") {
    SmoothSet S = smooth_set(10, 3);
    CHECK(S.members == std::vector<i64>{1, 2, 3, 4, 6, 8, 9});
    CHECK(smooth_set(5, 5).members == std::vector<i64>{1, 2, 3, 4, 5});
    CHECK(smooth_set(1, 1).members == std::vector<i64>{1});
    CHECK_THROWS_AS(smooth_set(10, 0), PreconditionError);
    CHECK_THROWS_AS(smooth_set(10, 11), PreconditionError);
}

TEST_CASE("weyl sum values") {
    SmoothSet S12 = smooth_set(2, 2);
    CHECK(weyl_sum(0.0, S12) == std::complex<double>(2.0, 0.0));
    // e(1/2) + e(8) = -1 + 1
    CHECK(std::abs(weyl_sum(0.5, S12)) < 1e-12);

    SmoothSet S = smooth_set(9, 9);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i)
        CHECK(std::abs(weyl_sum(unit(rng), S)) <= static_cast<double>(S.card()) + 1e-12);
}

TEST_CASE("exact fractional reduction") {
    CHECK(frac_of_multiple(0.5, 3) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(frac_of_multiple(0.0, 1234567) == 0.0);
    // against long-double reference at moderate sizes
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double alpha = unit(rng);
        u64 m = rng() % 100000;
        long double direct = std::fmod(static_cast<long double>(alpha) * m, 1.0L);
        CHECK(std::abs(frac_of_multiple(alpha, m) - static_cast<double>(direct)) < 1e-12);
    }
}

TEST_CASE("psi table for the two-element set") {
    RepresentationTable table = psi_table(smooth_set(2, 2));
    CHECK(table.at(0) == 20);
    CHECK(table.at(15) == 15);
    CHECK(table.at(-15) == 15);
    CHECK(table.at(30) == 6);
    CHECK(table.at(45) == 1);
    CHECK(table.support_bound == 48);
    CHECK(table.at(4 * 16) == 0);  // beyond the support bound
    u64 total = 0;
    for (const auto& [n, count] : table.psi) total += count;
    CHECK(total == 64);
    CHECK(table.total == 64);
}

TEST_CASE("psi symmetry, peak and mass") {
    for (i64 P : {2, 3, 4}) {
        SmoothSet S = smooth_set(P, P);
        RepresentationTable table = psi_table(S);
        u64 total = 0;
        for (const auto& [n, count] : table.psi) {
            CHECK(count == table.at(-n));
            CHECK(count <= table.at(0));
            CHECK((n < 0 ? -n : n) <= table.support_bound);
            total += count;
        }
        u64 card = static_cast<u64>(S.card());
        CHECK(total == card * card * card * card * card * card);
    }
}

TEST_CASE("Parseval pairing with the twelfth moment") {
    for (i64 P : {3, 4, 5}) {
        SmoothSet S = smooth_set(P, P);
        RepresentationTable table = psi_table(S);
        u64 sum_squares = 0;
        for (const auto& [n, count] : table.psi) sum_squares += count * count;
        CHECK(sum_squares == even_moment(S, 12).value);
    }
}

TEST_CASE("even moments") {
    CHECK(even_moment(smooth_set(3, 3), 2).value == 3);
    SmoothSet S12 = smooth_set(2, 2);
    CHECK(even_moment(S12, 4).value == 6);
    CHECK(even_moment(S12, 6).value == psi_table(S12).at(0));
    CHECK_THROWS_AS(even_moment(S12, 3), PreconditionError);
    CHECK_THROWS_AS(even_moment(S12, 14), PreconditionError);
}

TEST_CASE("even moments match full enumeration") {
    for (i64 P : {2, 3, 4, 6, 12}) {
        SmoothSet S = smooth_set(P, P);
        for (int t : {2, 4}) CHECK(even_moment(S, t).value == oracles::naive_even_moment(S, t));
    }
    for (i64 P : {4, 8, 12}) {
        SmoothSet S = smooth_set(P, P);
        CHECK(even_moment(S, 6).value == oracles::naive_even_moment(S, 6));
    }
    SmoothSet S6 = smooth_set(6, 6);
    CHECK(even_moment(S6, 8).value == oracles::naive_even_moment(S6, 8));
    // a genuinely smooth set, R < P
    SmoothSet S83 = smooth_set(8, 3);
    for (int t : {2, 4, 6}) CHECK(even_moment(S83, t).value == oracles::naive_even_moment(S83, t));
}

TEST_CASE("moment growth surrogate") {
    CHECK(empirical_delta(3, 3, 2) == doctest::Approx(3.0));
    CHECK(empirical_delta(2, 2, 4) == doctest::Approx(std::log(6.0) / std::log(2.0)));
    double d4 = empirical_delta(4, 4, 6);
    double d8 = empirical_delta(8, 8, 6);
    double d16 = empirical_delta(16, 16, 6);
    CHECK(d4 > d8);
    CHECK(d8 > d16);
    CHECK_THROWS_AS(empirical_delta(1, 1, 2), PreconditionError);
}

TEST_CASE("discrete orthogonality recovers psi from the Weyl sum") {
    SmoothSet S = smooth_set(3, 3);
    RepresentationTable table = psi_table(S);
    const i64 N = 6 * 81 + 7;  // exceeds twice the support bound
    for (i64 n : {i64{0}, i64{15}, i64{16}, i64{80}, i64{-30}, i64{200}}) {
        std::complex<double> acc = 0.0;
        for (i64 j = 0; j < N; ++j) {
            double alpha = static_cast<double>(j) / static_cast<double>(N);
            std::complex<double> h = weyl_sum(alpha, S);
            double mag2 = std::norm(h);
            double theta = -2.0 * std::numbers::pi * static_cast<double>((j * ((n % N + N) % N)) % N) /
                           static_cast<double>(N);
            acc += mag2 * mag2 * mag2 * std::complex<double>(std::cos(theta), std::sin(theta));
        }
        acc /= static_cast<double>(N);
        CHECK(std::abs(acc.real() - static_cast<double>(table.at(n))) < 2e-5);
        CHECK(std::abs(acc.imag()) < 2e-5);
    }
}

TEST_CASE("psi respects the entry budget") {
    Budget tiny;
    tiny.max_multiset_entries = 10;
    CHECK_THROWS_AS(psi_table(smooth_set(6, 6), tiny), BudgetExceeded);
    CHECK_THROWS_AS(even_moment(smooth_set(8, 8), 8, tiny), BudgetExceeded);
}
