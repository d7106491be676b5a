#pragma once

#include <complex>
#include <map>
#include <vector>

#include "quartic/common.hpp"

namespace quartic {

/// All integers in [1, P] whose prime factors are at most R.
struct SmoothSet {
    i64 P = 0;
    i64 R = 0;
    std::vector<i64> members;  // ascending, no duplicates, contains 1

    i64 card() const { return static_cast<i64>(members.size()); }
};

/// Exact membership by smallest-prime-factor sieve. Requires 1 <= R <= P.
SmoothSet smooth_set(i64 P, i64 R);

/// sum over x in S of e(alpha * x^4), e(theta) = exp(2*pi*i*theta).
/// The phase alpha * x^4 is reduced mod 1 in 128-bit fixed point, so the
/// result is accurate to a few ulp per term. Requires P <= 65535: beyond
/// that the phase outruns what a double argument can carry.
std::complex<double> weyl_sum(double alpha, const SmoothSet& S);

/// Exact fractional part of alpha * m for integer m, same reduction as
/// weyl_sum uses.
double frac_of_multiple(double alpha, u64 m);

/// Fourier coefficients of |h|^6: psi(n) counts six-tuples over the smooth
/// set with x1^4 + x2^4 + x3^4 - x4^4 - x5^4 - x6^4 = n. Keys are 128-bit:
/// sums are accumulated in 64-bit words while 3 P^4 stays in the safe range
/// and promoted to the wide representation beyond it.
struct RepresentationTable {
    std::map<i128, u64> psi;  // full signed support, zero entries omitted
    i128 support_bound = 0;   // 3 * P^4
    u64 total = 0;            // card^6

    u64 at(i128 n) const {
        auto it = psi.find(n);
        return it == psi.end() ? 0 : it->second;
    }
};

/// Builds the three-term fourth-power sum multiset once and autocorrelates it.
RepresentationTable psi_table(const SmoothSet& S, const Budget& budget = {});

/// The t-th moment of the Weyl sum for even t, computed exactly by
/// orthogonality: the number of solutions of
///     x_1^4 + ... + x_{t/2}^4 = y_1^4 + ... + y_{t/2}^4
/// with all variables in the smooth set.
struct MomentValue {
    int t = 0;
    u64 value = 0;
    i64 P = 0;
    i64 R = 0;
};

/// Requires t in {2, 4, 6, 8, 10, 12}.
MomentValue even_moment(const SmoothSet& S, int t, const Budget& budget = {});

/// log_P(moment) - (t - 4): a finite-size surrogate for the moment growth
/// exponent, reported for qualitative comparison only. Requires P >= 2.
double empirical_delta(i64 P, i64 R, int t, const Budget& budget = {});

}  // namespace quartic
