#include "quartic/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "quartic/parallel.hpp"

namespace quartic {

namespace {

u64 fourth_power_u(i64 x) {
    u64 v = static_cast<u64>(x < 0 ? -x : x);
    return v * v * v * v;
}

// Largest P with 6 * P^4 comfortably inside int64.
constexpr i64 kNarrowHeightLimit = 30000;

// Distinct k-fold sums of fourth powers over S with multiplicities, built by
// iterated convolution. Deterministic (sorted keys). Key is int64 while the
// sums fit, the wide integer beyond (P above kNarrowHeightLimit).
template <typename Key>
std::map<Key, u64> fold_sums(const SmoothSet& S, int k, const Budget& budget) {
    double entries = 1.0;
    for (int i = 0; i < k; ++i) entries *= static_cast<double>(S.card());
    if (entries > static_cast<double>(budget.max_multiset_entries))
        throw BudgetExceeded("fourth-power sum multiset exceeds the entry budget");

    std::vector<Key> powers;
    powers.reserve(S.members.size());
    for (i64 x : S.members) {
        Key v = static_cast<Key>(x);
        powers.push_back(v * v * v * v);
    }
    std::map<Key, u64> sums{{Key{0}, 1}};
    for (int step = 0; step < k; ++step) {
        std::map<Key, u64> next;
        for (const auto& [value, count] : sums)
            for (Key pow4 : powers) next[value + pow4] += count;
        sums = std::move(next);
    }
    return sums;
}

template <typename Key>
std::map<i128, u64> autocorrelate(const std::map<Key, u64>& triples, const Budget& budget) {
    const u64 distinct = triples.size();
    if (distinct * distinct > budget.max_join_pairs)
        throw BudgetExceeded("psi autocorrelation exceeds the join budget");
    std::vector<std::pair<Key, u64>> flat(triples.begin(), triples.end());
    std::vector<std::map<i128, u64>> partial(chunk_count(flat.size()));
    parallel_chunks(flat.size(), [&](int chunk, u64 begin, u64 end) {
        auto& local = partial[chunk];
        for (u64 i = begin; i < end; ++i)
            for (const auto& [value, count] : flat)
                local[static_cast<i128>(flat[i].first) - value] += flat[i].second * count;
    });
    std::map<i128, u64> psi;
    for (const auto& local : partial)
        for (const auto& [n, count] : local) psi[n] += count;
    return psi;
}

}  // namespace

SmoothSet smooth_set(i64 P, i64 R) {
    if (R < 1 || R > P) throw PreconditionError("need 1 <= R <= P");

    // Smallest prime factor sieve; u is R-smooth iff every prime hit is <= R.
    std::vector<i64> spf(P + 1, 0);
    for (i64 i = 2; i <= P; ++i) {
        if (spf[i] != 0) continue;
        for (i64 j = i; j <= P; j += i)
            if (spf[j] == 0) spf[j] = i;
    }

    SmoothSet S{P, R, {}};
    for (i64 u = 1; u <= P; ++u) {
        i64 v = u;
        while (v > 1 && spf[v] <= R) v /= spf[v];
        if (v == 1) S.members.push_back(u);
    }
    return S;
}

double frac_of_multiple(double alpha, u64 m) {
    double frac = alpha - std::floor(alpha);
    if (frac >= 1.0) frac = 0.0;  // floor rounding at representable 1.0-eps
    if (frac == 0.0 || m == 0) return 0.0;

    // frac = mantissa / 2^shift exactly, mantissa < 2^53, so the product with
    // m < 2^63 fits in 128 bits and the reduction mod 1 is exact.
    int exp2 = 0;
    double mant = std::frexp(frac, &exp2);
    u64 mantissa = static_cast<u64>(std::ldexp(mant, 53));
    int shift = 53 - exp2;  // >= 53 since frac < 1
    u128 prod = static_cast<u128>(mantissa) * m;
    long double theta;
    if (shift >= 128) {
        theta = std::ldexp(static_cast<long double>(prod), -shift);
    } else {
        u128 reduced = prod & ((static_cast<u128>(1) << shift) - 1);
        theta = std::ldexp(static_cast<long double>(reduced), -shift);
    }
    return static_cast<double>(theta);
}

std::complex<double> weyl_sum(double alpha, const SmoothSet& S) {
    if (S.P > 65535)
        throw PreconditionError("phase reduction of x^4 exceeds the double-precision range");
    long double re = 0.0L, im = 0.0L;
    for (i64 x : S.members) {
        long double theta =
            2.0L * std::numbers::pi_v<long double> * frac_of_multiple(alpha, fourth_power_u(x));
        re += std::cos(theta);
        im += std::sin(theta);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

RepresentationTable psi_table(const SmoothSet& S, const Budget& budget) {
    RepresentationTable table;
    i128 height = S.P;
    table.support_bound = 3 * height * height * height * height;
    u64 card = static_cast<u64>(S.card());
    table.total = card * card * card * card * card * card;
    if (S.P <= kNarrowHeightLimit) {
        table.psi = autocorrelate(fold_sums<i64>(S, 3, budget), budget);
    } else {
        table.psi = autocorrelate(fold_sums<i128>(S, 3, budget), budget);
    }
    return table;
}

MomentValue even_moment(const SmoothSet& S, int t, const Budget& budget) {
    if (t < 2 || t > 12 || t % 2 != 0)
        throw PreconditionError("even moment requires t in {2, 4, 6, 8, 10, 12}");
    u64 value = 0;
    if (S.P <= kNarrowHeightLimit) {
        for (const auto& [_, count] : fold_sums<i64>(S, t / 2, budget)) value += count * count;
    } else {
        for (const auto& [_, count] : fold_sums<i128>(S, t / 2, budget)) value += count * count;
    }
    return {t, value, S.P, S.R};
}

double empirical_delta(i64 P, i64 R, int t, const Budget& budget) {
    if (P < 2) throw PreconditionError("surrogate exponent needs P >= 2");
    MomentValue moment = even_moment(smooth_set(P, R), t, budget);
    return std::log(static_cast<double>(moment.value)) / std::log(static_cast<double>(P)) -
           (t - 4);
}

}  // namespace quartic
