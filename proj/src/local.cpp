#include "quartic/local.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "quartic/parallel.hpp"

namespace quartic {

namespace {

i64 mulmod(i64 x, i64 y, i64 m) {
    return static_cast<i64>(static_cast<i128>(x) * y % m);
}

i64 reduce(i64 x, i64 m) {
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

i64 powmod(i64 base, int exponent, i64 m) {
    i64 result = 1 % m;
    i64 b = reduce(base, m);
    for (int i = 0; i < exponent; ++i) result = mulmod(result, b, m);
    return result;
}

i64 modinv(i64 a, i64 m) {
    i64 old_r = reduce(a, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 quo = old_r / r;
        old_r -= quo * r;
        std::swap(old_r, r);
        old_s -= quo * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) throw TheoremViolation("modular inverse of a non-unit requested");
    return reduce(old_s, m);
}

int valuation(i64 x, i64 p) {
    int v = 0;
    while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

i64 power_checked(i64 p, int k) {
    i64 m = 1;
    for (int i = 0; i < k; ++i) {
        if (m > 4'000'000'000'000'000'000 / p)
            throw PreconditionError("p^precision exceeds the 64-bit working range");
        m *= p;
    }
    return m;
}

/// Solves c*z^4 = rhs (mod p^K) by Newton iteration from a seed whose
/// residual valuation already exceeds twice the derivative valuation.
i64 lift_univariate(i64 c, i64 rhs, i64 seed, i64 p, int K) {
    const i64 M = power_checked(p, K);
    i64 z = reduce(seed, M);
    for (int iter = 0; iter <= 2 * K + 4; ++iter) {
        i64 fz = reduce(mulmod(reduce(c, M), powmod(z, 4, M), M) - reduce(rhs, M), M);
        if (fz == 0) return z;
        i64 fp = mulmod(reduce(4 * (c % M), M), powmod(z, 3, M), M);
        if (fp == 0) throw TheoremViolation("vanishing derivative in Newton lift");
        int v = valuation(fp, p);
        if (valuation(fz, p) < 2 * v + 1)
            throw TheoremViolation("Newton lift seeded below the admissible valuation");
        i64 pv = 1;
        for (int i = 0; i < v; ++i) pv *= p;
        i64 step = mulmod(fz / pv, modinv(fp / pv, M), M);
        z = reduce(z - step, M);
    }
    throw TheoremViolation("Newton lift failed to converge");
}

std::vector<std::pair<i64, i64>> quartic_residue_buckets(i64 q) {
    // counts[m] = #{1 <= r <= q : r^4 = m (mod q)}
    std::map<i64, i64> counts;
    for (i64 r = 1; r <= q; ++r) ++counts[powmod(r, 4, q)];
    return {counts.begin(), counts.end()};
}

struct PairHash {
    std::size_t operator()(const std::pair<i64, i64>& key) const {
        u64 h = static_cast<u64>(key.first) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<u64>(key.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

i64 quintic_value_mod(const std::array<i64, 5>& y, i64 M) {
    i64 total = 0;
    for (int i = 0; i < 5; ++i) {
        i64 term = mulmod(kQuinticCoefficients[i] % M, powmod(y[i], 4, M), M);
        total = reduce(total + term, M);
    }
    return total;
}

}  // namespace

std::vector<i64> primes_up_to(i64 bound) {
    std::vector<i64> primes;
    if (bound < 2) return primes;
    std::vector<char> composite(bound + 1, 0);
    for (i64 i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (i64 j = i * i; j <= bound; j += i) composite[j] = 1;
    }
    return primes;
}

GaussSumValue gauss_sum(i64 q, i64 a) {
    if (q < 1) throw PreconditionError("gauss_sum needs q >= 1");
    GaussSumValue result;
    result.q = q;
    result.a = a;

    const i64 a_red = reduce(a, q);
    std::map<i64, i64> by_exponent;
    for (const auto& [residue, count] : quartic_residue_buckets(q))
        by_exponent[mulmod(a_red, residue, q)] += count;
    result.exact_form.assign(by_exponent.begin(), by_exponent.end());
    // exact_form stores (numerator, count); present it as (count, numerator).
    for (auto& [x, y] : result.exact_form) std::swap(x, y);

    long double re = 0.0L, im = 0.0L;
    for (const auto& [count, numerator] : result.exact_form) {
        long double theta = 2.0L * std::numbers::pi_v<long double> *
                            static_cast<long double>(numerator) / static_cast<long double>(q);
        re += static_cast<long double>(count) * std::cos(theta);
        im += static_cast<long double>(count) * std::sin(theta);
    }
    result.value = {static_cast<double>(re), static_cast<double>(im)};
    return result;
}

std::array<i64, 5> solve_congruence_quintic(i64 p, i64 a) {
    if (p < 3 || primes_up_to(p).back() != p)
        throw PreconditionError("solve_congruence_quintic needs an odd prime");
    const i64 target = reduce(a, p);

    // Nonzero fourth-power residues with the smallest y attaining each.
    std::map<i64, i64> star;
    for (i64 y = 1; y < p; ++y) star.emplace(powmod(y, 4, p), y);

    std::vector<std::array<i64, 5>> witness(p), next(p);
    std::vector<char> present(p, 0), next_present(p, 0);

    // First variable is forced nonzero so the solution is never all-zero.
    for (const auto& [residue, y] : star) {
        i64 r = mulmod(kQuinticCoefficients[0] % p, residue, p);
        if (!present[r]) {
            present[r] = 1;
            witness[r] = {y, 0, 0, 0, 0};
        }
    }

    for (int level = 1; level < 5; ++level) {
        const i64 coefficient = kQuinticCoefficients[level];
        std::fill(next_present.begin(), next_present.end(), 0);
        // Zero extension first: keeps earlier witnesses minimal.
        for (i64 r = 0; r < p; ++r) {
            if (!present[r]) continue;
            next_present[r] = 1;
            next[r] = witness[r];
        }
        if (coefficient % p != 0) {  // variable with coefficient p stays zero
            for (i64 r = 0; r < p; ++r) {
                if (!present[r]) continue;
                for (const auto& [residue, y] : star) {
                    i64 nr = reduce(r + mulmod(coefficient % p, residue, p), p);
                    if (next_present[nr]) continue;
                    next_present[nr] = 1;
                    next[nr] = witness[r];
                    next[nr][level] = y;
                }
            }
        }
        witness.swap(next);
        present.swap(next_present);
    }

    if (!present[target])
        throw TheoremViolation("quintic congruence missed a residue class mod " +
                               std::to_string(p));
    return witness[target];
}

std::array<i64, 5> solve_mod16(i64 a) {
    const i64 target = reduce(a, 16);
    // y^4 mod 16 is 1 for odd y and 0 for even y, so a solution is a subset
    // of the coefficients summing to the target; odd slots become 1.
    for (int mask = 1; mask < 32; ++mask) {
        i64 sum = 0;
        for (int i = 0; i < 5; ++i)
            if (mask & (1 << i)) sum += kQuinticCoefficients[i];
        if (reduce(sum, 16) != target) continue;
        std::array<i64, 5> y{};
        for (int i = 0; i < 5; ++i) y[i] = (mask & (1 << i)) ? 1 : 2;
        return y;
    }
    throw TheoremViolation("mod-16 quintic congruence missed a residue class");
}

PadicVector padic_point(i64 p, i64 a, int precision) {
    if (precision < 1) throw PreconditionError("padic_point needs precision >= 1");

    PadicVector result;
    result.p = p;
    result.precision = precision;

    if (p == 2) {
        const int K = std::max(precision, 5);
        const i64 M = power_checked(2, K);
        std::array<i64, 5> y = solve_mod16(a);
        int j = 0;
        while (y[j] != 1) ++j;
        i64 rest = 0;
        for (int i = 0; i < 5; ++i)
            if (i != j) rest = reduce(rest + mulmod(kQuinticCoefficients[i], powmod(y[i], 4, M), M), M);
        i64 rhs = reduce(reduce(a, M) - rest, M);
        // Odd fourth powers mod 32 are 1 or 17; one of the two seeds matches.
        i64 seed = 0;
        for (i64 candidate : {1, 3})
            if (reduce(mulmod(kQuinticCoefficients[j], powmod(candidate, 4, 32), 32) - rhs, 32) == 0)
                seed = candidate;
        if (seed == 0) throw TheoremViolation("no 2-adic seed at modulus 32");
        i64 z = lift_univariate(kQuinticCoefficients[j], rhs, seed, 2, K);

        const i64 Mout = power_checked(2, precision);
        result.coords.assign(y.begin(), y.end());
        result.coords[j] = z;
        for (auto& value : result.coords) value = reduce(value, Mout);
        result.witness_index = j;
        return result;
    }

    if (p < 3 || p % 2 == 0) throw PreconditionError("padic_point needs a prime");
    const i64 M = power_checked(p, precision);
    std::array<i64, 5> y = solve_congruence_quintic(p, reduce(a, p));
    int j = -1;
    for (int i = 0; i < 5 && j < 0; ++i)
        if (y[i] % p != 0 && kQuinticCoefficients[i] % p != 0) j = i;
    if (j < 0) throw TheoremViolation("no unit coordinate to lift");

    i64 rest = 0;
    for (int i = 0; i < 5; ++i)
        if (i != j) rest = reduce(rest + mulmod(kQuinticCoefficients[i] % M, powmod(y[i], 4, M), M), M);
    i64 rhs = reduce(reduce(a, M) - rest, M);
    i64 z = lift_univariate(kQuinticCoefficients[j], rhs, y[j], p, precision);

    result.coords.assign(y.begin(), y.end());
    result.coords[j] = z;
    result.witness_index = j;

    std::array<i64, 5> check;
    std::copy(result.coords.begin(), result.coords.end(), check.begin());
    if (quintic_value_mod(check, M) != reduce(a, M))
        throw TheoremViolation("lifted point fails re-substitution");
    return result;
}

DiagonalSolubility qp_soluble_diagonal(const std::vector<i64>& coeffs, i64 p, int precision,
                                       const Budget& budget) {
    if (coeffs.empty()) throw PreconditionError("empty coefficient vector");
    for (i64 c : coeffs)
        if (c == 0) throw PreconditionError("diagonal coefficients must be nonzero");
    if (p < 2) throw PreconditionError("p must be prime");
    const int nvars = static_cast<int>(coeffs.size());
    const int threshold = p == 2 ? 5 : 1;
    if (precision < threshold)
        throw PreconditionError("precision below the lifting threshold for this prime");

    for (int level = threshold;; ++level) {
        const i64 M = power_checked(p, level);
        double cost = 1.0;
        for (int i = 0; i < nvars; ++i) cost *= static_cast<double>(M);
        if (cost > static_cast<double>(budget.max_multiset_entries)) {
            if (level == threshold)
                throw BudgetExceeded("p-adic search space exceeds the budget at the threshold");
            throw BudgetExceeded("p-adic solubility undecided within the search budget");
        }

        // Per-variable tables of c_i * r^4 mod M.
        std::vector<std::vector<i64>> term(nvars, std::vector<i64>(M));
        for (int i = 0; i < nvars; ++i)
            for (i64 r = 0; r < M; ++r) term[i][r] = mulmod(reduce(coeffs[i], M), powmod(r, 4, M), M);

        bool any_primitive_solution = false;
        std::vector<i64> x(nvars, 0);

        // Lexicographic scan with the last variable resolved by lookup.
        std::unordered_map<i64, std::vector<i64>> last_by_value;
        for (i64 r = 0; r < M; ++r) last_by_value[term[nvars - 1][r]].push_back(r);

        std::vector<i64> partial(nvars, 0);
        std::optional<std::vector<i64>> witness;

        auto try_solution = [&](const std::vector<i64>& sol) {
            bool primitive = false;
            for (i64 v : sol) primitive = primitive || v % p != 0;
            if (!primitive) return;
            any_primitive_solution = true;
            if (witness) return;
            for (int i = 0; i < nvars; ++i) {
                i64 derivative = mulmod(reduce(4 * coeffs[i], M), powmod(sol[i], 3, M), M);
                if (derivative == 0) continue;
                if (level >= 2 * valuation(derivative, p) + 1) {
                    witness = sol;
                    // Remember which coordinate is liftable via the last slot.
                    witness->push_back(i);
                    return;
                }
            }
        };

        std::function<void(int)> scan = [&](int depth) {
            if (witness && any_primitive_solution) return;
            if (depth == nvars - 1) {
                i64 needed = reduce(-partial[depth], M);
                auto it = last_by_value.find(needed);
                if (it == last_by_value.end()) return;
                for (i64 r : it->second) {
                    x[depth] = r;
                    try_solution(x);
                }
                return;
            }
            for (i64 r = 0; r < M; ++r) {
                x[depth] = r;
                partial[depth + 1] = reduce(partial[depth] + term[depth][r], M);
                scan(depth + 1);
            }
        };
        partial[0] = 0;
        scan(0);

        if (witness) {
            int index = static_cast<int>(witness->back());
            witness->pop_back();
            const i64 Mfull = power_checked(p, precision);
            i64 rest = 0;
            for (int i = 0; i < nvars; ++i)
                if (i != index)
                    rest = reduce(rest + mulmod(reduce(coeffs[i], Mfull),
                                                powmod((*witness)[i], 4, Mfull), Mfull),
                                  Mfull);
            i64 z = lift_univariate(coeffs[index], reduce(-rest, Mfull), (*witness)[index], p,
                                    precision);
            PadicVector point;
            point.p = p;
            point.precision = precision;
            point.coords = *witness;
            point.coords[index] = z;
            point.witness_index = index;
            return {true, point, M};
        }
        if (!any_primitive_solution) {
            // Every nontrivial p-adic zero scales to a primitive one, which
            // would reduce to a primitive solution mod M. None exists.
            return {false, std::nullopt, M};
        }
    }
}

namespace {

struct HalfTable {
    std::vector<int> positions;  // original column indices in this half
    std::unordered_map<std::pair<i64, i64>, std::vector<std::vector<i64>>, PairHash> by_value;
};

HalfTable enumerate_half(const std::vector<int>& positions, const std::vector<i64>& c1,
                         const std::vector<i64>& c2, i64 bound) {
    HalfTable table;
    table.positions = positions;
    std::vector<i64> magnitudes(positions.size(), 0);
    std::function<void(std::size_t, i64, i64)> recurse = [&](std::size_t depth, i64 u, i64 v) {
        if (depth == positions.size()) {
            table.by_value[{u, v}].push_back(magnitudes);
            return;
        }
        int column = positions[depth];
        for (i64 magnitude = 0; magnitude <= bound; ++magnitude) {
            magnitudes[depth] = magnitude;
            i64 pow4 = magnitude * magnitude * magnitude * magnitude;
            recurse(depth + 1, u + c1[column] * pow4, v + c2[column] * pow4);
        }
    };
    recurse(0, 0, 0);
    return table;
}

IntegerSearchResult search_columns(const std::vector<i64>& c1, const std::vector<i64>& c2,
                                   i64 bound, const Budget& budget) {
    if (bound < 1) throw PreconditionError("integer_search needs bound >= 1");
    const int s = static_cast<int>(c1.size());

    // Balance the halves: big coefficients alternate to keep the two value
    // ranges comparable.
    std::vector<int> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return std::max(std::abs(c1[i]), std::abs(c2[i])) >
               std::max(std::abs(c1[j]), std::abs(c2[j]));
    });
    std::vector<int> first_half, second_half;
    for (int i = 0; i < s; ++i)
        (i % 2 == 0 ? first_half : second_half).push_back(order[i]);
    if (second_half.empty()) second_half.push_back(first_half.back()), first_half.pop_back();

    double half_cost = std::pow(static_cast<double>(bound + 1),
                                static_cast<double>(std::max(first_half.size(), second_half.size())));
    if (half_cost > static_cast<double>(budget.max_multiset_entries))
        throw BudgetExceeded("integer search half-space exceeds the entry budget");

    HalfTable left = enumerate_half(first_half, c1, c2, bound);
    HalfTable right = enumerate_half(second_half, c1, c2, bound);

    IntegerSearchResult result;
    result.bound = bound;
    std::vector<i64> full(s, 0);

    std::function<void(std::size_t, const std::vector<i64>&)> emit_signs =
        [&](std::size_t index, const std::vector<i64>& magnitudes) {
            if (index == magnitudes.size()) {
                if (result.solutions.size() >= budget.max_solutions)
                    throw BudgetExceeded("integer search solution list exceeds the budget");
                result.solutions.push_back(full);
                return;
            }
            // index runs over the concatenated position lists
            int column = index < left.positions.size()
                             ? left.positions[index]
                             : right.positions[index - left.positions.size()];
            i64 magnitude = magnitudes[index];
            full[column] = magnitude;
            emit_signs(index + 1, magnitudes);
            if (magnitude != 0) {
                full[column] = -magnitude;
                emit_signs(index + 1, magnitudes);
            }
        };

    for (const auto& [value, left_tuples] : left.by_value) {
        auto it = right.by_value.find({-value.first, -value.second});
        if (it == right.by_value.end()) continue;
        for (const auto& lt : left_tuples)
            for (const auto& rt : it->second) {
                std::vector<i64> merged = lt;
                merged.insert(merged.end(), rt.begin(), rt.end());
                emit_signs(0, merged);
            }
    }
    std::sort(result.solutions.begin(), result.solutions.end());
    return result;
}

}  // namespace

IntegerSearchResult integer_search(const std::vector<i64>& coeffs, i64 bound,
                                   const Budget& budget) {
    if (coeffs.empty()) throw PreconditionError("empty coefficient vector");
    std::vector<i64> zeros(coeffs.size(), 0);
    return search_columns(coeffs, zeros, bound, budget);
}

IntegerSearchResult integer_search(const FormPair& pair, i64 bound, const Budget& budget) {
    validate(pair);
    return search_columns(pair.A, pair.B, bound, budget);
}

FormPair counterexample_system(int s) {
    if (s < 9) throw PreconditionError("the failing system needs s >= 9");
    FormPair pair;
    pair.A.assign(s, 0);
    pair.B.assign(s, 0);
    pair.A[0] = 1;
    pair.A[1] = 1;
    pair.A[2] = -6;
    pair.A[3] = -12;
    pair.B[3] = 1;
    pair.B[4] = -7;
    pair.B[5] = -5;
    pair.B[6] = -3;
    for (int j = 7; j < s; ++j) pair.B[j] = -1;
    return pair;
}

namespace {

bool jacobian_full_rank(const FormPair& pair, const std::vector<i64>& point, i64 p, int precision) {
    const i64 M = power_checked(p, precision);
    const int s = pair.size();
    std::vector<i64> row1(s), row2(s);
    for (int j = 0; j < s; ++j) {
        i64 cube = powmod(point[j], 3, M);
        row1[j] = mulmod(reduce(4 * pair.A[j], M), cube, M);
        row2[j] = mulmod(reduce(4 * pair.B[j], M), cube, M);
    }
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            i64 minor = reduce(mulmod(row1[i], row2[j], M) - mulmod(row1[j], row2[i], M), M);
            if (minor != 0) return true;
        }
    return false;
}

LocalVerdict local_witness_for_counterexample(i64 p, int precision, const Budget& budget) {
    LocalVerdict verdict;
    verdict.p = p;
    verdict.precision = precision;
    const i64 M = power_checked(p, precision);

    DiagonalSolubility quartic_part = qp_soluble_diagonal({1, 1, -6, -12}, p, precision, budget);
    if (!quartic_part.soluble) {
        verdict.detail = "four-variable subform has no p-adic zero";
        return verdict;
    }
    const auto& x = quartic_part.witness->coords;
    // Second equation: x4^4 = 7x5^4 + 5x6^4 + 3x7^4 + x8^4 + x9^4.
    i64 target = powmod(x[3], 4, M);
    PadicVector quintic_part = padic_point(p, target, precision);
    const auto& z = quintic_part.coords;

    verdict.point = {x[0], x[1], x[2], x[3], z[4], z[3], z[2], z[0], z[1]};
    FormPair system9 = counterexample_system(9);
    // Re-substitute both equations before reporting success.
    i64 f1 = 0, f2 = 0;
    for (int j = 0; j < 9; ++j) {
        i64 pow4 = powmod(verdict.point[j], 4, M);
        f1 = reduce(f1 + mulmod(reduce(system9.A[j], M), pow4, M), M);
        f2 = reduce(f2 + mulmod(reduce(system9.B[j], M), pow4, M), M);
    }
    if (f1 != 0 || f2 != 0) {
        verdict.detail = "composed point fails re-substitution";
        return verdict;
    }
    verdict.soluble = true;
    verdict.jacobian_full_rank = jacobian_full_rank(system9, verdict.point, p, precision);
    return verdict;
}

std::string describe_counterexample(int s) {
    return "x1^4 + x2^4 - 6 x3^4 - 12 x4^4 = 0, "
           "x4^4 - 7 x5^4 - 5 x6^4 - 3 x7^4 - x8^4 - ... - x" +
           std::to_string(s) + "^4 = 0";
}

}  // namespace

SolubilityReport verify_counterexample(int s, i64 search_bound, i64 prime_bound,
                                       int precision_odd, int precision_two,
                                       const Budget& budget) {
    if (s < 9) throw PreconditionError("the failing system needs s >= 9");

    SolubilityReport report;
    report.system = describe_counterexample(s);
    report.prime_bound = prime_bound;
    report.search_bound = search_bound;

    // Real point: x1 = 12^(1/4), x4 = x9 = 1, rest zero. The Jacobian rows
    // are supported on disjoint columns {1, 4} and {4, 9}, hence rank 2.
    FormPair pair = counterexample_system(s);
    std::vector<double> real_point(s, 0.0);
    real_point[0] = std::pow(12.0, 0.25);
    real_point[3] = 1.0;
    real_point[8] = 1.0;
    double f1 = 0.0, f2 = 0.0;
    for (int j = 0; j < s; ++j) {
        double pow4 = std::pow(real_point[j], 4);
        f1 += static_cast<double>(pair.A[j]) * pow4;
        f2 += static_cast<double>(pair.B[j]) * pow4;
    }
    report.real_verdict = {true, real_point, f1, f2};

    std::vector<i64> primes = primes_up_to(prime_bound);
    report.local_verdicts.resize(primes.size());
    std::mutex failure_lock;
    std::exception_ptr failure;
    parallel_chunks(primes.size(), [&](int, u64 begin, u64 end) {
        try {
            for (u64 i = begin; i < end; ++i) {
                i64 p = primes[i];
                report.local_verdicts[i] = local_witness_for_counterexample(
                    p, p == 2 ? precision_two : precision_odd, budget);
            }
        } catch (...) {
            std::scoped_lock lock(failure_lock);
            failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    bool all_local = true;
    for (const auto& verdict : report.local_verdicts)
        all_local = all_local && verdict.soluble && verdict.jacobian_full_rank;

    bool only_zero = false;
    if (search_bound >= 1) {
        report.integer_solutions = integer_search(pair, search_bound, budget).solutions;
        only_zero = report.integer_solutions.size() == 1;
        for (const auto& solution : report.integer_solutions)
            for (i64 v : solution) only_zero = only_zero && v == 0;
    } else {
        report.note = "no integer search performed (bound < 1); ";
    }

    if (all_local && search_bound >= 1 && only_zero) {
        report.conclusion = HasseConclusion::CounterexampleConfirmedAtScale;
    } else {
        report.conclusion = HasseConclusion::Inconclusive;
        if (!all_local) report.note += "some finite place lacks a verified witness; ";
        if (search_bound >= 1 && !only_zero) report.note += "nonzero integer point found; ";
    }
    report.note += "primes checked up to " + std::to_string(prime_bound) +
                   "; larger primes are outside this run";
    return report;
}

SolubilityReport analyze_diagonal_form(const std::vector<i64>& coeffs, i64 prime_bound,
                                       i64 search_bound, int precision_odd, int precision_two,
                                       const Budget& budget) {
    if (coeffs.empty()) throw PreconditionError("empty coefficient vector");
    for (i64 c : coeffs)
        if (c == 0) throw PreconditionError("diagonal coefficients must be nonzero");

    SolubilityReport report;
    {
        std::string description;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) description += " + ";
            description += std::to_string(coeffs[i]) + " x" + std::to_string(i + 1) + "^4";
        }
        report.system = description + " = 0";
    }
    report.prime_bound = prime_bound;
    report.search_bound = search_bound;

    // Real place: a nontrivial zero exists exactly when signs are mixed.
    int positive = -1, negative = -1;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 0 && positive < 0) positive = static_cast<int>(i);
        if (coeffs[i] < 0 && negative < 0) negative = static_cast<int>(i);
    }
    if (positive >= 0 && negative >= 0) {
        std::vector<double> witness(coeffs.size(), 0.0);
        witness[positive] = std::pow(static_cast<double>(-coeffs[negative]), 0.25);
        witness[negative] = std::pow(static_cast<double>(coeffs[positive]), 0.25);
        double residual = 0.0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            residual += static_cast<double>(coeffs[i]) * std::pow(witness[i], 4);
        report.real_verdict = {true, witness, residual, 0.0};
    } else {
        report.real_verdict = {false, {}, 0.0, 0.0};
    }

    bool all_local = report.real_verdict.soluble;
    for (i64 p : primes_up_to(prime_bound)) {
        LocalVerdict verdict;
        verdict.p = p;
        verdict.precision = p == 2 ? precision_two : precision_odd;
        DiagonalSolubility solubility = qp_soluble_diagonal(coeffs, p, verdict.precision, budget);
        verdict.soluble = solubility.soluble;
        if (solubility.soluble) {
            verdict.point = solubility.witness->coords;
            verdict.jacobian_full_rank = false;
            const i64 M = power_checked(p, verdict.precision);
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                i64 gradient = mulmod(reduce(4 * coeffs[j], M), powmod(verdict.point[j], 3, M), M);
                if (gradient != 0) verdict.jacobian_full_rank = true;
            }
        } else {
            verdict.detail = "no primitive solution modulo " +
                             std::to_string(solubility.concluded_modulus);
        }
        all_local = all_local && verdict.soluble;
        report.local_verdicts.push_back(std::move(verdict));
    }

    bool nonzero_found = false;
    if (search_bound >= 1) {
        report.integer_solutions = integer_search(coeffs, search_bound, budget).solutions;
        for (const auto& solution : report.integer_solutions)
            for (i64 v : solution) nonzero_found = nonzero_found || v != 0;
    }

    if (search_bound < 1) {
        report.conclusion = HasseConclusion::Inconclusive;
        report.note = "no integer search performed (bound < 1)";
    } else if (nonzero_found && !all_local) {
        throw TheoremViolation("integer point exists yet some completion reported insoluble");
    } else if (nonzero_found) {
        report.conclusion = HasseConclusion::HassePrincipleEvidence;
        report.note = "locally soluble everywhere checked and globally soluble";
    } else if (all_local) {
        report.conclusion = HasseConclusion::CounterexampleConfirmedAtScale;
        report.note = "locally soluble at every place checked, yet only the zero point in the box";
    } else {
        report.conclusion = HasseConclusion::HassePrincipleEvidence;
        report.note = "insoluble at some finite place, consistent with finding only the zero point";
    }
    return report;
}

}  // namespace quartic
