#include "quartic/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "quartic/arcs.hpp"
#include "quartic/parallel.hpp"
#include "quartic/smooth.hpp"

namespace quartic {

namespace {

i64 fourth_power(i64 x) {
    i64 v = x < 0 ? -x : x;
    return v * v * v * v;
}

struct PairHash {
    std::size_t operator()(const std::pair<i64, i64>& key) const {
        u64 h = static_cast<u64>(key.first) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<u64>(key.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

using PairCounts = std::unordered_map<std::pair<i64, i64>, u64, PairHash>;

// Value-pair multiset of one half of the columns over the box |x| <= P.
// Magnitudes are enumerated and sign choices enter as a power of two.
PairCounts half_counts(const std::vector<int>& columns, const FormPair& pair, i64 P) {
    PairCounts counts;
    std::function<void(std::size_t, i64, i64, u64)> recurse = [&](std::size_t depth, i64 u, i64 v,
                                                                  u64 multiplicity) {
        if (depth == columns.size()) {
            counts[{u, v}] += multiplicity;
            return;
        }
        int j = columns[depth];
        for (i64 magnitude = 0; magnitude <= P; ++magnitude) {
            i64 pow4 = fourth_power(magnitude);
            recurse(depth + 1, u + pair.A[j] * pow4, v + pair.B[j] * pow4,
                    magnitude == 0 ? multiplicity : 2 * multiplicity);
        }
    };
    recurse(0, 0, 0, 1);
    return counts;
}

}  // namespace

RhoBlocks tail_blocks(const NormalizedSystem& sys) {
    RhoBlocks blocks;
    for (int i = 6; i < sys.n(); ++i) blocks.x_indices.push_back(i);
    for (int j = 6; j < sys.m(); ++j) blocks.y_indices.push_back(j);
    for (int k = 0; k < sys.l(); ++k) blocks.z_indices.push_back(k);
    return blocks;
}

RhoTable rho_table(const NormalizedSystem& sys, i64 P, const RhoBlocks& blocks,
                   bool smooth_variables, const Budget& budget) {
    if (P < 1) throw PreconditionError("rho_table needs P >= 1");
    for (int i : blocks.x_indices)
        if (i < 0 || i >= sys.n()) throw PreconditionError("x block index out of range");
    for (int j : blocks.y_indices)
        if (j < 0 || j >= sys.m()) throw PreconditionError("y block index out of range");
    for (int k : blocks.z_indices)
        if (k < 0 || k >= sys.l()) throw PreconditionError("z block index out of range");

    std::vector<i64> range;
    if (smooth_variables) {
        range = smooth_set(P, P).members;
    } else {
        for (i64 x = -P; x <= P; ++x) range.push_back(x);
    }

    const std::size_t variables =
        blocks.x_indices.size() + blocks.y_indices.size() + blocks.z_indices.size();
    double assignments = std::pow(static_cast<double>(range.size()),
                                  static_cast<double>(variables));
    if (assignments > static_cast<double>(budget.max_multiset_entries))
        throw BudgetExceeded("value-pair enumeration exceeds the entry budget");

    // (coefficient into u, coefficient into v) per enumerated variable.
    std::vector<std::pair<i64, i64>> weights;
    for (int i : blocks.x_indices) weights.push_back({sys.a[i], 0});
    for (int j : blocks.y_indices) weights.push_back({0, sys.b[j]});
    for (int k : blocks.z_indices) weights.push_back({sys.c[k], sys.d[k]});

    RhoTable table;
    table.P = P;
    table.smooth = smooth_variables;
    table.total = 1;
    for (std::size_t i = 0; i < variables; ++i) table.total *= range.size();

    std::function<void(std::size_t, i64, i64)> recurse = [&](std::size_t depth, i64 u, i64 v) {
        if (depth == weights.size()) {
            ++table.counts[{u, v}];
            return;
        }
        for (i64 x : range) {
            i64 pow4 = fourth_power(x);
            recurse(depth + 1, u + weights[depth].first * pow4, v + weights[depth].second * pow4);
        }
    };
    recurse(0, 0, 0);
    return table;
}

std::map<i64, u64> rho_marginal_u(const RhoTable& table) {
    std::map<i64, u64> marginal;
    for (const auto& [key, count] : table.counts) marginal[key.first] += count;
    return marginal;
}

std::map<i64, u64> rho_marginal_v(const RhoTable& table) {
    std::map<i64, u64> marginal;
    for (const auto& [key, count] : table.counts) marginal[key.second] += count;
    return marginal;
}

CountReport count_solutions(const FormPair& pair, i64 P, const Budget& budget) {
    validate(pair);
    if (P < 0) throw PreconditionError("count_solutions needs P >= 0");
    auto started = std::chrono::steady_clock::now();

    const int s = pair.size();
    // Alternate the columns by coefficient size so the two half-space value
    // ranges stay comparable.
    std::vector<int> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return std::max(std::abs(pair.A[i]), std::abs(pair.B[i])) >
               std::max(std::abs(pair.A[j]), std::abs(pair.B[j]));
    });
    std::vector<int> first_half, second_half;
    for (int i = 0; i < s; ++i) (i % 2 == 0 ? first_half : second_half).push_back(order[i]);

    double half_cost = std::pow(static_cast<double>(P + 1),
                                static_cast<double>(std::max(first_half.size(), second_half.size())));
    if (half_cost > static_cast<double>(budget.max_multiset_entries))
        throw BudgetExceeded("half-space enumeration exceeds the entry budget");

    PairCounts left = half_counts(first_half, pair, P);
    PairCounts right = half_counts(second_half, pair, P);
    if (left.size() > right.size()) left.swap(right);

    u64 total = 0;
    for (const auto& [value, count] : left) {
        auto it = right.find({-value.first, -value.second});
        if (it != right.end()) total += count * it->second;
    }

    CountReport report;
    report.P = P;
    report.N = total;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

CountReport compare_prediction(const FormPair& pair, i64 P, double X, const Budget& budget) {
    CountReport report = count_solutions(pair, P, budget);
    report.X = X;
    report.prediction = predict_main_term(pair, P, X, budget);
    if (*report.prediction != 0.0)
        report.ratio = static_cast<double>(report.N) / *report.prediction;
    IndexClassification cls = classify(pair);
    report.in_theorem_regime = pair.size() >= 22 && cls.q0 >= 12;
    return report;
}

}  // namespace quartic
