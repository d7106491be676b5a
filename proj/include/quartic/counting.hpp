#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quartic/common.hpp"
#include "quartic/forms.hpp"

namespace quartic {

/// Which variables of a normalized system feed the value pair (u, v):
/// u collects the selected a-columns plus every selected z-column's c part,
/// v the selected b-columns plus the same z-columns' d part.
struct RhoBlocks {
    std::vector<int> x_indices;  // positions into sys.a
    std::vector<int> y_indices;  // positions into sys.b
    std::vector<int> z_indices;  // positions into sys.c / sys.d
};

/// The classical choice: everything from the seventh column of each block on,
/// plus the whole coupled block.
RhoBlocks tail_blocks(const NormalizedSystem& sys);

struct RhoTable {
    std::map<std::pair<i64, i64>, u64> counts;
    u64 total = 0;  // number of assignments enumerated
    i64 P = 0;
    bool smooth = false;
};

/// Exact joint counts of the value pair over the integer box |x| <= P
/// (default) or over the positive P-smooth integers (smooth_variables).
RhoTable rho_table(const NormalizedSystem& sys, i64 P, const RhoBlocks& blocks,
                   bool smooth_variables = false, const Budget& budget = {});

std::map<i64, u64> rho_marginal_u(const RhoTable& table);
std::map<i64, u64> rho_marginal_v(const RhoTable& table);

struct CountReport {
    i64 P = 0;
    u64 N = 0;          // solutions with all |x_j| <= P, zero vector included
    double seconds = 0.0;
    std::optional<double> X;
    std::optional<double> prediction;
    std::optional<double> ratio;  // empty when the prediction vanishes
    std::optional<bool> in_theorem_regime;
};

/// Exact N(P) by meet-in-the-middle: the columns are split into two balanced
/// halves, each half's value-pair multiset is tabulated over the box, and the
/// halves are joined on opposite value pairs.
CountReport count_solutions(const FormPair& pair, i64 P, const Budget& budget = {});

/// count_solutions plus the main-term prediction at cutoff X and their ratio.
CountReport compare_prediction(const FormPair& pair, i64 P, double X, const Budget& budget = {});

}  // namespace quartic
