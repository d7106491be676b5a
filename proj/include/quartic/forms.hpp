#pragma once

#include <array>
#include <vector>

#include "quartic/common.hpp"

namespace quartic {

/// A pair of diagonal quartic forms, stored as the two coefficient rows.
/// Column j carries the coefficients (A[j], B[j]) of x_j^4 in the two
/// equations A.x^4 = 0, B.x^4 = 0.
struct FormPair {
    std::vector<i64> A;
    std::vector<i64> B;

    int size() const { return static_cast<int>(A.size()); }
};

/// Throws PreconditionError unless both rows have equal positive length and
/// no column is (0, 0).
void validate(const FormPair& pair);

/// A coefficient column read as the linear form c_alpha*alpha + c_beta*beta.
struct LinearForm {
    i64 c_alpha = 0;
    i64 c_beta = 0;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::vector<LinearForm> linear_forms(const FormPair& pair);

/// Two columns are equivalent when they are proportional over the rationals,
/// tested exactly by the integer cross product. Classes are ordered by size
/// descending, ties by smallest member; members ascend. Indices are 0-based.
struct IndexClassification {
    std::vector<std::vector<int>> classes;
    std::vector<int> profile;  // class sizes, descending
    int n = 0;                 // largest class size
    int m = 0;                 // second largest class size, 0 if t = 1
    int l = 0;                 // s - n - m
    int t = 0;                 // number of classes
    int q0 = 0;                // s - n
};

IndexClassification classify(const FormPair& pair);

/// Minimum over directions (C, D) != (0, 0) of the number of columns j with
/// C*A[j] + D*B[j] != 0. Only directions orthogonal to some column can beat
/// the generic value s, so those plus one generic direction are scanned.
/// Always equals classify(pair).q0.
int q0_by_minimization(const FormPair& pair);

/// Result of integer row operations bringing a pair with at least two
/// equivalence classes to the block shape
///     a_1 x_1^4 + ... + a_n x_n^4 + c_1 z_1^4 + ... + c_l z_l^4 = 0
///     b_1 y_1^4 + ... + b_m y_m^4 + d_1 z_1^4 + ... + d_l z_l^4 = 0.
struct NormalizedSystem {
    std::vector<i64> a;  // length n, all nonzero
    std::vector<i64> b;  // length m, all nonzero
    std::vector<i64> c;  // length l
    std::vector<i64> d;  // length l, (c[k], d[k]) != (0, 0)
    std::vector<int> permutation;                 // new position -> original column
    std::array<std::array<i64, 2>, 2> transform;  // acts on (row1, row2)

    int n() const { return static_cast<int>(a.size()); }
    int m() const { return static_cast<int>(b.size()); }
    int l() const { return static_cast<int>(c.size()); }
    int size() const { return n() + m() + l(); }

    i64 transform_det() const {
        return transform[0][0] * transform[1][1] - transform[0][1] * transform[1][0];
    }
};

/// Throws SingleClassError when all columns are mutually proportional.
NormalizedSystem normalize(const FormPair& pair);

/// Applies sys.transform and sys.permutation to the original pair; the result
/// must reproduce the (a|0|c), (0|b|d) block rows exactly.
FormPair apply_normalization(const FormPair& pair, const NormalizedSystem& sys);

/// Two disjoint eight-element index sets drawn from the indices left after
/// removing one representative of each of the four largest classes.
struct IndexSetPartition {
    std::vector<int> pivot_independent;   // contains k; no member proportional to the pivot
    std::vector<int> multiplicity_capped; // at most four mutually proportional members
};

/// The representatives i_1..i_4 are the least indices of the four largest
/// classes; `pivot_choice` in 1..4 selects which of them acts as the pivot.
/// `k` is an index outside {i_1..i_4} whose column is not proportional to the
/// pivot column. Requires n <= 7, m <= 5, s >= 22 and at least four classes;
/// throws HypothesisViolated otherwise.
IndexSetPartition partition_index_sets(const IndexClassification& cls, int pivot_choice, int k);

}  // namespace quartic
