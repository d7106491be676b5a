#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "quartic/common.hpp"
#include "quartic/forms.hpp"

namespace quartic {

/// Complete exponential sum S(q, a) = sum_{r=1..q} e(a r^4 / q).
struct GaussSumValue {
    i64 q = 1;
    i64 a = 0;
    std::complex<double> value;
    /// Exact form: multiplicity of each fourth-power residue class, as
    /// (count, numerator) pairs meaning count * e(numerator / q).
    std::vector<std::pair<i64, i64>> exact_form;
};

/// Buckets the fourth-power residues mod q, then sums one root of unity per
/// residue class with its multiplicity.
GaussSumValue gauss_sum(i64 q, i64 a);

/// Coefficients of the quintic diagonal form y1^4 + y2^4 + 3y3^4 + 5y4^4 + 7y5^4
/// that represents every residue to every prime-power modulus.
inline constexpr std::array<i64, 5> kQuinticCoefficients = {1, 1, 3, 5, 7};

/// Solution of the quintic congruence = a (mod p) for odd prime p with not
/// all variables divisible by p; for p in {3, 5, 7} the variable whose
/// coefficient equals p is zero. Exhaustion would contradict the covering
/// theorem and throws TheoremViolation.
std::array<i64, 5> solve_congruence_quintic(i64 p, i64 a);

/// Solution of the quintic congruence = a (mod 16) with some variable equal
/// to 1. Uses y^4 mod 16 in {0, 1}: odd variables contribute their
/// coefficient, even ones nothing.
std::array<i64, 5> solve_mod16(i64 a);

/// A p-adic solution vector known to the stated precision.
struct PadicVector {
    i64 p = 0;
    int precision = 0;          // residues are known mod p^precision
    std::vector<i64> coords;    // in [0, p^precision)
    int witness_index = -1;     // coordinate that carried the Newton lift
};

/// p-adic point on the quintic form = a, found by seeding with the mod-p
/// (or mod-16) solver and Newton lifting at a nondegenerate coordinate.
PadicVector padic_point(i64 p, i64 a, int precision);

struct DiagonalSolubility {
    bool soluble = false;
    std::optional<PadicVector> witness;  // lifted to the requested precision
    i64 concluded_modulus = 0;           // modulus at which the search settled
};

/// Decides whether sum_i coeffs[i] * x_i^4 = 0 has a nontrivial p-adic zero.
/// Searches primitive solutions (some coordinate a unit) modulo an escalating
/// power of p until one admits a Newton-liftable coordinate or the congruence
/// itself is exhausted. Exhaustion of primitive congruence solutions modulo
/// p^j is a proof of insolubility; running out of liftable candidates without
/// exhausting the congruence raises BudgetExceeded.
DiagonalSolubility qp_soluble_diagonal(const std::vector<i64>& coeffs, i64 p, int precision,
                                       const Budget& budget = {});

struct IntegerSearchResult {
    i64 bound = 0;
    std::vector<std::vector<i64>> solutions;  // lexicographic order, includes 0
};

/// All integer solutions with |x_j| <= bound, by meet-in-the-middle join of
/// half-space fourth-power sums. Single diagonal form.
IntegerSearchResult integer_search(const std::vector<i64>& coeffs, i64 bound,
                                   const Budget& budget = {});
/// Same for a pair of forms; the join key is the value pair.
IntegerSearchResult integer_search(const FormPair& pair, i64 bound, const Budget& budget = {});

enum class HasseConclusion {
    HassePrincipleEvidence,
    CounterexampleConfirmedAtScale,
    Inconclusive,
};

struct RealVerdict {
    bool soluble = false;
    std::vector<double> witness;
    double residual1 = 0.0;
    double residual2 = 0.0;
};

struct LocalVerdict {
    i64 p = 0;
    bool soluble = false;
    std::vector<i64> point;  // residues mod p^precision, empty on failure
    int precision = 0;
    bool jacobian_full_rank = false;
    std::string detail;
};

struct SolubilityReport {
    std::string system;
    RealVerdict real_verdict;
    std::vector<LocalVerdict> local_verdicts;
    i64 prime_bound = 0;
    i64 search_bound = 0;
    std::vector<std::vector<i64>> integer_solutions;
    HasseConclusion conclusion = HasseConclusion::Inconclusive;
    std::string note;
};

/// The s-variable pair x1^4 + x2^4 - 6x3^4 - 12x4^4 = 0,
/// x4^4 - 7x5^4 - 5x6^4 - 3x7^4 - x8^4 - ... - xs^4 = 0. Requires s >= 9.
FormPair counterexample_system(int s);

/// End-to-end check that the system above is everywhere locally soluble yet
/// has no nonzero integer point in the searched box: a p-adic witness with a
/// full-rank Jacobian for every prime p <= prime_bound, a nonsingular real
/// witness, and an exhaustive integer search up to search_bound.
SolubilityReport verify_counterexample(int s, i64 search_bound, i64 prime_bound,
                                       int precision_odd = 6, int precision_two = 10,
                                       const Budget& budget = {});

/// Per-place report for a single diagonal form (real place, primes up to
/// prime_bound, box search up to search_bound).
SolubilityReport analyze_diagonal_form(const std::vector<i64>& coeffs, i64 prime_bound,
                                       i64 search_bound, int precision_odd = 6,
                                       int precision_two = 10, const Budget& budget = {});

/// Primes in [2, bound], ascending.
std::vector<i64> primes_up_to(i64 bound);

}  // namespace quartic
