#pragma once

#include <array>

#include "quartic/common.hpp"
#include "quartic/smooth.hpp"

namespace quartic {

/// Frequency constraints a*n1 = c*n3, b*n2 = d*n3 coupling three copies of
/// the six-variable representation counts.
struct EntangledSpec {
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;
    i64 d = 0;
};

/// Three integer linear forms C[i]*alpha + D[i]*beta whose pairwise 2x2
/// minors must all be nonzero.
struct TripleFormSpec {
    std::array<i64, 3> C{};
    std::array<i64, 3> D{};
};

/// Exact value of the coupled sixth-power double moment: the sum of
/// psi(n1) psi(n2) psi(n3) over the rank-one lattice a*n1 = c*n3,
/// b*n2 = d*n3. The loop runs over n3 and keeps everything in integers via
/// divisibility tests (c*n3 mod a, d*n3 mod b).
u64 entangled_moment(const EntangledSpec& spec, const RepresentationTable& table);
u64 entangled_moment(const EntangledSpec& spec, const SmoothSet& S, const Budget& budget = {});

/// Independent oracle: counts the same 18-variable solutions from the raw
/// three-term sum list with binary-search pair counting, no psi join.
/// Refuses sets larger than card_cap.
u64 entangled_moment_bruteforce(const EntangledSpec& spec, const SmoothSet& S, i64 card_cap = 4);

/// Eliminates n1 and n2 from C.n = D.n = 0; throws DependentForms when a
/// minor vanishes.
EntangledSpec eliminate_to_entangled(const TripleFormSpec& spec);

/// The coupled moment of three pairwise independent forms, reduced through
/// eliminate_to_entangled.
u64 triple_moment(const TripleFormSpec& spec, const SmoothSet& S, const Budget& budget = {});

/// sum over n of psi(n)^3; three times this majorizes every entangled moment.
u64 sum_psi_cubed(const RepresentationTable& table);

}  // namespace quartic
