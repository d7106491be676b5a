#include "quartic/entangled.hpp"

#include <algorithm>
#include <vector>

namespace quartic {

namespace {

void check_spec(const EntangledSpec& spec) {
    if (spec.a == 0 || spec.b == 0 || spec.c == 0 || spec.d == 0)
        throw PreconditionError("entangled spec needs four nonzero integers");
}

u64 checked_u64(u128 v, const char* what) {
    if (v > static_cast<u128>(~static_cast<u64>(0)))
        throw BudgetExceeded(std::string(what) + " exceeds the 64-bit range");
    return static_cast<u64>(v);
}

}  // namespace

u64 entangled_moment(const EntangledSpec& spec, const RepresentationTable& table) {
    check_spec(spec);
    u128 total = 0;
    for (const auto& [n3, psi3] : table.psi) {
        i128 cn3 = static_cast<i128>(spec.c) * n3;
        i128 dn3 = static_cast<i128>(spec.d) * n3;
        if (cn3 % spec.a != 0 || dn3 % spec.b != 0) continue;
        i128 n1 = cn3 / spec.a;
        i128 n2 = dn3 / spec.b;
        if (n1 > table.support_bound || n1 < -table.support_bound) continue;
        if (n2 > table.support_bound || n2 < -table.support_bound) continue;
        u128 term = static_cast<u128>(table.at(n1)) * table.at(n2);
        total += term * psi3;
    }
    return checked_u64(total, "entangled moment");
}

u64 entangled_moment(const EntangledSpec& spec, const SmoothSet& S, const Budget& budget) {
    return entangled_moment(spec, psi_table(S, budget));
}

u64 entangled_moment_bruteforce(const EntangledSpec& spec, const SmoothSet& S, i64 card_cap) {
    check_spec(spec);
    if (S.card() > card_cap)
        throw BudgetExceeded("brute-force oracle capped at card(S) <= " +
                             std::to_string(card_cap));

    // Flat sorted list of all card^3 three-term fourth-power sums.
    std::vector<i64> sums;
    sums.reserve(static_cast<std::size_t>(S.card() * S.card() * S.card()));
    for (i64 x : S.members)
        for (i64 y : S.members)
            for (i64 z : S.members) sums.push_back(x * x * x * x + y * y * y * y + z * z * z * z);
    std::sort(sums.begin(), sums.end());

    auto difference_count = [&](i128 n) -> u64 {
        if (n > 3 * sums.back() || n < -3 * sums.back()) return 0;
        u64 count = 0;
        for (i64 w : sums) {
            i128 target = static_cast<i128>(w) - n;
            if (target < sums.front() || target > sums.back()) continue;
            auto range = std::equal_range(sums.begin(), sums.end(), static_cast<i64>(target));
            count += static_cast<u64>(range.second - range.first);
        }
        return count;
    };

    u128 total = 0;
    for (i64 u : sums)
        for (i64 v : sums) {
            i64 n3 = u - v;
            i128 cn3 = static_cast<i128>(spec.c) * n3;
            i128 dn3 = static_cast<i128>(spec.d) * n3;
            if (cn3 % spec.a != 0 || dn3 % spec.b != 0) continue;
            total += static_cast<u128>(difference_count(cn3 / spec.a)) *
                     difference_count(dn3 / spec.b);
        }
    return checked_u64(total, "entangled moment");
}

EntangledSpec eliminate_to_entangled(const TripleFormSpec& spec) {
    const auto& C = spec.C;
    const auto& D = spec.D;
    i64 m1 = C[1] * D[2] - C[2] * D[1];
    i64 m2 = C[0] * D[2] - C[2] * D[0];
    i64 m3 = C[0] * D[1] - C[1] * D[0];
    if (m1 == 0 || m2 == 0 || m3 == 0)
        throw DependentForms("two of the three linear forms are proportional");
    // C.n = D.n = 0 collapses to m3*n1 = m1*n3 and m3*n2 = -m2*n3.
    return {m3, m3, m1, -m2};
}

u64 triple_moment(const TripleFormSpec& spec, const SmoothSet& S, const Budget& budget) {
    return entangled_moment(eliminate_to_entangled(spec), S, budget);
}

u64 sum_psi_cubed(const RepresentationTable& table) {
    u128 total = 0;
    for (const auto& [_, count] : table.psi) {
        u128 c = count;
        total += c * c * c;
    }
    return checked_u64(total, "psi cube sum");
}

}  // namespace quartic
