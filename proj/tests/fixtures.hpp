// Shared test systems.
#pragma once

#include "quartic/forms.hpp"

namespace fixtures {

using quartic::FormPair;

// s = 22, profile (10, 8, 1, 1, 1, 1), q0 = 12. Coefficients were scanned so
// the dagger tails of the singular series decay octave over octave, and the
// pair has the nonsingular integer point x1 = x2 = y1 = y2 = 1 (rest zero),
// so it is soluble in every completion.
inline FormPair series_pair() {
    FormPair pair;
    pair.A = {3, -3, 1, -1, 7, -7, 9, 11, -13, 21, 0, 0, 0, 0, 0, 0, 0, 0, 21, 21, 13, 19};
    pair.B = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, -3, 7, -7, 11, -11, 1, -1, -3, -1, 21, 9};
    return pair;
}

// Factorizable s = 10 system: five copies of alpha against five of beta.
// |V| is integrable here (decay (1+|k|)^(-5/4) per axis), so the truncated
// singular integral has shrinking dyadic increments.
inline FormPair five_five_pair() {
    FormPair pair;
    pair.A = {1, 1, 1, 1, 1, 0, 0, 0, 0, 0};
    pair.B = {0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
    return pair;
}

// Independent s = 16 system used for the prediction scaling checks.
inline FormPair eight_eight_pair() {
    FormPair pair;
    pair.A = {1, -1, 3, -3, 2, 5, -5, 7, 0, 0, 0, 0, 0, 0, 0, 0};
    pair.B = {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 3, -3, 2, 5, -5, 7};
    return pair;
}

// The 22-variable system whose second equation chains off x11: first row
// nonzero on columns 1..11, second row alternates on 11..14 and closes with
// ones. Its largest class has 11 members, so q0 = 11.
inline FormPair chained_pair_q0_11() {
    FormPair pair;
    pair.A = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    pair.B = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, -1, 1, 1, 1, 1, 1, 1, 1, 1};
    return pair;
}

// Two independent difference equations: x1^4 = x2^4 and x3^4 = x4^4.
inline FormPair independent_pair() {
    FormPair pair;
    pair.A = {1, -1, 0, 0};
    pair.B = {0, 0, 1, -1};
    return pair;
}

}  // namespace fixtures
