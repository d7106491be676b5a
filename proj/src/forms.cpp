#include "quartic/forms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace quartic {

namespace {

bool proportional(i64 a1, i64 b1, i64 a2, i64 b2) {
    return static_cast<i128>(a1) * b2 == static_cast<i128>(a2) * b1;
}

}  // namespace

void validate(const FormPair& pair) {
    if (pair.A.empty() || pair.A.size() != pair.B.size())
        throw PreconditionError("form pair needs two coefficient rows of equal positive length");
    for (std::size_t j = 0; j < pair.A.size(); ++j)
        if (pair.A[j] == 0 && pair.B[j] == 0)
            throw PreconditionError("column " + std::to_string(j + 1) + " is (0, 0)");
}

std::vector<LinearForm> linear_forms(const FormPair& pair) {
    validate(pair);
    std::vector<LinearForm> forms;
    forms.reserve(pair.A.size());
    for (std::size_t j = 0; j < pair.A.size(); ++j)
        forms.push_back({pair.A[j], pair.B[j]});
    return forms;
}

IndexClassification classify(const FormPair& pair) {
    validate(pair);
    const int s = pair.size();

    IndexClassification cls;
    for (int j = 0; j < s; ++j) {
        bool placed = false;
        for (auto& members : cls.classes) {
            int rep = members.front();
            if (proportional(pair.A[rep], pair.B[rep], pair.A[j], pair.B[j])) {
                members.push_back(j);
                placed = true;
                break;
            }
        }
        if (!placed) cls.classes.push_back({j});
    }

    std::stable_sort(cls.classes.begin(), cls.classes.end(),
                     [](const std::vector<int>& x, const std::vector<int>& y) {
                         if (x.size() != y.size()) return x.size() > y.size();
                         return x.front() < y.front();
                     });

    for (const auto& members : cls.classes)
        cls.profile.push_back(static_cast<int>(members.size()));
    cls.t = static_cast<int>(cls.classes.size());
    cls.n = cls.profile[0];
    cls.m = cls.t >= 2 ? cls.profile[1] : 0;
    cls.l = s - cls.n - cls.m;
    cls.q0 = s - cls.n;
    return cls;
}

int q0_by_minimization(const FormPair& pair) {
    validate(pair);
    const int s = pair.size();

    // Canonical reduced directions orthogonal to some column.
    std::set<std::pair<i64, i64>> directions;
    for (int j = 0; j < s; ++j) {
        i64 c = pair.B[j], d = -pair.A[j];
        i64 g = std::gcd(c < 0 ? -c : c, d < 0 ? -d : d);
        c /= g;
        d /= g;
        if (c < 0 || (c == 0 && d < 0)) {
            c = -c;
            d = -d;
        }
        directions.insert({c, d});
    }
    // One generic direction that annihilates no column.
    for (i64 d = 0; d <= s; ++d) {
        bool kills = false;
        for (int j = 0; j < s && !kills; ++j)
            kills = pair.A[j] + d * pair.B[j] == 0;
        if (!kills) {
            directions.insert({1, d});
            break;
        }
    }

    int best = s;
    for (const auto& [c, d] : directions) {
        int surviving = 0;
        for (int j = 0; j < s; ++j)
            if (static_cast<i128>(c) * pair.A[j] + static_cast<i128>(d) * pair.B[j] != 0)
                ++surviving;
        best = std::min(best, surviving);
    }
    return best;
}

FormPair apply_normalization(const FormPair& pair, const NormalizedSystem& sys) {
    validate(pair);
    const int s = pair.size();
    FormPair out;
    out.A.resize(s);
    out.B.resize(s);
    for (int pos = 0; pos < s; ++pos) {
        int j = sys.permutation[pos];
        out.A[pos] = sys.transform[0][0] * pair.A[j] + sys.transform[0][1] * pair.B[j];
        out.B[pos] = sys.transform[1][0] * pair.A[j] + sys.transform[1][1] * pair.B[j];
    }
    return out;
}

NormalizedSystem normalize(const FormPair& pair) {
    IndexClassification cls = classify(pair);
    if (cls.t < 2)
        throw SingleClassError("all columns are proportional; no two-block normal form exists");

    const auto& ablock = cls.classes[0];
    const auto& bblock = cls.classes[1];
    const i64 Ar = pair.A[ablock.front()], Br = pair.B[ablock.front()];
    const i64 Ab = pair.A[bblock.front()], Bb = pair.B[bblock.front()];

    NormalizedSystem sys;
    // Row 1 must vanish on the b-block, row 2 on the a-block. Determinant
    // Bb*Ar - Ab*Br is nonzero because the class representatives are
    // independent. Each transform row is reduced by its own content; the
    // resulting coefficient rows are exactly transform * (row1, row2), which
    // keeps the stored matrix integral and the reproduction exact.
    sys.transform = {{{Bb, -Ab}, {-Br, Ar}}};
    for (auto& row : sys.transform) {
        i64 g = std::gcd(row[0] < 0 ? -row[0] : row[0], row[1] < 0 ? -row[1] : row[1]);
        row[0] /= g;
        row[1] /= g;
    }

    sys.permutation = ablock;
    sys.permutation.insert(sys.permutation.end(), bblock.begin(), bblock.end());
    for (std::size_t ci = 2; ci < cls.classes.size(); ++ci)
        sys.permutation.insert(sys.permutation.end(), cls.classes[ci].begin(),
                               cls.classes[ci].end());

    FormPair rows = apply_normalization(pair, sys);

    const int n = cls.n, m = cls.m, s = pair.size();
    for (int i = 0; i < n; ++i) {
        if (rows.A[i] == 0 || rows.B[i] != 0)
            throw TheoremViolation("a-block did not normalize to (a | 0)");
        sys.a.push_back(rows.A[i]);
    }
    for (int j = n; j < n + m; ++j) {
        if (rows.A[j] != 0 || rows.B[j] == 0)
            throw TheoremViolation("b-block did not normalize to (0 | b)");
        sys.b.push_back(rows.B[j]);
    }
    for (int k = n + m; k < s; ++k) {
        if (rows.A[k] == 0 && rows.B[k] == 0)
            throw TheoremViolation("z-block column collapsed to (0, 0)");
        sys.c.push_back(rows.A[k]);
        sys.d.push_back(rows.B[k]);
    }
    if (sys.transform_det() == 0) throw TheoremViolation("normalization transform is singular");
    return sys;
}

IndexSetPartition partition_index_sets(const IndexClassification& cls, int pivot_choice, int k) {
    const int s = cls.n + cls.q0;
    if (cls.n > 7) throw HypothesisViolated("largest class exceeds 7");
    if (cls.m > 5) throw HypothesisViolated("second class exceeds 5");
    if (s < 22) throw HypothesisViolated("fewer than 22 columns");
    if (cls.t < 4) throw HypothesisViolated("fewer than four classes");
    if (pivot_choice < 1 || pivot_choice > 4) throw HypothesisViolated("pivot choice must be 1..4");

    std::vector<int> class_of(s, -1);
    for (std::size_t ci = 0; ci < cls.classes.size(); ++ci)
        for (int j : cls.classes[ci]) class_of[j] = static_cast<int>(ci);

    std::array<int, 4> representatives{};
    for (int i = 0; i < 4; ++i) representatives[i] = cls.classes[i].front();

    if (k < 0 || k >= s) throw HypothesisViolated("index out of range");
    for (int rep : representatives)
        if (k == rep) throw HypothesisViolated("index coincides with a class representative");
    const int pivot_class = pivot_choice - 1;
    if (class_of[k] == pivot_class)
        throw HypothesisViolated("index column is proportional to the pivot column");

    auto is_representative = [&](int j) {
        return std::find(representatives.begin(), representatives.end(), j) !=
               representatives.end();
    };
    // In-play members of a class, representatives excluded, ascending.
    auto in_play = [&](int ci) {
        std::vector<int> out;
        for (int j : cls.classes[ci])
            if (!is_representative(j)) out.push_back(j);
        return out;
    };

    std::vector<int> set0, set1;
    std::vector<char> allocated(s, 0), discarded(s, 0);
    auto put = [&](std::vector<int>& dst, int j) {
        dst.push_back(j);
        allocated[j] = 1;
    };

    if (pivot_class == 0) {
        // Cap the pivot class at four members inside set1 and drop the rest.
        std::vector<int> own = in_play(0);
        int keep = std::min<std::size_t>(4, own.size());
        for (int i = 0; i < keep; ++i) put(set1, own[i]);
        for (std::size_t i = keep; i < own.size(); ++i) discarded[own[i]] = 1;

        if (cls.m == 5) {
            std::vector<int> second = in_play(1);
            if (std::find(second.begin(), second.end(), k) != second.end()) {
                put(set0, k);
                for (int j : second)
                    if (j != k) put(set1, j);
            } else {
                for (int j : second) put(set1, j);
                put(set0, k);
            }
        } else {
            put(set0, k);
        }
    } else {
        for (int j : in_play(pivot_class)) put(set1, j);
        for (int j : in_play(0)) put(set0, j);
        if (!allocated[k]) put(set0, k);

        // A class of five untouched members could otherwise flood set1.
        for (int ci = 4; ci < cls.t; ++ci) {
            if (cls.profile[ci] != 5) continue;
            if (class_of[k] == ci) continue;
            if (set1.size() + 4 > 8 || set0.size() + 1 > 8) continue;
            const auto& members = cls.classes[ci];
            put(set0, members[0]);
            for (int i = 1; i < 5; ++i) put(set1, members[i]);
        }
    }

    for (int j = 0; j < s; ++j) {
        if (allocated[j] || discarded[j] || is_representative(j)) continue;
        if (set0.size() < 8 && class_of[j] != pivot_class)
            put(set0, j);
        else if (set1.size() < 8)
            put(set1, j);
    }

    std::sort(set0.begin(), set0.end());
    std::sort(set1.begin(), set1.end());

    // The construction above is guaranteed to satisfy both properties; check
    // them anyway so a bug surfaces loudly.
    if (set0.size() != 8 || set1.size() != 8)
        throw TheoremViolation("index partition did not fill both sets");
    if (std::find(set0.begin(), set0.end(), k) == set0.end())
        throw TheoremViolation("index partition lost the distinguished index");
    for (int j : set0)
        if (class_of[j] == pivot_class)
            throw TheoremViolation("pivot-proportional column leaked into set0");
    std::vector<int> per_class(cls.t, 0);
    for (int j : set1)
        if (++per_class[class_of[j]] > 4)
            throw TheoremViolation("five mutually proportional columns in set1");

    return {std::move(set0), std::move(set1)};
}

}  // namespace quartic
