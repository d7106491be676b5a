#include "quartic/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>

#include "quartic/parallel.hpp"

namespace quartic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Gamma(5/4), the constant in the complete quartic oscillator integral.
constexpr double kGammaFiveQuarters = 0.9064024770554770780;
// Quadrature below this |kappa|, endpoint expansion above it. The four-term
// expansion is accurate to 0.9 / (2 pi kappa)^4 ~ 4.5e-11 at the cut.
constexpr double kAsymptoticCut = 60.0;

// Gauss-Legendre 10 on [-1, 1].
constexpr double kGlNode[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                               0.8650633666889845, 0.9739065285171717};
constexpr double kGlWeight[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                 0.1494513491505806, 0.0666713443086881};

std::complex<double> unit_phase(double theta) { return {std::cos(theta), std::sin(theta)}; }

struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

std::complex<double> oscillator_by_quadrature(double kappa) {
    // Panels end at quarter-period phase marks, so each panel sees at most
    // pi/2 of phase and ten Gauss points resolve it to machine precision.
    std::vector<double> cuts{0.0};
    for (i64 m = 1; m < static_cast<i64>(4.0 * std::abs(kappa)) + 1; ++m) {
        double t = std::pow(static_cast<double>(m) / (4.0 * std::abs(kappa)), 0.25);
        if (t >= 1.0) break;
        cuts.push_back(t);
    }
    cuts.push_back(1.0);

    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double center = 0.5 * (cuts[i] + cuts[i + 1]);
        double halfwidth = 0.5 * (cuts[i + 1] - cuts[i]);
        std::complex<double> panel = 0.0;
        for (int g = 0; g < 5; ++g) {
            for (double t : {center - halfwidth * kGlNode[g], center + halfwidth * kGlNode[g]}) {
                double t2 = t * t;
                panel += kGlWeight[g] * unit_phase(kTwoPi * kappa * t2 * t2);
            }
        }
        total += panel * halfwidth;
    }
    return total;
}

std::complex<double> oscillator_by_expansion(double kappa) {
    // w = Gamma(5/4) (2 pi kappa)^(-1/4) e(1/16)
    //     + e(kappa) [ 1/q + 3/q^2 + 21/q^3 + 231/q^4 ],   q = 4 i phi,
    // phi = 2 pi kappa; boundary terms from repeated integration by parts.
    double phi = kTwoPi * kappa;
    std::complex<double> complete =
        kGammaFiveQuarters * std::pow(phi, -0.25) * unit_phase(std::numbers::pi / 8.0);
    std::complex<double> q(0.0, 4.0 * phi);
    std::complex<double> q2 = q * q;
    std::complex<double> boundary =
        unit_phase(kTwoPi * kappa) * (1.0 / q + 3.0 / q2 + 21.0 / (q2 * q) + 231.0 / (q2 * q2));
    return complete + boundary;
}

}  // namespace

std::complex<double> unit_quartic_oscillator(double kappa) {
    if (kappa == 0.0) return 1.0;
    if (kappa < 0.0) return std::conj(unit_quartic_oscillator(-kappa));
    if (kappa <= kAsymptoticCut) return oscillator_by_quadrature(kappa);
    return oscillator_by_expansion(kappa);
}

std::complex<double> v_integral(double gamma, i64 P) {
    if (P < 1) throw PreconditionError("v_integral needs P >= 1");
    double scale = static_cast<double>(P);
    double p4 = scale * scale * scale * scale;
    return scale * unit_quartic_oscillator(gamma * p4);
}

namespace {

// Samples of the unit oscillator on [0, kmax] with cubic interpolation;
// negative arguments resolve by conjugate symmetry.
class OscillatorTable {
  public:
    OscillatorTable(double kmax, double step) : step_(step) {
        std::size_t count = static_cast<std::size_t>(kmax / step) + 4;
        samples_.resize(count);
        parallel_chunks(count, [&](int, u64 begin, u64 end) {
            for (u64 i = begin; i < end; ++i)
                samples_[i] = unit_quartic_oscillator(static_cast<double>(i) * step_);
        });
    }

    std::complex<double> operator()(double kappa) const {
        if (kappa < 0.0) return std::conj((*this)(-kappa));
        double x = kappa / step_;
        std::size_t base = static_cast<std::size_t>(x);
        if (base + 3 >= samples_.size()) base = samples_.size() - 4;
        if (base > 0) --base;  // center the 4-point stencil
        double u = x - static_cast<double>(base);
        // Lagrange cubic through nodes base .. base+3.
        double w0 = -(u - 1.0) * (u - 2.0) * (u - 3.0) / 6.0;
        double w1 = u * (u - 2.0) * (u - 3.0) / 2.0;
        double w2 = -u * (u - 1.0) * (u - 3.0) / 2.0;
        double w3 = u * (u - 1.0) * (u - 2.0) / 6.0;
        return w0 * samples_[base] + w1 * samples_[base + 1] + w2 * samples_[base + 2] +
               w3 * samples_[base + 3];
    }

  private:
    double step_;
    std::vector<std::complex<double>> samples_;
};

}  // namespace

SingularIntegralPartial singular_integral(const FormPair& pair, i64 P, double X, double rel_tol) {
    validate(pair);
    if (P < 1) throw PreconditionError("singular_integral needs P >= 1");
    if (X < 0.0) throw PreconditionError("singular_integral needs X >= 0");
    const int s = pair.size();
    if (s > 64) throw PreconditionError("more factors than the quadrature cap supports");
    if (X == 0.0) return {0.0, P, 0.0, 0.0};

    double reach = 0.0;
    for (int j = 0; j < s; ++j)
        reach = std::max(reach, static_cast<double>(std::abs(pair.A[j]) + std::abs(pair.B[j])));
    const double step = 0.004;
    OscillatorTable table(reach * X + 4.0 * step, step);

    // Columns touching only one variable factor out of the inner loop.
    std::vector<int> alpha_only, beta_only, coupled;
    for (int j = 0; j < s; ++j) {
        if (pair.B[j] == 0)
            alpha_only.push_back(j);
        else if (pair.A[j] == 0)
            beta_only.push_back(j);
        else
            coupled.push_back(j);
    }

    auto composite = [&](int nodes) {
        double h = 2.0 * X / (nodes - 1);
        std::vector<double> weight(nodes, 1.0);
        for (int i = 1; i + 1 < nodes; ++i) weight[i] = i % 2 == 1 ? 4.0 : 2.0;
        std::vector<double> grid(nodes);
        for (int i = 0; i < nodes; ++i) grid[i] = -X + h * i;

        std::vector<std::complex<double>> row_factor(nodes, 1.0), col_factor(nodes, 1.0);
        for (int i = 0; i < nodes; ++i) {
            for (int j : alpha_only) row_factor[i] *= table(pair.A[j] * grid[i]);
            for (int j : beta_only) col_factor[i] *= table(pair.B[j] * grid[i]);
        }

        std::vector<std::complex<double>> partial(chunk_count(nodes), 0.0);
        parallel_chunks(nodes, [&](int chunk, u64 begin, u64 end) {
            std::complex<double> local = 0.0;
            for (u64 i = begin; i < end; ++i) {
                std::complex<double> row_sum = 0.0;
                for (int k = 0; k < nodes; ++k) {
                    std::complex<double> cell = col_factor[k];
                    for (int j : coupled)
                        cell *= table(pair.A[j] * grid[i] + pair.B[j] * grid[k]);
                    row_sum += weight[k] * cell;
                }
                local += weight[i] * row_factor[i] * row_sum;
            }
            partial[chunk] = local;
        });
        std::complex<double> total = 0.0;
        for (const auto& value : partial) total += value;
        return total * (h / 3.0) * (h / 3.0);
    };

    double p_power = std::pow(static_cast<double>(P), s - 8);
    std::complex<double> previous = composite(17);
    for (int nodes = 33; nodes <= 2049; nodes = 2 * nodes - 1) {
        std::complex<double> current = composite(nodes);
        double diff = std::abs(current - previous);
        if (diff <= rel_tol * std::max(std::abs(current), 1e-12)) {
            double estimate = (diff / 15.0 + std::abs(current.imag())) * p_power;
            return {X, P, current.real() * p_power, estimate};
        }
        previous = current;
    }
    throw BudgetExceeded("two-dimensional quadrature did not converge at the panel cap");
}

UValue U_of_q(const FormPair& pair, i64 q, const Budget& budget) {
    validate(pair);
    if (q < 1) throw PreconditionError("U_of_q needs q >= 1");
    const int s = pair.size();
    if (static_cast<u64>(s) * static_cast<u64>(q) * static_cast<u64>(q) > budget.max_phase_ops)
        throw BudgetExceeded("U(q) phase accumulation exceeds the budget");

    // counts[m] = #{1 <= r <= q : r^4 = m (mod q)}.
    std::vector<double> counts(q, 0.0);
    for (i64 r = 1; r <= q; ++r) {
        i64 r2 = r * r % q;
        counts[r2 * r2 % q] += 1.0;
    }
    // Normalized complete sums S(q, u) / q for every residue u.
    std::vector<std::complex<double>> normalized(q);
    for (i64 u = 0; u < q; ++u) {
        std::complex<double> sum = 0.0;
        for (i64 m = 0; m < q; ++m) {
            if (counts[m] == 0.0) continue;
            sum += counts[m] * unit_phase(kTwoPi * static_cast<double>(u * m % q) /
                                          static_cast<double>(q));
        }
        normalized[u] = sum / static_cast<double>(q);
    }

    std::vector<i64> a_residue(s), b_residue(s);
    for (int j = 0; j < s; ++j) {
        a_residue[j] = ((pair.A[j] % q) + q) % q;
        b_residue[j] = ((pair.B[j] % q) + q) % q;
    }

    Kahan real_sum, dagger_sum;
    for (i64 a = 1; a <= q; ++a)
        for (i64 b = 1; b <= q; ++b) {
            if (std::gcd(std::gcd(a, b), q) != 1) continue;
            std::complex<double> product = 1.0;
            for (int j = 0; j < s; ++j)
                product *= normalized[(a_residue[j] * a + b_residue[j] * b) % q];
            real_sum.add(product.real());
            dagger_sum.add(std::abs(product));
        }
    return {real_sum.sum, dagger_sum.sum};
}

SingularSeriesPartial singular_series(const FormPair& pair, i64 X, const Budget& budget) {
    validate(pair);
    IndexClassification cls = classify(pair);

    SingularSeriesPartial result;
    result.X = X;
    result.convergence_regime = pair.size() >= 16 && cls.q0 >= 12;
    if (X < 1) return result;

    result.terms.resize(X);
    result.dagger_terms.resize(X);
    std::mutex failure_lock;
    std::exception_ptr failure;
    parallel_chunks(static_cast<u64>(X), [&](int, u64 begin, u64 end) {
        try {
            for (u64 i = begin; i < end; ++i) {
                UValue value = U_of_q(pair, static_cast<i64>(i) + 1, budget);
                result.terms[i] = {static_cast<i64>(i) + 1, value.U};
                result.dagger_terms[i] = {static_cast<i64>(i) + 1, value.U_dagger};
            }
        } catch (...) {
            std::scoped_lock lock(failure_lock);
            failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    Kahan sum;
    for (const auto& [q, U] : result.terms) sum.add(U);
    result.partial_sum = sum.sum;
    Kahan tail;
    for (const auto& [q, Ud] : result.dagger_terms)
        if (2 * q > X) tail.add(Ud);
    result.dagger_tail = tail.sum;
    return result;
}

double predict_main_term(const FormPair& pair, i64 P, double X, const Budget& budget) {
    if (X < 0.0) throw PreconditionError("predict_main_term needs X >= 0");
    SingularSeriesPartial series = singular_series(pair, static_cast<i64>(X), budget);
    SingularIntegralPartial integral = singular_integral(pair, P, X);
    return series.partial_sum * integral.value;
}

ArcDissection ArcDissection::from_parameters(i64 P, double tau) {
    if (P < 3) throw PreconditionError("dissection needs P >= 3 so that Q >= 1");
    if (tau <= 0.0 || tau >= 1e-4) throw PreconditionError("tau must lie in (0, 1e-4)");
    ArcDissection dissection;
    dissection.P = P;
    dissection.tau = tau;
    dissection.Q = std::pow(std::log(static_cast<double>(P)), tau);
    return dissection;
}

ArcDissection ArcDissection::with_explicit_Q(i64 P, double Q) {
    if (P < 1 || Q < 1.0) throw PreconditionError("dissection needs P >= 1 and Q >= 1");
    ArcDissection dissection;
    dissection.P = P;
    dissection.tau = 5e-5;
    dissection.Q = Q;
    return dissection;
}

double ArcDissection::arc_halfwidth() const {
    double p = static_cast<double>(P);
    return Q / (p * p * p * p);
}

namespace {

std::vector<i64> numerators_near(double x, i64 q, double halfwidth) {
    // All 0 <= a <= q with |x - a/q| <= halfwidth.
    std::vector<i64> out;
    i64 lo = static_cast<i64>(std::ceil((x - halfwidth) * static_cast<double>(q)));
    i64 hi = static_cast<i64>(std::floor((x + halfwidth) * static_cast<double>(q)));
    for (i64 a = std::max<i64>(lo, 0); a <= std::min<i64>(hi, q); ++a) out.push_back(a);
    return out;
}

}  // namespace

ArcMembership2D in_major_arc_2d(const ArcDissection& dissection, double alpha, double beta) {
    if (alpha < 0.0 || alpha >= 1.0 || beta < 0.0 || beta >= 1.0)
        throw PreconditionError("arc membership expects coordinates in [0, 1)");
    const double halfwidth = dissection.arc_halfwidth();
    for (i64 q = 1; q <= static_cast<i64>(dissection.Q); ++q)
        for (i64 a : numerators_near(alpha, q, halfwidth))
            for (i64 b : numerators_near(beta, q, halfwidth)) {
                if (std::gcd(std::gcd(a, b), q) != 1) continue;
                return {true, q, a, b};
            }
    return {false, 0, 0, 0};
}

ArcMembership1D in_major_arc_1d(const ArcDissection& dissection, double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw PreconditionError("arc membership expects a coordinate in [0, 1)");
    const double halfwidth = dissection.arc_halfwidth();
    for (i64 q = 1; q <= static_cast<i64>(dissection.Q); ++q)
        for (i64 a : numerators_near(alpha, q, halfwidth)) {
            if (std::gcd(a, q) != 1) continue;
            return {true, q, a};
        }
    return {false, 0, 0};
}

double major_arc_measure_1d(const ArcDissection& dissection) {
    const i64 Q = static_cast<i64>(dissection.Q);
    const bool integral_Q = dissection.Q == static_cast<double>(Q);

    if (integral_Q && dissection.P <= 10000 && Q <= 24) {
        // Exact sweep over fractions with common denominator lcm(1..Q) * P^4.
        i64 lcm = 1;
        for (i64 q = 1; q <= Q; ++q) lcm = std::lcm(lcm, q);
        i128 p4 = static_cast<i128>(dissection.P) * dissection.P * dissection.P * dissection.P;
        i128 denom = p4 * lcm;
        std::vector<std::pair<i128, i128>> intervals;
        for (i64 q = 1; q <= Q; ++q)
            for (i64 a = 0; a <= q; ++a) {
                if (std::gcd(a, q) != 1) continue;
                i128 center = static_cast<i128>(a) * (lcm / q) * p4;
                i128 radius = static_cast<i128>(Q) * lcm;
                intervals.push_back({std::max<i128>(center - radius, 0),
                                     std::min<i128>(center + radius, denom)});
            }
        std::sort(intervals.begin(), intervals.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        i128 covered = 0, cursor = 0;
        for (const auto& [lo, hi] : intervals) {
            if (hi <= cursor) continue;
            covered += hi - std::max(lo, cursor);
            cursor = hi;
        }
        return static_cast<double>(static_cast<long double>(covered) /
                                   static_cast<long double>(denom));
    }

    const double halfwidth = dissection.arc_halfwidth();
    std::vector<std::pair<double, double>> intervals;
    for (i64 q = 1; q <= Q; ++q)
        for (i64 a = 0; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            double center = static_cast<double>(a) / static_cast<double>(q);
            intervals.push_back({std::max(center - halfwidth, 0.0),
                                 std::min(center + halfwidth, 1.0)});
        }
    std::sort(intervals.begin(), intervals.end());
    double covered = 0.0, cursor = 0.0;
    for (const auto& [lo, hi] : intervals) {
        if (hi <= cursor) continue;
        covered += hi - std::max(lo, cursor);
        cursor = hi;
    }
    return covered;
}

}  // namespace quartic
