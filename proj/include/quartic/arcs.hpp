#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "quartic/common.hpp"
#include "quartic/forms.hpp"

namespace quartic {

/// w(kappa) = integral over [0, 1] of e(kappa t^4) dt. Quadrature over the
/// oscillatory range, asymptotic endpoint expansion beyond it; absolute
/// error below ~1e-10 either way.
std::complex<double> unit_quartic_oscillator(double kappa);

/// v(gamma) = integral over [0, P] of e(gamma xi^4) d xi = P * w(gamma P^4).
/// Absolute error at most ~1e-9 * P.
std::complex<double> v_integral(double gamma, i64 P);

struct SingularIntegralPartial {
    double X = 0.0;
    i64 P = 0;
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Truncated archimedean density: the integral of prod_j v(A_j alpha + B_j beta)
/// over the box |alpha|, |beta| <= X * P^-4. Computed on the rescaled box
/// [-X, X]^2 where the integrand is a product of unit oscillators, so the
/// panel count does not grow with P.
SingularIntegralPartial singular_integral(const FormPair& pair, i64 P, double X,
                                          double rel_tol = 1e-8);

struct UValue {
    double U = 0.0;         // real part of the normalized complete sum
    double U_dagger = 0.0;  // absolute-value companion, >= |U|
};

/// U(q) = q^-s * sum over (a, b) with gcd(a, b, q) = 1 of
/// prod_j S(q, A_j a + B_j b), accumulated with compensated summation.
UValue U_of_q(const FormPair& pair, i64 q, const Budget& budget = {});

struct SingularSeriesPartial {
    i64 X = 0;
    std::vector<std::pair<i64, double>> terms;         // (q, U(q))
    std::vector<std::pair<i64, double>> dagger_terms;  // (q, U†(q))
    double partial_sum = 0.0;
    double dagger_tail = 0.0;       // sum of U† over (X/2, X]
    bool convergence_regime = false;  // s >= 16 and q0 >= 12
};

SingularSeriesPartial singular_series(const FormPair& pair, i64 X, const Budget& budget = {});

/// Product of the truncated arithmetic and archimedean densities; the
/// classical main-term prediction with unit smooth density.
double predict_main_term(const FormPair& pair, i64 P, double X, const Budget& budget = {});

/// Hardy-Littlewood dissection parameters. Q = (log P)^tau in the canonical
/// construction; the explicit-Q factory serves experiments at small P where
/// (log P)^tau barely exceeds 1.
struct ArcDissection {
    i64 P = 0;
    double tau = 0.0;
    double Q = 1.0;

    static ArcDissection from_parameters(i64 P, double tau);
    static ArcDissection with_explicit_Q(i64 P, double Q);

    double arc_halfwidth() const;  // Q * P^-4
};

struct ArcMembership2D {
    bool major = false;
    i64 q = 0, a = 0, b = 0;
};
/// Scans q <= Q and the admissible numerators; returns the first rectangle
/// containing (alpha, beta), or a minor-arc verdict.
ArcMembership2D in_major_arc_2d(const ArcDissection& dissection, double alpha, double beta);

struct ArcMembership1D {
    bool major = false;
    i64 q = 0, a = 0;
};
ArcMembership1D in_major_arc_1d(const ArcDissection& dissection, double alpha);

/// Lebesgue measure of the union of one-dimensional major arcs inside [0, 1],
/// exact interval arithmetic when Q is an integer.
double major_arc_measure_1d(const ArcDissection& dissection);

}  // namespace quartic
