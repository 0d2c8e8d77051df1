#pragma once

namespace multibrot {

// Cross-section radii of the degree-d multibrot set M_d:
//
//   alpha(d) = (d-1) * d^(-d/(d-1))     largest disk about 0 inside M_d
//   beta(d)  = 2^(1/(d-1))              smallest disk about 0 containing M_d
//   gamma(d) = d^(-d/(d-1)) * (sinh(d*xi) + d*sinh(xi))
//
// where xi is the unique positive root of cosh(d*xi) = d*cosh(xi).
// gamma(d) bounds M_d on the rays t*omega with omega^(d-1) = -1 and d odd.
//
// The degree is a real parameter here; only the iteration kernels in
// dynamics.hpp require an integer degree.

struct XiRoot {
    double xi;        // positive root of cosh(d*xi) = d*cosh(xi)
    double residual;  // |cosh(d*xi) - d*cosh(xi)| / (d*cosh(xi))
};

struct SectionConstants {
    double d;
    double alpha;
    double beta;
    double xi;
    double gamma;
    double xi_residual;
};

// Solution of the constrained maximization
//   mu(d) = max{ a - b^d : a, b >= 0, a^d + b^d = a + b },
// which equals gamma(d). Computed by mu_bruteforce without any use of
// the xi root, so it serves as an independent check on gamma.
struct MuSolution {
    double a0;
    double b0;
    double mu;                   // a0 - b0^d
    double constraint_residual;  // |a0^d + b0^d - a0 - b0|
};

double alpha(double d);
double beta(double d);

// Bracketed bisection on [ln(d)/d, 2*ln(2d)/d] followed by a short Newton
// polish. Relative residual stays below 1e-9 (typically near 1e-16).
XiRoot solve_xi(double d);

double gamma(double d);

// All of the above for one degree, sharing a single xi solve.
SectionConstants section_constants(double d);

// Dense scan of the constraint curve parametrized by b in [0, 1] (the
// matching a in [1, 2] is bisected from a^d - a = b - b^d), golden-section
// refinement of the best cell, then a derivative-sign bisection that pins
// the maximizer itself. grid_samples >= 1000.
MuSolution mu_bruteforce(double d, int grid_samples = 100000);

// |d*ln(gamma(d)) - ln 2| * d / (ln d)^2. Stays bounded as d grows; the
// CLI verify command records it on the ladder d = 1e2..1e5.
double gamma_asymptotic_deviation(double d);

}  // namespace multibrot
