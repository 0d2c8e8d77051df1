#include "multibrot/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace multibrot {

namespace {

void require_degree(double d) {
    if (!(d >= 2.0)) throw std::invalid_argument("degree must be >= 2");
}

// Above |x| = 30 the e^{-x} half of cosh/sinh is below 1e-26 relative, so
// e^{|x|}/2 substitutes for the symmetric formula on extreme-degree ladders.
double cosh_s(double x) {
    const double ax = std::abs(x);
    return ax > 30.0 ? 0.5 * std::exp(ax) : std::cosh(x);
}

double sinh_s(double x) {
    const double ax = std::abs(x);
    if (ax <= 30.0) return std::sinh(x);
    const double v = 0.5 * std::exp(ax);
    return x < 0.0 ? -v : v;
}

double xi_equation(double d, double x) { return cosh_s(d * x) - d * cosh_s(x); }

// x^e for e >= 0; binary exponentiation when e is a small integer, pow
// otherwise. Keeps the mu oracle cheap for the integer degrees it is
// actually run on.
double pow_deg(double x, double e) {
    const double r = std::round(e);
    if (e >= 0.0 && e == r && r <= 512.0) {
        auto n = static_cast<unsigned>(r);
        double result = 1.0;
        double base = x;
        while (n != 0) {
            if (n & 1u) result *= base;
            base *= base;
            n >>= 1u;
        }
        return result;
    }
    return std::pow(x, e);
}

}  // namespace

double alpha(double d) {
    require_degree(d);
    return (d - 1.0) * std::exp(-d / (d - 1.0) * std::log(d));
}

double beta(double d) {
    require_degree(d);
    return std::exp2(1.0 / (d - 1.0));
}

XiRoot solve_xi(double d) {
    if (!(d > 1.0)) throw std::invalid_argument("solve_xi requires d > 1");

    // cosh(ln d) = (d + 1/d)/2 < d <= d*cosh(ln(d)/d), so the equation is
    // negative at the lower end; at 2*ln(2d)/d it is positive.
    double lo = std::log(d) / d;
    double hi = 2.0 * std::log(2.0 * d) / d;
    if (!(xi_equation(d, lo) < 0.0) || !(xi_equation(d, hi) > 0.0))
        throw std::logic_error("solve_xi: bracket failed");

    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (xi_equation(d, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }

    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 5; ++i) {
        const double slope = d * (sinh_s(d * x) - sinh_s(x));
        if (slope == 0.0) break;
        x -= xi_equation(d, x) / slope;
    }

    const double residual = std::abs(xi_equation(d, x)) / (d * cosh_s(x));
    return {x, residual};
}

namespace {

double gamma_from_xi(double d, double xi) {
    return std::exp(-d / (d - 1.0) * std::log(d)) * (sinh_s(d * xi) + d * sinh_s(xi));
}

}  // namespace

double gamma(double d) {
    require_degree(d);
    return gamma_from_xi(d, solve_xi(d).xi);
}

SectionConstants section_constants(double d) {
    require_degree(d);
    const XiRoot root = solve_xi(d);
    return {d, alpha(d), beta(d), root.xi, gamma_from_xi(d, root.xi), root.residual};
}

MuSolution mu_bruteforce(double d, int grid_samples) {
    require_degree(d);
    if (grid_samples < 1000) throw std::invalid_argument("mu_bruteforce needs >= 1000 samples");

    // a(b): root of a^d - a = b - b^d in [1, 2]. h(x) = x^d - x increases
    // there, h(1) = 0 and h(2) = 2^d - 2 exceeds max_b (b - b^d) < 1.
    const auto solve_a = [d](double target) {
        double lo = 1.0;
        double hi = 2.0;
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            if (pow_deg(mid, d) - mid < target)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    const auto value = [&](double b) {
        const double bd = pow_deg(b, d);
        return solve_a(b - bd) - bd;
    };

    // Dense scan of b in [0, 1]; endpoints (1,0) -> 1 and (1,1) -> 0 are
    // grid points, though the maximum is interior.
    const int n = grid_samples;
    int best = 0;
    double best_value = -1.0;
    for (int i = 0; i <= n; ++i) {
        const double f = value(static_cast<double>(i) / n);
        if (f > best_value) {
            best_value = f;
            best = i;
        }
    }

    const double cell_lo = best > 0 ? static_cast<double>(best - 1) / n : 0.0;
    const double cell_hi = best < n ? static_cast<double>(best + 1) / n : 1.0;

    // Golden-section pass on the bracketing cell.
    constexpr double kInvPhi = 0.6180339887498949;
    constexpr double kInvPhi2 = 0.3819660112501051;
    double glo = cell_lo;
    double ghi = cell_hi;
    double h = ghi - glo;
    double x1 = glo + kInvPhi2 * h;
    double x2 = glo + kInvPhi * h;
    double f1 = value(x1);
    double f2 = value(x2);
    while (h > 1e-12) {
        if (f1 > f2) {
            ghi = x2;
            x2 = x1;
            f2 = f1;
            h = ghi - glo;
            x1 = glo + kInvPhi2 * h;
            f1 = value(x1);
        } else {
            glo = x1;
            x1 = x2;
            f1 = f2;
            h = ghi - glo;
            x2 = glo + kInvPhi * h;
            f2 = value(x2);
        }
    }
    double b0 = 0.5 * (glo + ghi);

    // Value comparisons cannot place the maximizer better than ~sqrt(eps)
    // on the flat top, so pin it with a sign bisection of
    //   f'(b) = a'(b) - d b^(d-1),  a'(b) = (1 - d b^(d-1)) / (d a^(d-1) - 1)
    // over the same cell.
    const auto slope = [&](double b) {
        const double a = solve_a(b - pow_deg(b, d));
        const double dbd = d * pow_deg(b, d - 1.0);
        return (1.0 - dbd) / (d * pow_deg(a, d - 1.0) - 1.0) - dbd;
    };
    if (cell_lo > 0.0 && cell_hi < 1.0 && slope(cell_lo) > 0.0 && slope(cell_hi) < 0.0) {
        double slo = cell_lo;
        double shi = cell_hi;
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (slo + shi);
            if (mid == slo || mid == shi) break;
            if (slope(mid) > 0.0)
                slo = mid;
            else
                shi = mid;
        }
        b0 = 0.5 * (slo + shi);
    }

    const double b0d = pow_deg(b0, d);
    const double a0 = solve_a(b0 - b0d);
    const double residual = std::abs(pow_deg(a0, d) + b0d - a0 - b0);
    return {a0, b0, a0 - b0d, residual};
}

double gamma_asymptotic_deviation(double d) {
    require_degree(d);
    const double ln_d = std::log(d);
    return std::abs(d * std::log(gamma(d)) - std::log(2.0)) * d / (ln_d * ln_d);
}

}  // namespace multibrot
