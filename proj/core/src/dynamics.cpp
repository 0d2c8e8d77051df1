#include "multibrot/dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "multibrot/constants.hpp"

namespace multibrot {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Textbook product on the components; std::complex::operator* may route
// through library helpers whose rounding differs between platforms.
Complex mul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

double pow_int_real(double x, int n) {
    double result = 1.0;
    double base = x;
    while (n != 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

void validate(const IterationBudget& budget) {
    if (budget.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!(budget.escape_margin > 0.0)) throw std::invalid_argument("escape_margin must be > 0");
}

void validate_point(Complex c) {
    if (!finite(c)) throw std::invalid_argument("parameter must be finite");
}

OrbitVerdict escaped(int steps, Complex last) {
    return {OrbitOutcome::Escaped, steps, last, std::nullopt};
}

OrbitVerdict undetermined(int steps, Complex last) {
    return {OrbitOutcome::Undetermined, steps, last, std::nullopt};
}

}  // namespace

Complex make_point(double re, double im) {
    Complex c{re, im};
    validate_point(c);
    return c;
}

Degree::Degree(int d) : d_(d) {
    if (d < 2) throw std::invalid_argument("degree must be an integer >= 2");
}

Complex pow_int(Complex z, int n) {
    if (n < 0) throw std::invalid_argument("pow_int: negative exponent");
    Complex result{1.0, 0.0};
    Complex base = z;
    while (n != 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

Complex step_p(Degree d, Complex z, Complex c) { return pow_int(z, d.value()) + c; }

Complex step_q(Degree d, Complex z, Complex c) { return c - pow_int(z, d.value()); }

double escape_radius(Degree d, Complex c) {
    validate_point(c);
    return std::max(std::abs(c), beta(d.value()));
}

OrbitVerdict iterate_p(Degree d, Complex c, const IterationBudget& budget) {
    validate(budget);
    validate_point(c);
    const double radius = escape_radius(d, c) + budget.escape_margin;
    Complex z{0.0, 0.0};
    for (int n = 1; n <= budget.max_iters; ++n) {
        z = step_p(d, z, c);
        // Overflow means the modulus already exceeded every finite radius.
        if (!finite(z)) return escaped(n, z);
        if (std::abs(z) > radius) return escaped(n, z);
    }
    return undetermined(budget.max_iters, z);
}

OrbitVerdict iterate_q(Degree d, Complex c, const IterationBudget& budget) {
    validate(budget);
    validate_point(c);
    const double radius = escape_radius(d, c) + budget.escape_margin;
    Complex z{0.0, 0.0};
    for (int n = 1; n <= budget.max_iters; ++n) {
        z = step_q(d, z, c);
        if (!finite(z)) return escaped(n, z);
        if (std::abs(z) > radius) return escaped(n, z);
    }
    return undetermined(budget.max_iters, z);
}

OrbitVerdict analyze_real_q_orbit(Degree d, double c, const IterationBudget& budget) {
    if (!d.odd()) throw std::invalid_argument("analyze_real_q_orbit requires odd degree");
    if (!std::isfinite(c) || c < 0.0) throw std::invalid_argument("c must be finite and >= 0");
    validate(budget);

    constexpr double kConvergenceTol = 1e-13;  // consecutive subsequence terms
    constexpr double kEnlarge = 1e-10;         // witness padding per side
    // The limit pair is exchanged by q_c with one-sided derivative up to
    // ~2d at the extremal parameter, so the padded endpoints re-enter the
    // interval only up to a slack that scales the same way.
    const double check_tol = 1e-9 * d.value();

    const auto q = [&](double x) { return c - pow_int_real(x, d.value()); };

    if (c <= 1.0) {
        // q_c(0) = c and q_c(c) = c - c^d >= 0 with q_c decreasing, so
        // [0, c] maps into itself and the orbit of 0 never leaves it.
        return {OrbitOutcome::ProvenBounded, 0, Complex{0.0, 0.0},
                IntervalWitness{0.0, c, check_tol}};
    }

    // c > 1: even iterates decrease toward -b, odd iterates increase
    // toward a; [x_even, x_odd] grows outward to the limit interval.
    const double radius = std::max(c, beta(d.value())) + budget.escape_margin;
    double x = 0.0;
    double last_even = 0.0;
    double last_odd = 0.0;
    double even_diff = std::numeric_limits<double>::infinity();
    double odd_diff = std::numeric_limits<double>::infinity();
    bool have_odd = false;

    for (int n = 1; n <= budget.max_iters; ++n) {
        x = q(x);
        if (!std::isfinite(x) || std::abs(x) > radius)
            return escaped(n, Complex{x, 0.0});

        if (n % 2 == 1) {
            if (have_odd) odd_diff = std::abs(x - last_odd);
            last_odd = x;
            have_odd = true;
        } else {
            even_diff = std::abs(x - last_even);
            last_even = x;
        }

        if (even_diff < kConvergenceTol && odd_diff < kConvergenceTol) {
            const double lo = last_even - kEnlarge;
            const double hi = last_odd + kEnlarge;
            if (q(hi) >= lo - check_tol && q(lo) <= hi + check_tol)
                return {OrbitOutcome::ProvenBounded, n, Complex{x, 0.0},
                        IntervalWitness{lo, hi, check_tol}};
        }
    }
    return undetermined(budget.max_iters, Complex{x, 0.0});
}

}  // namespace multibrot
