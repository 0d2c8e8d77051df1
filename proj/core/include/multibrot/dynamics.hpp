#pragma once

#include <complex>
#include <optional>

namespace multibrot {

using Complex = std::complex<double>;

// Rejects NaN and infinite components.
Complex make_point(double re, double im);

// Integer degree d >= 2 of the maps p_c(z) = z^d + c and q_c(z) = -z^d + c.
class Degree {
  public:
    explicit Degree(int d);
    int value() const { return d_; }
    bool odd() const { return d_ % 2 != 0; }

  private:
    int d_;
};

struct IterationBudget {
    int max_iters = 100000;
    double escape_margin = 1e-9;  // added to the escape radius
};

enum class OrbitOutcome { Escaped, Undetermined, ProvenBounded };

// Interval [lo, hi] that the orbit map sends into itself, up to check_tol:
//   q_c(hi) >= lo - check_tol  and  q_c(lo) <= hi + check_tol.
struct IntervalWitness {
    double lo;
    double hi;
    double check_tol;
};

struct OrbitVerdict {
    OrbitOutcome kind;
    int steps;     // iteration count at decision
    Complex last;  // iterate at decision time
    std::optional<IntervalWitness> witness;  // present iff ProvenBounded

    bool escaped() const { return kind == OrbitOutcome::Escaped; }
    bool proven_bounded() const { return kind == OrbitOutcome::ProvenBounded; }
};

// z^n (n >= 0) by binary exponentiation on the cartesian components.
// No polar form anywhere, so orbits reproduce bit-for-bit across platforms.
Complex pow_int(Complex z, int n);

Complex step_p(Degree d, Complex z, Complex c);  // z^d + c
Complex step_q(Degree d, Complex z, Complex c);  // -z^d + c

// max(|c|, beta(d)). Once |z| exceeds this, |z^(d-1)| > 2 and every further
// step at least doubles the excess, so the orbit diverges. Callers add
// their escape margin on top.
double escape_radius(Degree d, Complex c);

// Orbit of 0 under p_c. Escaped(n) once |z_n| > escape_radius + margin
// (non-finite intermediates count as escaped), otherwise
// Undetermined(max_iters). Never ProvenBounded: there is no generic
// boundedness certificate for complex parameters.
OrbitVerdict iterate_p(Degree d, Complex c, const IterationBudget& budget = {});

// Same contract for q_c; the escape bound |z|^d - |c| <= |-z^d + c| is
// sign-independent, so the radius is identical.
OrbitVerdict iterate_q(Degree d, Complex c, const IterationBudget& budget = {});

// Real orbit of 0 under q_c for odd d and c >= 0, exploiting monotone
// structure:
//   - c <= 1: [0, c] is q_c-invariant, so the verdict is ProvenBounded
//     immediately.
//   - c > 1: the even iterates decrease and the odd iterates increase.
//     When consecutive even and odd terms each settle within 1e-13 the
//     limits are a candidate period-2 pair (-b, a); the witness interval
//     is [-b, a] enlarged by 1e-10 per side and rechecked for invariance
//     (up to the witness check_tol). Escape and budget exhaustion are
//     reported as usual; Undetermined is never coerced to bounded.
OrbitVerdict analyze_real_q_orbit(Degree d, double c, const IterationBudget& budget = {});

}  // namespace multibrot
