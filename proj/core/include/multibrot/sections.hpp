#pragma once

#include <span>
#include <string>
#include <vector>

#include "multibrot/dynamics.hpp"

namespace multibrot {

enum class RayKind { RootOfUnity, RootOfMinusUnity };

const char* to_string(RayKind kind);

// A ray R+ * omega with omega^(d-1) = +1 or -1. The sign, together with
// the parity of d, determines which constant bounds M_d on the ray:
//   omega^(d-1) = +1            -> alpha(d)
//   omega^(d-1) = -1, d even    -> beta(d)
//   omega^(d-1) = -1, d odd     -> gamma(d)
class RayClass {
  public:
    static RayClass root_of_unity(Degree d);        // omega = 1
    static RayClass root_of_minus_unity(Degree d);  // omega = -1 (even d) or e^(i*pi/(d-1))
    static RayClass imaginary_axis(Degree d);       // omega = i; needs d-1 == 2 (mod 4)

    RayKind kind() const { return kind_; }
    Complex omega() const { return omega_; }
    Degree degree() const { return degree_; }
    double predicted_endpoint() const;

  private:
    RayClass(RayKind kind, Complex omega, Degree d);

    RayKind kind_;
    Complex omega_;
    Degree degree_;
};

struct EndpointEstimate {
    double t_low;   // largest t not classified Escaped
    double t_high;  // smallest t classified Escaped
    IterationBudget budget_used;

    double midpoint() const { return 0.5 * (t_low + t_high); }
    double width() const { return t_high - t_low; }
};

// Bisection for the endpoint of M_d on the ray, classifying t*omega with
// iterate_p. t values that stay undetermined within the budget count as
// inside; on these rays the bounded section is a t-interval, so the search
// is monotone. Starts from [0, beta(d) + 0.5] and throws if the upper
// bound fails to escape (it cannot for finite inputs).
EndpointEstimate scan_ray_endpoint(const RayClass& ray, const IterationBudget& budget,
                                   int bisection_steps);

struct ScanReport {
    int d;
    RayKind kind;
    Complex omega;
    EndpointEstimate estimate;
    double predicted;
    int bisection_steps;
    double tolerance;
    bool pass;  // |midpoint - predicted| <= tolerance
};

ScanReport scan_and_report(const RayClass& ray, const IterationBudget& budget,
                           int bisection_steps, double tolerance);

// Sentinel checks of the real cross-section of M_d:
//   odd d:  [-alpha, alpha]      even d: [-beta, alpha]
// Just-inside points must not escape, just-outside points must escape, and
// for even d the orbit at c = -beta lands exactly on the fixed point beta:
// 0 -> -beta -> beta -> beta (within 1e-12 in binary64).
struct SentinelCheck {
    std::string name;
    double c;
    bool pass;
    std::string detail;
};

struct RealSectionReport {
    int d;
    std::vector<SentinelCheck> checks;
    bool all_pass() const;
};

RealSectionReport verify_real_sections(Degree d, const IterationBudget& budget = {});

// Deterministic sample set for rotation-symmetry checks. Points are placed
// off-boundary by construction: moduli cycle over fixed fractions of
// alpha(d) (at most 0.95, inside the inscribed disk) and of beta(d) (at
// least 1.02, outside the circumscribed disk); angles follow the golden-
// ratio sequence 2*pi*frac(k*0.6180339887498949).
std::vector<Complex> make_symmetry_samples(Degree d, int count);

struct SymmetryMismatch {
    Complex c;
    Complex omega;
    OrbitOutcome base_kind;
    OrbitOutcome rotated_kind;
    int base_steps;
    int rotated_steps;
};

struct SymmetryReport {
    int d;
    int samples;
    int rotations;  // d - 1 roots of unity per sample
    std::string sample_rule;
    std::vector<SymmetryMismatch> mismatches;
    bool all_pass() const { return mismatches.empty(); }
};

// Verdict kinds of c and omega*c must agree for every (d-1)-th root of
// unity omega, with escape steps differing by at most 1.
SymmetryReport verify_rotation_symmetry(Degree d, std::span<const Complex> samples,
                                        const IterationBudget& budget = {});

std::string to_json(const ScanReport& report);
std::string to_text(const ScanReport& report);
std::string to_json(const RealSectionReport& report);
std::string to_text(const RealSectionReport& report);
std::string to_json(const SymmetryReport& report);
std::string to_text(const SymmetryReport& report);

}  // namespace multibrot
