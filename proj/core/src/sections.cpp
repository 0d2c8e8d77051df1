#include "multibrot/sections.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "multibrot/constants.hpp"

namespace multibrot {

namespace {

using nlohmann::json;

constexpr double kOmegaResidualTol = 1e-12;

double power_residual(Complex omega, int d, double target_sign) {
    return std::abs(pow_int(omega, d - 1) - Complex{target_sign, 0.0});
}

json budget_json(const IterationBudget& budget) {
    return {{"max_iters", budget.max_iters}, {"escape_margin", budget.escape_margin}};
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

const char* outcome_name(OrbitOutcome kind) {
    switch (kind) {
        case OrbitOutcome::Escaped: return "escaped";
        case OrbitOutcome::Undetermined: return "undetermined";
        case OrbitOutcome::ProvenBounded: return "proven_bounded";
    }
    return "?";
}

}  // namespace

const char* to_string(RayKind kind) {
    return kind == RayKind::RootOfUnity ? "root_of_unity" : "root_of_minus_unity";
}

RayClass::RayClass(RayKind kind, Complex omega, Degree d)
    : kind_(kind), omega_(omega), degree_(d) {
    const double sign = kind == RayKind::RootOfUnity ? 1.0 : -1.0;
    if (power_residual(omega, d.value(), sign) > kOmegaResidualTol)
        throw std::invalid_argument("omega is not a (d-1)-th root of the required sign");
}

RayClass RayClass::root_of_unity(Degree d) {
    return {RayKind::RootOfUnity, Complex{1.0, 0.0}, d};
}

RayClass RayClass::root_of_minus_unity(Degree d) {
    if (!d.odd()) return {RayKind::RootOfMinusUnity, Complex{-1.0, 0.0}, d};
    const double angle = std::numbers::pi / (d.value() - 1);
    return {RayKind::RootOfMinusUnity, Complex{std::cos(angle), std::sin(angle)}, d};
}

RayClass RayClass::imaginary_axis(Degree d) {
    if ((d.value() - 1) % 4 != 2)
        throw std::invalid_argument("omega = i needs d - 1 == 2 (mod 4)");
    return {RayKind::RootOfMinusUnity, Complex{0.0, 1.0}, d};
}

double RayClass::predicted_endpoint() const {
    const double d = degree_.value();
    if (kind_ == RayKind::RootOfUnity) return alpha(d);
    return degree_.odd() ? gamma(d) : beta(d);
}

EndpointEstimate scan_ray_endpoint(const RayClass& ray, const IterationBudget& budget,
                                   int bisection_steps) {
    if (bisection_steps < 1) throw std::invalid_argument("bisection_steps must be >= 1");
    const Degree d = ray.degree();
    const Complex omega = ray.omega();

    const auto escapes = [&](double t) {
        return iterate_p(d, t * omega, budget).escaped();
    };

    double t_low = 0.0;
    double t_high = beta(d.value()) + 0.5;
    if (!escapes(t_high))
        throw std::runtime_error("scan_ray_endpoint: upper bound failed to escape");

    for (int i = 0; i < bisection_steps; ++i) {
        const double mid = 0.5 * (t_low + t_high);
        if (escapes(mid))
            t_high = mid;
        else
            t_low = mid;
    }
    return {t_low, t_high, budget};
}

ScanReport scan_and_report(const RayClass& ray, const IterationBudget& budget,
                           int bisection_steps, double tolerance) {
    const EndpointEstimate estimate = scan_ray_endpoint(ray, budget, bisection_steps);
    const double predicted = ray.predicted_endpoint();
    const bool pass = std::abs(estimate.midpoint() - predicted) <= tolerance;
    return {ray.degree().value(), ray.kind(), ray.omega(), estimate,
            predicted, bisection_steps, tolerance, pass};
}

bool RealSectionReport::all_pass() const {
    for (const auto& check : checks)
        if (!check.pass) return false;
    return true;
}

RealSectionReport verify_real_sections(Degree d, const IterationBudget& budget) {
    const double a = alpha(d.value());
    const double b = beta(d.value());
    RealSectionReport report{d.value(), {}};

    const auto expect = [&](const std::string& name, double c, bool want_escape) {
        const OrbitVerdict v = iterate_p(d, Complex{c, 0.0}, budget);
        std::ostringstream detail;
        detail << "verdict " << outcome_name(v.kind) << " after " << v.steps << " steps";
        report.checks.push_back({name, c, v.escaped() == want_escape, detail.str()});
    };

    expect("inside +0.999*alpha", 0.999 * a, false);
    expect("outside +1.001*alpha", 1.001 * a, true);

    if (d.odd()) {
        expect("inside -0.999*alpha", -0.999 * a, false);
        expect("outside -1.001*alpha", -1.001 * a, true);
    } else {
        // At c = -beta the orbit lands on the fixed point beta exactly:
        // 0 -> -beta -> beta -> beta, since beta^d = 2*beta.
        const Complex c{-b, 0.0};
        const Complex z1 = step_p(d, Complex{0.0, 0.0}, c);
        const Complex z2 = step_p(d, z1, c);
        const Complex z3 = step_p(d, z2, c);
        const double err = std::max(std::abs(z2 - Complex{b, 0.0}), std::abs(z3 - Complex{b, 0.0}));
        std::ostringstream detail;
        detail << "|orbit - beta| = " << err;
        report.checks.push_back({"exact landing at -beta", -b, err <= 1e-12, detail.str()});
        expect("outside -1.001*beta", -1.001 * b, true);
    }
    return report;
}

std::vector<Complex> make_symmetry_samples(Degree d, int count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    static constexpr double kInsideFractions[] = {0.20, 0.50, 0.80, 0.95};
    static constexpr double kOutsideFractions[] = {1.02, 1.10, 1.25};
    constexpr double kGolden = 0.6180339887498949;

    const double a = alpha(d.value());
    const double b = beta(d.value());
    std::vector<Complex> samples;
    samples.reserve(count);
    for (int k = 0; k < count; ++k) {
        const double frac = k * kGolden - std::floor(k * kGolden);
        const double angle = 2.0 * std::numbers::pi * frac;
        const int slot = k % 7;
        const double r = slot < 4 ? kInsideFractions[slot] * a : kOutsideFractions[slot - 4] * b;
        samples.push_back(Complex{r * std::cos(angle), r * std::sin(angle)});
    }
    return samples;
}

SymmetryReport verify_rotation_symmetry(Degree d, std::span<const Complex> samples,
                                        const IterationBudget& budget) {
    SymmetryReport report{
        d.value(), static_cast<int>(samples.size()), d.value() - 1,
        "moduli on {0.20,0.50,0.80,0.95}*alpha and {1.02,1.10,1.25}*beta, "
        "angles 2*pi*frac(k*0.6180339887498949)",
        {}};

    for (const Complex& c : samples) {
        const OrbitVerdict base = iterate_p(d, c, budget);
        for (int m = 1; m < d.value(); ++m) {
            const double angle = 2.0 * std::numbers::pi * m / (d.value() - 1);
            const Complex omega{std::cos(angle), std::sin(angle)};
            const OrbitVerdict rotated = iterate_p(d, omega * c, budget);
            const bool kinds_match = rotated.kind == base.kind;
            const bool steps_match =
                !base.escaped() || std::abs(rotated.steps - base.steps) <= 1;
            if (!kinds_match || !steps_match)
                report.mismatches.push_back(
                    {c, omega, base.kind, rotated.kind, base.steps, rotated.steps});
        }
    }
    return report;
}

std::string to_json(const ScanReport& report) {
    json j{{"d", report.d},
           {"ray", to_string(report.kind)},
           {"omega", complex_json(report.omega)},
           {"t_low", report.estimate.t_low},
           {"t_high", report.estimate.t_high},
           {"midpoint", report.estimate.midpoint()},
           {"predicted", report.predicted},
           {"budget", budget_json(report.estimate.budget_used)},
           {"bisection_steps", report.bisection_steps},
           {"tolerance", report.tolerance},
           {"inside_rule", "undetermined points treated as inside (interval cross-section)"},
           {"pass", report.pass}};
    return j.dump(2);
}

std::string to_text(const ScanReport& report) {
    std::ostringstream out;
    out.precision(12);
    out << "d=" << report.d << " ray=" << to_string(report.kind)
        << " omega=(" << report.omega.real() << ", " << report.omega.imag() << ")\n"
        << "  bracket [" << report.estimate.t_low << ", " << report.estimate.t_high << "]"
        << " midpoint " << report.estimate.midpoint() << "\n"
        << "  predicted " << report.predicted << " tolerance " << report.tolerance
        << " -> " << (report.pass ? "pass" : "FAIL") << "\n"
        << "  (undetermined points treated as inside; budget "
        << report.estimate.budget_used.max_iters << ", " << report.bisection_steps
        << " bisection steps)\n";
    return out.str();
}

std::string to_json(const RealSectionReport& report) {
    json checks = json::array();
    for (const auto& check : report.checks)
        checks.push_back({{"name", check.name},
                          {"c", check.c},
                          {"pass", check.pass},
                          {"detail", check.detail}});
    json j{{"d", report.d}, {"checks", checks}, {"pass", report.all_pass()}};
    return j.dump(2);
}

std::string to_text(const RealSectionReport& report) {
    std::ostringstream out;
    out.precision(12);
    out << "real sections, d=" << report.d << "\n";
    for (const auto& check : report.checks)
        out << "  " << (check.pass ? "pass" : "FAIL") << "  " << check.name
            << " (c=" << check.c << "): " << check.detail << "\n";
    return out.str();
}

std::string to_json(const SymmetryReport& report) {
    json mismatches = json::array();
    for (const auto& m : report.mismatches)
        mismatches.push_back({{"c", complex_json(m.c)},
                              {"omega", complex_json(m.omega)},
                              {"base", outcome_name(m.base_kind)},
                              {"rotated", outcome_name(m.rotated_kind)},
                              {"base_steps", m.base_steps},
                              {"rotated_steps", m.rotated_steps}});
    json j{{"d", report.d},
           {"samples", report.samples},
           {"rotations", report.rotations},
           {"sample_rule", report.sample_rule},
           {"mismatches", mismatches},
           {"pass", report.all_pass()}};
    return j.dump(2);
}

std::string to_text(const SymmetryReport& report) {
    std::ostringstream out;
    out << "rotation symmetry, d=" << report.d << ": " << report.samples << " samples x "
        << report.rotations << " rotations, " << report.mismatches.size() << " mismatches -> "
        << (report.all_pass() ? "pass" : "FAIL") << "\n"
        << "  samples: " << report.sample_rule << "\n";
    return out.str();
}

}  // namespace multibrot
