#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "multibrot/constants.hpp"

using multibrot::mu_bruteforce;
using multibrot::MuSolution;
using multibrot::SectionConstants;
using multibrot::XiRoot;

namespace {

// Golden values frozen from an independent 30-digit solve of the same
// definitions, cross-checked below against the exact reductions for
// d = 2, 3, 5 and against the optimization oracle.
struct GoldenRow {
    int d;
    double alpha;
    double beta;
    double gamma;
};

constexpr GoldenRow kGolden[] = {
    {2, 0.250000000000000, 2.000000000000000, 1.100917368760401},
    {3, 0.384900179459751, 1.414213562373095, 1.088662107903635},
    {4, 0.472470393710577, 1.259921049894873, 1.078336651267690},
    {5, 0.534992243981138, 1.189207115002721, 1.069984487962275},
    {6, 0.582355932309649, 1.148698354997035, 1.063192241689960},
    {7, 0.619731451199558, 1.122462048309373, 1.057591279886733},
    {8, 0.650122501497415, 1.104089513673812, 1.052904316238741},
    {9, 0.675409498356971, 1.090507732665258, 1.048928539066906},
    {10, 0.696837314413014, 1.080059738892306, 1.045514970839414},
    {11, 0.715266765633429, 1.071773462536293, 1.042552690084109},
    {12, 0.731314278910422, 1.065041089439962, 1.039957792279271},
};

}  // namespace

TEST_CASE("alpha and beta formulas") {
    CHECK(multibrot::alpha(2.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(multibrot::beta(2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(multibrot::beta(3.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    // alpha(8) = 7 * 2^(-24/7), an algebraically different route
    CHECK(multibrot::alpha(8.0) ==
          doctest::Approx(7.0 * std::exp2(-24.0 / 7.0)).epsilon(1e-14));
    CHECK_THROWS_AS(multibrot::alpha(1.9), std::invalid_argument);
    CHECK_THROWS_AS(multibrot::beta(0.0), std::invalid_argument);
}

TEST_CASE("golden table to 1e-12") {
    for (const GoldenRow& row : kGolden) {
        CAPTURE(row.d);
        const SectionConstants sc = multibrot::section_constants(row.d);
        CHECK(std::abs(sc.alpha - row.alpha) <= 1e-12);
        CHECK(std::abs(sc.beta - row.beta) <= 1e-12);
        CHECK(std::abs(sc.gamma - row.gamma) <= 1e-12);
    }
}

TEST_CASE("xi root closed forms") {
    // cosh(3x) = 4cosh^3(x) - 3cosh(x) reduces the d=3 equation to
    // cosh^2(xi) = 3/2; for d=2 the double-angle identity gives a
    // quadratic with root cosh(xi) = (1 + sqrt(3))/2.
    const XiRoot xi3 = multibrot::solve_xi(3.0);
    CHECK(std::abs(xi3.xi - std::acosh(std::sqrt(1.5))) <= 1e-14);
    CHECK(xi3.residual <= 1e-12);

    const XiRoot xi2 = multibrot::solve_xi(2.0);
    CHECK(std::abs(xi2.xi - std::acosh(0.5 * (1.0 + std::sqrt(3.0)))) <= 1e-14);
    CHECK(xi2.residual <= 1e-12);
}

TEST_CASE("xi root: residual and sign change") {
    for (double d : {2.0, 2.5, 3.0, 5.0, 7.0, 12.0, 50.0, 100.0, 1e3, 1e5}) {
        CAPTURE(d);
        const XiRoot root = multibrot::solve_xi(d);
        CHECK(root.xi > 0.0);
        CHECK(root.residual <= 1e-9);
        const auto g = [d](double x) { return std::cosh(d * x) - d * std::cosh(x); };
        CHECK(g(root.xi - 1e-6) < 0.0);
        CHECK(g(root.xi + 1e-6) > 0.0);
    }
    CHECK_THROWS_AS(multibrot::solve_xi(1.0), std::invalid_argument);
}

TEST_CASE("gamma closed forms") {
    CHECK(std::abs(multibrot::gamma(3.0) - std::sqrt(32.0 / 27.0)) <= 1e-11);
    // d=5: the quintuple-angle identity collapses the root equation to
    // cosh^2(xi) = 5/4, whence sinh(xi) = 1/2 and gamma(5) = 8 * 5^(-5/4).
    CHECK(std::abs(multibrot::gamma(5.0) - 8.0 * std::pow(5.0, -1.25)) <= 1e-11);
    CHECK(multibrot::gamma(2.0) == doctest::Approx(1.100917369).epsilon(5e-10));
}

TEST_CASE("gamma exceeds 1 and alpha < gamma") {
    for (int d = 2; d <= 100; ++d) {
        CAPTURE(d);
        const double g = multibrot::gamma(d);
        CHECK(g > 1.0);
        CHECK(multibrot::alpha(d) < g);
    }
}

TEST_CASE("alpha increases, beta decreases on 2..12") {
    for (int d = 3; d <= 12; ++d) {
        CHECK(multibrot::alpha(d) > multibrot::alpha(d - 1));
        CHECK(multibrot::beta(d) < multibrot::beta(d - 1));
    }
}

TEST_CASE("section_constants ties the pieces together") {
    const SectionConstants sc = multibrot::section_constants(7.0);
    CHECK(sc.d == 7.0);
    CHECK(sc.alpha == multibrot::alpha(7.0));
    CHECK(sc.beta == multibrot::beta(7.0));
    CHECK(sc.gamma == multibrot::gamma(7.0));
    CHECK(sc.xi == multibrot::solve_xi(7.0).xi);
    CHECK(sc.xi_residual <= 1e-9);
}

TEST_CASE("mu oracle matches gamma at d=3") {
    const MuSolution mu = mu_bruteforce(3.0);
    CHECK(std::abs(mu.mu - multibrot::gamma(3.0)) <= 1e-8);
    CHECK(mu.constraint_residual <= 1e-10);
    CHECK(mu.mu >= 1.0);

    // Maximizer against the closed-form pair 3^(-1/2) e^(+-xi_3)
    const double xi3 = std::acosh(std::sqrt(1.5));
    const double scale = 1.0 / std::sqrt(3.0);
    CHECK(std::abs(mu.a0 - scale * std::exp(xi3)) <= 1e-9);
    CHECK(std::abs(mu.b0 - scale * std::exp(-xi3)) <= 1e-9);
}

TEST_CASE("mu oracle first-order optimality across degrees") {
    for (double d : {2.0, 3.0, 7.0, 20.0, 50.0}) {
        CAPTURE(d);
        const MuSolution mu = mu_bruteforce(d);
        const double target = std::exp(-2.0 / (d - 1.0) * std::log(d));
        CHECK(std::abs(mu.a0 * mu.b0 - target) <= 1e-8);
        CHECK(std::abs(mu.mu - multibrot::gamma(d)) <= 1e-8);
        CHECK(mu.constraint_residual <= 1e-10);
        CHECK(mu.mu >= 1.0);
    }
}

TEST_CASE("mu oracle rejects bad arguments") {
    CHECK_THROWS_AS(mu_bruteforce(1.5), std::invalid_argument);
    CHECK_THROWS_AS(mu_bruteforce(3.0, 10), std::invalid_argument);
}

TEST_CASE("gamma parameter carries the period-2 exchange pair") {
    // At c = gamma(d) the points a0 = d^(-1/(d-1)) e^xi and -b0 are
    // swapped by x -> c - x^d (odd d).
    for (int d : {3, 5}) {
        CAPTURE(d);
        const double c = multibrot::gamma(d);
        const double xi = multibrot::solve_xi(d).xi;
        const double scale = std::exp(-std::log(double(d)) / (d - 1.0));
        const double a0 = scale * std::exp(xi);
        const double b0 = scale * std::exp(-xi);
        CHECK(std::abs((c - std::pow(a0, d)) + b0) <= 1e-9);
        CHECK(std::abs((c - std::pow(-b0, d)) - a0) <= 1e-9);
        CHECK(std::abs(a0 * b0 - std::exp(-2.0 / (d - 1.0) * std::log(double(d)))) <= 1e-12);
    }
}

TEST_CASE("asymptotic deviation stays bounded on the ladder") {
    CHECK(multibrot::gamma_asymptotic_deviation(3.0) > 0.0);
    const double base = multibrot::gamma_asymptotic_deviation(1e2);
    for (double d : {1e3, 1e4, 1e5}) {
        CAPTURE(d);
        CHECK(multibrot::gamma_asymptotic_deviation(d) <= 2.0 * base);
    }
    for (double d : {1e2, 1e3, 1e4, 1e5}) {
        const double scaled = d * std::log2(multibrot::gamma(d));
        CHECK(scaled >= 0.9);
        CHECK(scaled <= 1.1);
    }
}
