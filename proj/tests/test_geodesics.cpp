#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "qig/geodesics.hpp"
#include "qig/paths.hpp"

using namespace qig;

namespace {

double constant_four(double) { return 4.0; }
double zero(double) { return 0.0; }
double model_ii_metric(double theta) { return 4.0 / (1.0 - theta * theta); }
double model_ii_metric_prime(double theta) {
    const double w = 1.0 - theta * theta;
    return 8.0 * theta / (w * w);
}

}  // namespace

TEST_CASE("solve_geodesic reproduces the linear closed form for constant F") {
    const GeodesicSolution sol =
        solve_geodesic(constant_four, zero, 0.1, 0.6, 0.25, 1.75);
    REQUIRE(sol.length == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(sol.duration == Catch::Approx(sol.length).margin(1e-8));
    REQUIRE(sol.samples.front().theta == Catch::Approx(0.1).margin(1e-9));
    REQUIRE(sol.samples.back().theta == Catch::Approx(0.6).margin(1e-9));
    double worst = 0.0;
    for (const GeodesicSample& s : sol.samples) {
        const double expected = 0.1 + (0.6 - 0.1) * (s.tau - 0.25) / 1.5;
        worst = std::max(worst, std::abs(s.theta - expected));
    }
    REQUIRE(worst < 1e-7);
    REQUIRE(sol.rk4_deviation < 1e-6);
    REQUIRE(sol.first_integral_drift < 1e-6);
}

TEST_CASE("solve_geodesic reproduces the sinusoidal closed form for the quadratic model") {
    const double theta_i = 0.1, theta_f = 0.6;
    const GeodesicSolution sol =
        solve_geodesic(model_ii_metric, model_ii_metric_prime, theta_i, theta_f, 0.0, 1.0);
    const double span = std::asin(theta_f) - std::asin(theta_i);
    REQUIRE(sol.length == Catch::Approx(2.0 * span).margin(1e-9));
    double worst = 0.0;
    for (const GeodesicSample& s : sol.samples) {
        const double expected = std::sin(std::asin(theta_i) + span * s.tau);
        worst = std::max(worst, std::abs(s.theta - expected));
    }
    REQUIRE(worst < 1e-7);
    REQUIRE(sol.first_integral_drift < 1e-6);

    // Unit-speed parametrization: duration equals length and the speed
    // invariant holds along the samples.
    const GeodesicSolution unit = solve_geodesic(model_ii_metric, model_ii_metric_prime,
                                                 theta_i, theta_f, 0.0, sol.length);
    REQUIRE(unit.duration == Catch::Approx(unit.tau_f - unit.tau_i).margin(1e-8));
    for (const GeodesicSample& s : unit.samples)
        REQUIRE(std::sqrt(model_ii_metric(s.theta)) * s.theta_dot ==
                Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("solve_geodesic with a unit metric is a straight line") {
    const GeodesicSolution sol =
        solve_geodesic([](double) { return 1.0; }, zero, 0.0, 0.5, 0.0, 0.5);
    REQUIRE(sol.duration == Catch::Approx(0.5).margin(1e-10));
    REQUIRE(sol.samples[50].theta == Catch::Approx(0.25).margin(1e-9));
}

TEST_CASE("solve_geodesic validates its inputs") {
    REQUIRE_THROWS_AS(solve_geodesic(constant_four, zero, 0.6, 0.1, 0.0, 1.0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(solve_geodesic(constant_four, zero, 0.1, 0.6, 1.0, 1.0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(solve_geodesic([](double) { return -1.0; }, zero, 0.0, 1.0, 0.0, 1.0),
                      std::domain_error);
}

TEST_CASE("geodesic_length rejects a divergent integrand with a diagnostic") {
    REQUIRE_THROWS_AS(geodesic_length(model_ii_metric, 0.0, 1.0), numerical_error);
}

TEST_CASE("solve_geodesic invariants hold for random smooth metrics") {
    std::mt19937 gen(0xfeedu);
    std::uniform_real_distribution<double> base(0.5, 3.0);
    std::uniform_real_distribution<double> wobble(0.0, 0.8);
    std::uniform_real_distribution<double> phase(0.0, 6.28);
    std::uniform_real_distribution<double> edge(0.0, 1.0);
    for (int trial = 0; trial < 12; ++trial) {
        const double c0 = base(gen), c1 = wobble(gen), d = phase(gen);
        auto metric = [=](double t) { return c0 + c1 * std::sin(t + d); };
        auto metric_prime = [=](double t) { return c1 * std::cos(t + d); };
        const double lo = edge(gen);
        const double hi = lo + 0.3 + edge(gen);
        const GeodesicSolution sol =
            solve_geodesic(metric, metric_prime, lo, hi, 0.0, 1.0, 41);

        REQUIRE(sol.samples.front().theta == Catch::Approx(lo).margin(1e-9));
        REQUIRE(sol.samples.back().theta == Catch::Approx(hi).margin(1e-9));
        REQUIRE(sol.duration == Catch::Approx(sol.length).margin(1e-8));
        REQUIRE(sol.first_integral_drift < 1e-6);
        REQUIRE(sol.rk4_deviation < 1e-6);
        for (std::size_t i = 1; i < sol.samples.size(); ++i)
            REQUIRE(sol.samples[i].theta > sol.samples[i - 1].theta);
    }
}

TEST_CASE("geodesic_length closed values") {
    REQUIRE(geodesic_length(constant_four, 0.0, 0.5) == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(geodesic_length(model_ii_metric, 0.0, 0.5) ==
            Catch::Approx(std::numbers::pi / 3.0).margin(1e-10));
    REQUIRE(geodesic_length(constant_four, 0.3, 0.3) == 0.0);
}

TEST_CASE("geodesic_length is additive over interior split points") {
    for (double mid : {0.1, 0.25, 0.4}) {
        const double whole = geodesic_length(model_ii_metric, 0.05, 0.45);
        const double split = geodesic_length(model_ii_metric, 0.05, mid) +
                             geodesic_length(model_ii_metric, mid, 0.45);
        REQUIRE(split == Catch::Approx(whole).margin(1e-9));
    }
}

TEST_CASE("Grover length never exceeds the quadratic model length") {
    for (int i = 0; i < 20; ++i) {
        for (int j = i + 1; j < 20; ++j) {
            const double lo = 0.999 * i / 19.0;
            const double hi = 0.999 * j / 19.0;
            REQUIRE(geodesic_length(constant_four, lo, hi) <=
                    geodesic_length(model_ii_metric, lo, hi) + 1e-12);
        }
    }
}

TEST_CASE("duration gap follows the cubic law") {
    const double gap_01 = duration_gap(0.1);
    REQUIRE(gap_01 == Catch::Approx(2.0 * (std::asin(0.1) - 0.1)).margin(1e-10));
    REQUIRE(gap_01 / (0.001 / 3.0) == Catch::Approx(1.0).epsilon(0.01));

    const double gap_03 = duration_gap(0.3);
    REQUIRE(gap_03 == Catch::Approx(9.386e-3).epsilon(1e-3));
    REQUIRE(gap_03 / (0.027 / 3.0) == Catch::Approx(1.0).epsilon(0.05));

    REQUIRE(duration_gap(1e-6) < 1e-15);
    REQUIRE_THROWS_AS(duration_gap(1.0), std::domain_error);
    REQUIRE_THROWS_AS(duration_gap(0.0), std::domain_error);
}

TEST_CASE("elliptic integral reduces to arcsin at N = 2") {
    REQUIRE(elliptic_I_N(0.0, 2).value == 0.0);
    REQUIRE(elliptic_I_N(0.5, 2).value ==
            Catch::Approx(std::numbers::pi / 6.0).margin(1e-10));
    for (int i = 0; i < 10; ++i) {
        const double q0 = 0.1 * i;
        REQUIRE(std::abs(elliptic_I_N(q0, 2).value - std::asin(q0)) < 1e-9);
    }
    REQUIRE_THROWS_AS(elliptic_I_N(1.0, 2), std::domain_error);
    REQUIRE_THROWS_AS(elliptic_I_N(-0.1, 2), std::domain_error);
}

TEST_CASE("elliptic integral is monotone and differentiates to its integrand") {
    double previous = -1.0;
    for (int i = 0; i <= 9; ++i) {
        const double q0 = 0.1 * i;
        const double value = elliptic_I_N(q0, 5).value;
        REQUIRE(value > previous);
        previous = value;
    }
    // d/dq0 at q0 = 0.9, N = 5 against the raw integrand.
    const double h = 1e-5;
    const double fd =
        (elliptic_I_N(0.9 + h, 5).value - elliptic_I_N(0.9 - h, 5).value) / (2.0 * h);
    const double w = 1.0 - 0.81;
    const double a = 4.0 * w + 0.81;
    const double integrand = 1.0 / (std::sqrt(w) * a * std::sqrt(a));
    REQUIRE(fd == Catch::Approx(integrand).margin(1e-6));
}

TEST_CASE("the transcribed closed form agrees with the quadrature definition") {
    for (std::int64_t n : {2, 3, 5, 10, 64}) {
        for (double q0 : {0.1, 0.5, 0.9, 0.99}) {
            REQUIRE(elliptic_I_N(q0, n).value ==
                    Catch::Approx(elliptic_I_N_closed_form(q0, n)).margin(1e-8));
        }
    }
}

TEST_CASE("solve_model_iv reproduces the N = 2 closed solution") {
    const std::vector<double> grid = uniform_grid(Interval{0.05, 1.5}, 30);
    const std::vector<double> plain = solve_model_iv(2, 0.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        REQUIRE(plain[i] == Catch::Approx(std::sin(grid[i])).margin(1e-8));

    const std::vector<double> shifted_grid = uniform_grid(Interval{0.01, 0.7}, 20);
    const std::vector<double> shifted =
        solve_model_iv(2, std::numbers::pi / 4.0, shifted_grid);
    for (std::size_t i = 0; i < shifted_grid.size(); ++i)
        REQUIRE(shifted[i] ==
                Catch::Approx(std::sin(shifted_grid[i] + std::numbers::pi / 4.0))
                    .margin(1e-8));
}

TEST_CASE("solve_model_iv closure: the solved path obeys the first-order equation") {
    const double h = 1e-3;
    for (double theta : {0.2, 0.7, 1.2}) {
        const std::vector<double> q = solve_model_iv(2, 0.0, {theta - h, theta, theta + h});
        const double q_dot = (q[2] - q[0]) / (2.0 * h);
        REQUIRE(std::abs(q_dot - std::sqrt(1.0 - q[1] * q[1])) < 1e-6);
    }
}

TEST_CASE("solve_model_iv boundary behaviour") {
    REQUIRE(solve_model_iv(4, 0.0, {0.0})[0] == Catch::Approx(0.0).margin(1e-10));
    // theta/sqrt(N-1) beyond the range of I_N is rejected with a diagnostic.
    REQUIRE_THROWS_AS(solve_model_iv(2, 0.0, {1.65}), std::domain_error);
    REQUIRE_THROWS_AS(solve_model_iv(2, -0.5, {0.1}), std::domain_error);
    // For N > 2 the range of I_N is finite and small.
    REQUIRE_THROWS_AS(solve_model_iv(5, 0.0, {2.0}), std::domain_error);
}

TEST_CASE("the residual of the second amplitude equation stays small at N = 2") {
    // Appendix machinery solves the q0 equation; the rest-component equation
    // is then checked a posteriori through the full system residuals.
    const double h = 1e-3;
    for (double theta : {0.3, 0.8}) {
        const std::vector<double> q = solve_model_iv(2, 0.2, {theta - h, theta, theta + h});
        const double q_dot = (q[2] - q[0]) / (2.0 * h);
        const double q_ddot = (q[2] - 2.0 * q[1] + q[0]) / (h * h);
        const ModelIvResidual r = model_iv_el_system(2, q[1], q_dot, q_ddot);
        REQUIRE(std::abs(r.target) < 1e-5);
        REQUIRE(std::abs(r.rest) < 1e-5);
    }
}
