// One-parameter geodesics for metrics g11(theta) = F(theta): arc-length
// quadrature with monotone inversion, an independent RK4 cross-check, path
// lengths and durations, and the elliptic-integral machinery for the
// actual-but-parametric-dependent path family.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qig/common.hpp"
#include "qig/quadrature.hpp"

namespace qig {

enum class GeodesicMethod { closed_form, quadrature, rk4 };

struct GeodesicSample {
    double tau;
    double theta;
    double theta_dot;
};

struct GeodesicSolution {
    double theta_i = 0.0, theta_f = 0.0;
    double tau_i = 0.0, tau_f = 0.0;
    std::vector<GeodesicSample> samples;
    double length = 0.0;    // integral of sqrt(F) over [theta_i, theta_f]
    double length_error_estimate = 0.0;
    double duration = 0.0;  // tau span of the unit-speed parametrization
    GeodesicMethod method = GeodesicMethod::quadrature;
    // Cross-check diagnostics.
    double rk4_deviation = 0.0;         // sup |theta_rk4 - theta| at samples
    double first_integral_drift = 0.0;  // max relative drift of sqrt(F) dtheta/dtau
};

namespace detail {

inline std::function<double(double)> sqrt_metric(const std::function<double(double)>& f) {
    return [f](double theta) {
        const double value = f(theta);
        require_in_domain(value > 0.0, "geodesic: F must be positive on the interval");
        return std::sqrt(value);
    };
}

}  // namespace detail

// Length of the curve from theta_i to theta_f: integral of sqrt(F).
inline double geodesic_length(const std::function<double(double)>& f, double theta_i,
                              double theta_f, double abs_tol = 1e-10) {
    require(theta_i <= theta_f, "geodesic_length: reversed interval");
    if (theta_i == theta_f) return 0.0;
    return integrate(detail::sqrt_metric(f), theta_i, theta_f, abs_tol).value;
}

// Boundary-value geodesic for g11 = F(theta). The 1-D geodesic equation
// theta'' + (F'/2F) theta'^2 = 0 reduces exactly to the first integral
// sqrt(F) dtheta/dtau = const, so tau(theta) is obtained by quadrature of
// sqrt(F) and inverted by safeguarded Newton. An RK4 integration of the
// second-order equation is run as an independent check of both the samples
// and the first-integral conservation.
inline GeodesicSolution solve_geodesic(const std::function<double(double)>& f,
                                       const std::function<double(double)>& f_prime,
                                       double theta_i, double theta_f, double tau_i,
                                       double tau_f, int sample_count = 101) {
    require(theta_i < theta_f, "solve_geodesic: theta_i must be below theta_f");
    require(tau_i < tau_f, "solve_geodesic: tau_i must be below tau_f");
    require(sample_count >= 2, "solve_geodesic: need at least 2 samples");

    const auto speed = detail::sqrt_metric(f);

    GeodesicSolution solution;
    solution.theta_i = theta_i;
    solution.theta_f = theta_f;
    solution.tau_i = tau_i;
    solution.tau_f = tau_f;
    solution.method = GeodesicMethod::quadrature;
    const QuadratureResult length_quad = integrate(speed, theta_i, theta_f, 1e-10);
    solution.length = length_quad.value;
    solution.length_error_estimate = length_quad.error_estimate;

    // Cumulative arc length on a knot grid, so inversion only ever integrates
    // within one knot interval.
    const int knots = std::max(4 * sample_count, 512);
    std::vector<double> knot_theta(static_cast<std::size_t>(knots) + 1);
    std::vector<double> knot_arc(static_cast<std::size_t>(knots) + 1, 0.0);
    for (int j = 0; j <= knots; ++j)
        knot_theta[static_cast<std::size_t>(j)] =
            theta_i + (theta_f - theta_i) * j / knots;
    const double piece_tol = 1e-10 / knots;
    for (int j = 1; j <= knots; ++j) {
        const std::size_t jj = static_cast<std::size_t>(j);
        knot_arc[jj] = knot_arc[jj - 1] +
                       integrate(speed, knot_theta[jj - 1], knot_theta[jj], piece_tol).value;
    }
    solution.duration = knot_arc.back();

    // theta at a prescribed arc length, by safeguarded Newton within the
    // bracketing knot interval.
    auto theta_at_arc = [&](double arc) {
        if (arc <= 0.0) return theta_i;
        if (arc >= solution.duration) return theta_f;
        const auto upper = std::upper_bound(knot_arc.begin(), knot_arc.end(), arc);
        std::size_t j = static_cast<std::size_t>(upper - knot_arc.begin());
        if (j == 0) j = 1;
        if (j > static_cast<std::size_t>(knots)) j = static_cast<std::size_t>(knots);
        double lo = knot_theta[j - 1], hi = knot_theta[j];
        const double base = knot_arc[j - 1];
        double theta = 0.5 * (lo + hi);
        for (int iter = 0; iter < 80; ++iter) {
            const double g = base + integrate(speed, knot_theta[j - 1], theta, piece_tol).value - arc;
            if (g < 0.0)
                lo = theta;
            else
                hi = theta;
            if (hi - lo < 1e-13) break;
            const double newton = theta - g / speed(theta);
            theta = (newton > lo && newton < hi) ? newton : 0.5 * (lo + hi);
        }
        return theta;
    };

    const double rate = solution.duration / (tau_f - tau_i);  // d(arc)/d(tau)
    solution.samples.reserve(static_cast<std::size_t>(sample_count));
    for (int i = 0; i < sample_count; ++i) {
        const double tau = tau_i + (tau_f - tau_i) * i / (sample_count - 1);
        const double theta = theta_at_arc((tau - tau_i) * rate);
        solution.samples.push_back({tau, theta, rate / speed(theta)});
    }

    // Independent RK4 shot of theta'' = -(F'/2F) theta'^2 from the first
    // integral's initial speed.
    const int substeps = 40;
    const double dt = (tau_f - tau_i) / ((sample_count - 1) * substeps);
    double theta_rk = theta_i;
    double v_rk = rate / speed(theta_i);
    auto accel = [&](double theta, double v) {
        const double value = f(theta);
        return -0.5 * f_prime(theta) / value * v * v;
    };
    auto record = [&](int sample_index) {
        const double deviation =
            std::abs(theta_rk - solution.samples[static_cast<std::size_t>(sample_index)].theta);
        solution.rk4_deviation = std::max(solution.rk4_deviation, deviation);
        const double drift = std::abs(speed(theta_rk) * v_rk - rate) / rate;
        solution.first_integral_drift = std::max(solution.first_integral_drift, drift);
    };
    record(0);
    for (int i = 1; i < sample_count; ++i) {
        for (int s = 0; s < substeps; ++s) {
            const double k1t = v_rk, k1v = accel(theta_rk, v_rk);
            const double k2t = v_rk + 0.5 * dt * k1v,
                         k2v = accel(theta_rk + 0.5 * dt * k1t, v_rk + 0.5 * dt * k1v);
            const double k3t = v_rk + 0.5 * dt * k2v,
                         k3v = accel(theta_rk + 0.5 * dt * k2t, v_rk + 0.5 * dt * k2v);
            const double k4t = v_rk + dt * k3v,
                         k4v = accel(theta_rk + dt * k3t, v_rk + dt * k3v);
            theta_rk += dt / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
            v_rk += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        }
        record(i);
    }
    if (solution.rk4_deviation > 1e-6)
        throw numerical_error("solve_geodesic: quadrature and RK4 routes disagree");

    return solution;
}

// Difference of navigation durations between the quadratic deviation model
// and the Grover model over [0, epsilon], both at unit speed.
inline double duration_gap(double epsilon) {
    require_in_domain(epsilon > 0.0 && epsilon < 1.0,
                      "duration_gap: epsilon must lie in (0, 1)");
    const double grover = geodesic_length([](double) { return 4.0; }, 0.0, epsilon);
    const double deviated = geodesic_length(
        [](double theta) { return 4.0 / (1.0 - theta * theta); }, 0.0, epsilon);
    return deviated - grover;
}

struct EllipticResult {
    double q0 = 0.0;
    std::int64_t n_items = 2;
    double value = 0.0;
    double quadrature_error_estimate = 0.0;
};

// I_N(q0) = integral_0^q0 dq / [(1-q^2)^{1/2} ((N-1)(1-q^2) + q^2)^{3/2}].
inline EllipticResult elliptic_I_N(double q0, std::int64_t n_items,
                                   double abs_tol = 1e-10) {
    require(n_items >= 2, "N must be >= 2");
    require_in_domain(q0 >= 0.0 && q0 < 1.0,
                      "elliptic_I_N: q0 must lie in [0, 1) (endpoint is singular)");
    const double n1 = static_cast<double>(n_items - 1);
    auto integrand = [n1](double q) {
        const double w = 1.0 - q * q;
        const double a = n1 * w + q * q;
        return 1.0 / (std::sqrt(w) * a * std::sqrt(a));
    };
    const QuadratureResult quad = integrate(integrand, 0.0, q0, abs_tol);
    return EllipticResult{q0, n_items, quad.value, quad.error_estimate};
}

// Transcription of the closed form in terms of the incomplete elliptic
// integral of the second kind E(phi|m), itself evaluated by quadrature.
// Kept as a cross-check; the direct quadrature above is the authoritative
// definition.
inline double elliptic_I_N_closed_form(double q0, std::int64_t n_items) {
    require(n_items >= 2, "N must be >= 2");
    require_in_domain(q0 >= 0.0 && q0 < 1.0, "elliptic closed form: q0 outside [0, 1)");
    const double n = static_cast<double>(n_items);
    const double m = (n - 2.0) / (n - 1.0);
    const double phi = std::asin(q0);
    const double second_kind =
        integrate([m](double t) { const double s = std::sin(t); return std::sqrt(1.0 - m * s * s); },
                  0.0, phi, 1e-12)
            .value;
    const double a = (n - 1.0) * (1.0 - q0 * q0) + q0 * q0;
    return second_kind / std::sqrt(n - 1.0) -
           (n - 2.0) * q0 * std::sqrt(1.0 - q0 * q0) / ((n - 1.0) * std::sqrt(a));
}

// Solves I_N(q0) = theta/sqrt(N-1) + c_n pointwise by bisection, using the
// monotonicity of I_N in q0.
inline std::vector<double> solve_model_iv(std::int64_t n_items, double c_n,
                                          const std::vector<double>& theta_grid) {
    require(n_items >= 2, "N must be >= 2");
    const double q_max = 1.0 - 1e-9;
    const double range_hi = elliptic_I_N(q_max, n_items).value;
    const double n1 = std::sqrt(static_cast<double>(n_items - 1));

    std::vector<double> samples;
    samples.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        const double rhs = theta / n1 + c_n;
        if (rhs < 0.0 || rhs > range_hi)
            throw std::domain_error(
                "solve_model_iv: theta/sqrt(N-1) + C_N = " + std::to_string(rhs) +
                " is outside the range [0, " + std::to_string(range_hi) +
                "] of I_N on [0, 1)");
        samples.push_back(bisect_increasing(
            [&](double q0) { return elliptic_I_N(q0, n_items).value - rhs; }, 0.0, q_max,
            1e-12));
    }
    return samples;
}

}  // namespace qig
