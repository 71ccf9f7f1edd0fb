// Parametric probability paths with one distinguished component and N-1
// identical ones: constructors for the Grover, quadratic and sinusoidal
// models, the Fisher information function, kinetic-energy decomposition and
// Euler-Lagrange actuality residuals in amplitude coordinates.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qig/common.hpp"
#include "qig/families.hpp"
#include "qig/metrics.hpp"

namespace qig {

using RealFn = std::function<double(double)>;

// Two-component path (p_0, shared p_kbar) with p_kbar = (1 - p_0)/(N - 1).
// Storing only p_0 and its derivatives keeps the representation O(1) in N.
struct SymmetricProbabilityPath {
    std::int64_t n_items = 2;
    std::string label;
    Interval domain;
    RealFn p0;
    RealFn p0_dot;
    RealFn p0_ddot;

    double rest_component(double theta) const {
        return (1.0 - p0(theta)) / static_cast<double>(n_items - 1);
    }
};

inline SymmetricProbabilityPath grover_path(std::int64_t n_items) {
    require(n_items >= 2, "N must be >= 2");
    return SymmetricProbabilityPath{
        n_items, "grover", Interval{0.0, std::numbers::pi / 2.0},
        [](double t) { const double s = std::sin(t); return s * s; },
        [](double t) { return std::sin(2.0 * t); },
        [](double t) { return 2.0 * std::cos(2.0 * t); }};
}

// p_0 = theta^2 on (0, 1): agrees with the Grover path to O(theta^4) but has
// a non-constant Fisher information function.
inline SymmetricProbabilityPath model_ii_path(std::int64_t n_items) {
    require(n_items >= 2, "N must be >= 2");
    return SymmetricProbabilityPath{n_items, "model2", Interval{0.0, 1.0},
                                    [](double t) { return t * t; },
                                    [](double t) { return 2.0 * t; },
                                    [](double) { return 2.0; }};
}

// p_0 = (1 + sin 2 theta)/2 on (-pi/4, pi/4): solves dp0^2 = 4 p0 (1 - p0)
// exactly, so F is constant.
inline SymmetricProbabilityPath model_iii_path(std::int64_t n_items) {
    require(n_items >= 2, "N must be >= 2");
    return SymmetricProbabilityPath{
        n_items, "model3", Interval{-std::numbers::pi / 4.0, std::numbers::pi / 4.0},
        [](double t) { return 0.5 * (1.0 + std::sin(2.0 * t)); },
        [](double t) { return std::cos(2.0 * t); },
        [](double t) { return -2.0 * std::sin(2.0 * t); }};
}

// Path from a bare p_0 with central-difference derivatives.
inline SymmetricProbabilityPath custom_path(std::int64_t n_items, RealFn p0,
                                            Interval domain, std::string label,
                                            double fd_step = 1e-6) {
    require(n_items >= 2, "N must be >= 2");
    auto dot = [p0, fd_step](double t) {
        return (p0(t + fd_step) - p0(t - fd_step)) / (2.0 * fd_step);
    };
    auto ddot = [p0, fd_step](double t) {
        return (p0(t + fd_step) - 2.0 * p0(t) + p0(t - fd_step)) / (fd_step * fd_step);
    };
    return SymmetricProbabilityPath{n_items, std::move(label), domain, std::move(p0),
                                    dot, ddot};
}

// F(theta) = sum dp_k^2 / p_k collapsed over the two components:
// dp0^2 / (p0 (1 - p0)). The (N-1) factors cancel, so F is N-independent.
inline double fisher_info_function(const SymmetricProbabilityPath& path, double theta) {
    const double p0 = path.p0(theta);
    require_in_domain(p0 > 0.0 && p0 < 1.0,
                      "fisher_info_function: p0 at the simplex boundary");
    const double dp0 = path.p0_dot(theta);
    return dp0 * dp0 / (p0 * (1.0 - p0));
}

// Expands the collapsed path into a full N-component pure-state family with
// zero phases. Intended for small N (tests, metric sweeps).
inline PureStateFamily to_family(const SymmetricProbabilityPath& path) {
    require(path.n_items <= (std::int64_t{1} << 20),
            "to_family: N too large to materialize");
    const std::size_t dim = static_cast<std::size_t>(path.n_items);
    const double scale = 1.0 / static_cast<double>(path.n_items - 1);
    auto p0 = path.p0;
    auto p0_dot = path.p0_dot;
    auto p = [dim, scale, p0](double t) {
        std::vector<double> out(dim, (1.0 - p0(t)) * scale);
        out[0] = p0(t);
        return out;
    };
    auto pd = [dim, scale, p0_dot](double t) {
        std::vector<double> out(dim, -p0_dot(t) * scale);
        out[0] = p0_dot(t);
        return out;
    };
    auto zero = [dim](double) { return std::vector<double>(dim, 0.0); };
    return make_pure_state_family(dim, path.domain, p, pd, zero, zero);
}

// Kinetic energy K = 1/4 F + sum_k p_k dphi_k^2 of a pure-state family.
inline double kinetic_energy(const PureStateFamily& family, double theta) {
    const auto terms = detail::line_element_terms(family, theta);
    return 0.25 * terms.fisher + terms.phase_second;
}

// Zero-phase collapsed form: K reduces to F/4.
inline double kinetic_energy(const SymmetricProbabilityPath& path, double theta) {
    return 0.25 * fisher_info_function(path, theta);
}

// Statistical current density J_theta(k) = dphi_k/dtheta, defined where
// p_k > 0.
inline double current_density(const PureStateFamily& family, double theta,
                              std::size_t component) {
    require(component < family.dim, "current_density: component out of range");
    require_in_domain(family.domain.contains(theta),
                      "current_density: theta outside the family domain");
    const double p = family.probabilities(theta)[component];
    require_in_domain(p > 0.0, "current_density: p_k vanished (J undefined)");
    return family.phase_rates(theta)[component];
}

// Euler-Lagrange residuals of the length action in amplitude coordinates
// q_k = sqrt(p_k), evaluated on a grid for a given multiplier lambda.
struct ActualityReport {
    std::vector<double> theta_grid;
    std::vector<double> residual_q0;
    std::vector<double> residual_qbar;
    double lambda = 1.0;
    double sup_norm = 0.0;
};

namespace detail {

struct AmplitudeState {
    double q, q_dot, q_ddot;
};

// q = sqrt(u) and its two theta-derivatives from u, du, ddu.
inline AmplitudeState amplitude_state(double u, double du, double ddu) {
    const double q = std::sqrt(u);
    const double q_dot = du / (2.0 * q);
    const double q_ddot = ddu / (2.0 * q) - du * du / (4.0 * u * q);
    return {q, q_dot, q_ddot};
}

}  // namespace detail

// Residual of q'' - (dL/L) q' + (lambda/2) L q per component, with
// L = sqrt(F). A path of vanishing L (stationary p) is rejected.
inline ActualityReport el_residual(const SymmetricProbabilityPath& path, double lambda,
                                   const std::vector<double>& theta_grid) {
    ActualityReport report;
    report.lambda = lambda;
    report.theta_grid = theta_grid;
    report.residual_q0.reserve(theta_grid.size());
    report.residual_qbar.reserve(theta_grid.size());

    const double n_minus_1 = static_cast<double>(path.n_items - 1);
    for (double theta : theta_grid) {
        require_in_domain(path.domain.contains(theta),
                          "el_residual: grid point outside the path domain");
        const double p0 = path.p0(theta);
        require_in_domain(p0 > 0.0 && p0 < 1.0,
                          "el_residual: p0 at the simplex boundary");
        const double dp0 = path.p0_dot(theta);
        const double ddp0 = path.p0_ddot(theta);

        const double fisher = dp0 * dp0 / (p0 * (1.0 - p0));
        require_in_domain(fisher > 0.0,
                          "el_residual: stationary path (L = 0) has no "
                          "arc-length parametrization");
        const double lagrangian = std::sqrt(fisher);
        // dL/dtheta = F' / (2 sqrt(F)) with
        // F' = (2 dp0 ddp0 p0(1-p0) - dp0^3 (1 - 2 p0)) / (p0(1-p0))^2.
        const double pq = p0 * (1.0 - p0);
        const double fisher_prime =
            (2.0 * dp0 * ddp0 * pq - dp0 * dp0 * dp0 * (1.0 - 2.0 * p0)) / (pq * pq);
        const double lagrangian_dot = fisher_prime / (2.0 * lagrangian);

        const auto q0 = detail::amplitude_state(p0, dp0, ddp0);
        const auto qbar = detail::amplitude_state((1.0 - p0) / n_minus_1,
                                                  -dp0 / n_minus_1, -ddp0 / n_minus_1);

        auto residual = [&](const detail::AmplitudeState& q) {
            return q.q_ddot - (lagrangian_dot / lagrangian) * q.q_dot +
                   0.5 * lambda * lagrangian * q.q;
        };
        const double r0 = residual(q0);
        const double rbar = residual(qbar);
        report.residual_q0.push_back(r0);
        report.residual_qbar.push_back(rbar);
        report.sup_norm = std::max({report.sup_norm, std::abs(r0), std::abs(rbar)});
    }
    return report;
}

// Residuals of the coupled amplitude system for a two-component path without
// assuming constant L: the q_kbar data follow from normalization, and
// L, dL are the closed normalization-eliminated forms.
struct ModelIvResidual {
    double target;  // q0 equation
    double rest;    // q_kbar equation
};

inline ModelIvResidual model_iv_el_system(std::int64_t n_items, double q0, double q0_dot,
                                          double q0_ddot) {
    require(n_items >= 2, "N must be >= 2");
    require_in_domain(q0 > 0.0 && q0 < 1.0, "model_iv_el_system: q0 at the boundary");
    const double n1 = static_cast<double>(n_items - 1);
    const double w = 1.0 - q0 * q0;
    const double a = n1 * w + q0 * q0;  // (N-1)(1 - q0^2) + q0^2

    const double lagrangian = 2.0 * q0_dot * std::sqrt(a / (n1 * w));
    require_in_domain(lagrangian != 0.0, "model_iv_el_system: stationary point (L = 0)");
    const double lagrangian_dot =
        2.0 * q0_ddot * std::sqrt(a / (n1 * w)) +
        2.0 * q0 * q0_dot * q0_dot / (n1 * w * w) * std::sqrt(n1 * w / a);

    // Rest amplitude and derivatives from q_kbar = sqrt((1 - q0^2)/(N-1)).
    const double qbar = std::sqrt(w / n1);
    const double qbar_dot = -q0 * q0_dot / std::sqrt(n1 * w);
    const double qbar_ddot = -(q0_dot * q0_dot + q0 * q0_ddot) / std::sqrt(n1 * w) -
                             n1 * q0 * q0 * q0_dot * q0_dot / std::pow(n1 * w, 1.5);

    const double ratio = lagrangian_dot / lagrangian;
    return ModelIvResidual{q0_ddot - ratio * q0_dot + 0.5 * lagrangian * q0,
                           qbar_ddot - ratio * qbar_dot + 0.5 * lagrangian * qbar};
}

// Uniform grid spanning an interval, endpoints included.
inline std::vector<double> uniform_grid(Interval interval, int points) {
    require(points >= 2, "uniform_grid: points must be >= 2");
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] =
            interval.lo + interval.width() * i / (points - 1);
    return grid;
}

}  // namespace qig
