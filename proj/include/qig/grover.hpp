// Grover's search in the two-dimensional rotation picture, the continuous
// approximation of its probability path, and a dense statevector oracle used
// purely for cross-checking.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "qig/common.hpp"
#include "qig/families.hpp"

namespace qig {

// Rotation angle per iteration: alpha = 2 arcsin(1/sqrt(N)).
inline double grover_angle(std::int64_t n_items) {
    require(n_items >= 2, "N must be >= 2");
    return 2.0 * std::asin(1.0 / std::sqrt(static_cast<double>(n_items)));
}

struct GroverInstance {
    std::int64_t n_items;       // database size N
    std::int64_t target_index;  // marked item
    double alpha;               // rotation angle, sin(alpha/2) = 1/sqrt(N)

    GroverInstance(std::int64_t n, std::int64_t target)
        : n_items(n), target_index(target), alpha(grover_angle(n)) {
        require(target >= 0 && target < n, "GroverInstance: target out of range");
    }
};

// State after m iterations in the span of |target> and the uniform rest.
struct RotationState {
    std::int64_t steps;
    double amp_target;  // sin((m + 1/2) alpha)
    double amp_rest;    // cos((m + 1/2) alpha)

    double success_probability() const { return amp_target * amp_target; }
};

inline RotationState rotation_step(const GroverInstance& instance, std::int64_t m) {
    require(m >= 0, "rotation_step: m must be >= 0");
    const double angle = (static_cast<double>(m) + 0.5) * instance.alpha;
    return RotationState{m, std::sin(angle), std::cos(angle)};
}

inline double success_probability(std::int64_t n_items, std::int64_t m) {
    const double angle = (static_cast<double>(m) + 0.5) * grover_angle(n_items);
    const double s = std::sin(angle);
    return s * s;
}

// Step count maximizing the success probability: round(pi/(2 alpha) - 1/2),
// then nudged to whichever neighbor does strictly better.
inline std::int64_t optimal_steps(std::int64_t n_items) {
    const double alpha = grover_angle(n_items);
    std::int64_t m = static_cast<std::int64_t>(
        std::llround(std::numbers::pi / (2.0 * alpha) - 0.5));
    if (m < 0) m = 0;
    auto prob = [&](std::int64_t steps) { return success_probability(n_items, steps); };
    for (std::int64_t candidate : {m - 1, m + 1})
        if (candidate >= 0 && prob(candidate) > prob(m)) m = candidate;
    return m;
}

// Continuous-theta probability vector: p_0 = sin^2(theta), the rest share
// cos^2(theta)/(N-1). Amplitudes are sqrt(p_k) with zero phases.
inline std::vector<double> continuous_state(std::int64_t n_items, double theta) {
    require(n_items >= 2, "N must be >= 2");
    const double s = std::sin(theta);
    const double rest = std::cos(theta) * std::cos(theta) /
                        static_cast<double>(n_items - 1);
    std::vector<double> p(static_cast<std::size_t>(n_items), rest);
    p[0] = s * s;
    return p;
}

// The continuous Grover path as a pure-state family with analytic rates and
// zero phases, on theta in (0, pi/2).
inline PureStateFamily grover_family(std::int64_t n_items) {
    require(n_items >= 2, "N must be >= 2");
    const std::size_t dim = static_cast<std::size_t>(n_items);
    const double rest_scale = 1.0 / static_cast<double>(n_items - 1);
    auto p = [dim, rest_scale](double theta) {
        const double s = std::sin(theta);
        std::vector<double> out(dim, std::cos(theta) * std::cos(theta) * rest_scale);
        out[0] = s * s;
        return out;
    };
    auto pd = [dim, rest_scale](double theta) {
        const double d = std::sin(2.0 * theta);
        std::vector<double> out(dim, -d * rest_scale);
        out[0] = d;
        return out;
    };
    auto zero = [dim](double) { return std::vector<double>(dim, 0.0); };
    return make_pure_state_family(dim, Interval{0.0, std::numbers::pi / 2.0}, p, pd,
                                  zero, zero);
}

// Dense statevector simulation of m Grover iterations (sign-flip oracle then
// inversion about the mean). Returns the target-state probability.
inline double statevector_oracle(int n_qubits, std::int64_t target, std::int64_t m) {
    require(n_qubits >= 1 && n_qubits <= 12,
            "statevector_oracle: n_qubits must be in [1, 12]");
    require(m >= 0, "statevector_oracle: m must be >= 0");
    const std::size_t n = std::size_t{1} << n_qubits;
    require(target >= 0 && static_cast<std::size_t>(target) < n,
            "statevector_oracle: target out of range");

    std::vector<double> psi(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (std::int64_t step = 0; step < m; ++step) {
        psi[static_cast<std::size_t>(target)] = -psi[static_cast<std::size_t>(target)];
        double mean = 0.0;
        for (double a : psi) mean += a;
        mean /= static_cast<double>(n);
        for (double& a : psi) a = 2.0 * mean - a;
    }
    const double amp = psi[static_cast<std::size_t>(target)];
    return amp * amp;
}

}  // namespace qig
