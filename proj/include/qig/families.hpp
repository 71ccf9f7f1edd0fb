// Parametric families of quantum states: theta -> (probabilities, phases)
// for pure states, and theta -> density operator for mixed ones.

#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "qig/common.hpp"
#include "qig/hermitian.hpp"

namespace qig {

using RealVectorFn = std::function<std::vector<double>(double)>;

// Pure-state family |psi(theta)> = sum_k sqrt(p_k) e^{i phi_k} |k>, described
// through the modulus-phase data (p_k, phi_k) and their theta-derivatives.
struct PureStateFamily {
    std::size_t dim = 0;
    Interval domain;
    RealVectorFn probabilities;       // p(theta), length dim
    RealVectorFn probability_rates;   // dp/dtheta
    RealVectorFn phases;              // phi(theta), radians
    RealVectorFn phase_rates;         // dphi/dtheta

    std::vector<Complex> amplitudes(double theta) const {
        const std::vector<double> p = probabilities(theta);
        const std::vector<double> phi = phases(theta);
        std::vector<Complex> psi(dim);
        for (std::size_t k = 0; k < dim; ++k)
            psi[k] = std::sqrt(std::max(p[k], 0.0)) * std::exp(Complex{0.0, phi[k]});
        return psi;
    }
};

struct DensityFamily {
    Interval domain;
    std::function<DensityOperator(double)> rho;
};

// Central-difference fallback for families specified without analytic rates.
inline RealVectorFn central_difference(RealVectorFn f, double step = 1e-6) {
    return [f = std::move(f), step](double theta) {
        std::vector<double> hi = f(theta + step);
        const std::vector<double> lo = f(theta - step);
        for (std::size_t k = 0; k < hi.size(); ++k) hi[k] = (hi[k] - lo[k]) / (2.0 * step);
        return hi;
    };
}

// Checks the family invariants (sum p = 1, sum dp = 0, p >= 0) on a uniform
// grid over the trimmed domain.
inline void validate_family(const PureStateFamily& family, int samples = 33) {
    require(family.dim >= 1, "PureStateFamily: dim must be >= 1");
    require(family.domain.width() > 0.0, "PureStateFamily: empty domain");
    const Interval grid = family.domain.trimmed(1e-9 * family.domain.width());
    for (int i = 0; i < samples; ++i) {
        const double theta = grid.lo + grid.width() * i / (samples - 1);
        const std::vector<double> p = family.probabilities(theta);
        const std::vector<double> pd = family.probability_rates(theta);
        require(p.size() == family.dim && pd.size() == family.dim,
                "PureStateFamily: vector length does not match dim");
        double sum_p = 0.0, sum_pd = 0.0;
        for (std::size_t k = 0; k < family.dim; ++k) {
            require_in_domain(p[k] >= 0.0, "PureStateFamily: negative probability");
            sum_p += p[k];
            sum_pd += pd[k];
        }
        require_in_domain(std::abs(sum_p - 1.0) <= 1e-10,
                          "PureStateFamily: probabilities do not sum to 1");
        require_in_domain(std::abs(sum_pd) <= 1e-8,
                          "PureStateFamily: probability rates do not sum to 0");
    }
}

inline PureStateFamily make_pure_state_family(std::size_t dim, Interval domain,
                                              RealVectorFn probabilities,
                                              RealVectorFn probability_rates,
                                              RealVectorFn phases,
                                              RealVectorFn phase_rates) {
    PureStateFamily family{dim, domain, std::move(probabilities),
                           std::move(probability_rates), std::move(phases),
                           std::move(phase_rates)};
    validate_family(family);
    return family;
}

// Variant with numeric probability/phase rates.
inline PureStateFamily make_pure_state_family(std::size_t dim, Interval domain,
                                              RealVectorFn probabilities,
                                              RealVectorFn phases,
                                              double fd_step = 1e-6) {
    return make_pure_state_family(dim, domain, probabilities,
                                  central_difference(probabilities, fd_step), phases,
                                  central_difference(phases, fd_step));
}

// rho(theta) = |psi(theta)><psi(theta)| as a DensityFamily.
inline DensityFamily projector_family(const PureStateFamily& family) {
    return DensityFamily{family.domain, [family](double theta) {
                             const std::vector<Complex> psi = family.amplitudes(theta);
                             const std::size_t n = psi.size();
                             std::vector<Complex> entries(n * n);
                             for (std::size_t r = 0; r < n; ++r)
                                 for (std::size_t c = 0; c < n; ++c)
                                     entries[r * n + c] = psi[r] * std::conj(psi[c]);
                             return DensityOperator(HermitianMatrix(n, std::move(entries)));
                         }};
}

}  // namespace qig
