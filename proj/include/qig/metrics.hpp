// Monotone-metric machinery on density operators and pure states: the
// Wigner-Yanase inner product and its Chentsov-Morozova kernel, skew
// information, the heuristic quantum Fisher information, the Fubini-Study
// speed and the pure-state line element with phases.

#pragma once

#include <cmath>
#include <vector>

#include "qig/common.hpp"
#include "qig/families.hpp"
#include "qig/hermitian.hpp"

namespace qig {

// Eigenvalues at or below this floor exclude rho from the strictly positive
// manifold; pure-state geometry is served by wy_line_element instead.
constexpr double kPositiveSpectrumFloor = 1e-10;

// Kernel c(x, y) = 4 / (sqrt(x) + sqrt(y))^2 of the Wigner-Yanase metric.
// Symmetric, and equal to 1/x on the diagonal.
inline double cm_function_wy(double x, double y) {
    require_in_domain(x > 0.0 && y > 0.0, "cm_function_wy: arguments must be positive");
    const double s = std::sqrt(x) + std::sqrt(y);
    return 4.0 / (s * s);
}

// <D1, D2> = Tr[D1 . c(L_rho, R_rho)(D2)], evaluated entrywise in the
// eigenbasis of rho. Requires a strictly positive spectrum.
inline double wy_inner_product(const DensityOperator& rho, const TangentDirection& d1,
                               const TangentDirection& d2) {
    require(rho.dim() == d1.dim() && rho.dim() == d2.dim(),
            "wy_inner_product: dimension mismatch");
    const Spectrum spectrum = eigendecompose(rho.matrix());
    for (double lambda : spectrum.eigenvalues)
        require_in_domain(lambda > kPositiveSpectrumFloor,
                          "wy_inner_product: rho is not strictly positive; "
                          "use the pure-state line element for rank-deficient states");

    const Eigen::MatrixXcd& u = spectrum.eigenvectors;
    const Eigen::MatrixXcd d1_eig =
        u.adjoint() * DensityOperator::to_eigen(d1.matrix()) * u;
    const Eigen::MatrixXcd d2_eig =
        u.adjoint() * DensityOperator::to_eigen(d2.matrix()) * u;

    const Eigen::Index n = static_cast<Eigen::Index>(rho.dim());
    Complex sum{0.0, 0.0};
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
            const double kernel = cm_function_wy(spectrum.eigenvalues[static_cast<std::size_t>(j)],
                                                 spectrum.eigenvalues[static_cast<std::size_t>(k)]);
            sum += std::conj(d1_eig(j, k)) * kernel * d2_eig(j, k);
        }
    return sum.real();
}

// Skew information I(rho, D) = -1/2 Tr([sqrt(rho), D]^2). Defined for every
// PSD rho, pure states included.
inline double skew_information(const DensityOperator& rho, const HermitianMatrix& d) {
    require(rho.dim() == d.dim(), "skew_information: dimension mismatch");
    const HermitianMatrix root = matrix_sqrt_psd(rho.matrix());
    const std::vector<Complex> comm = commutator(root, d);
    // Tr(C^2) for anti-Hermitian C equals -sum |C_jk|^2.
    double frobenius_sq = 0.0;
    for (const Complex& c : comm) frobenius_sq += std::norm(c);
    return 0.5 * frobenius_sq;
}

// Heuristic quantum Fisher information I_F(rho_theta) = 4 Tr((d sqrt(rho)/d
// theta)^2), with the derivative taken by central differences of the PSD
// square root.
inline double quantum_fisher_wy(const DensityFamily& family, double theta,
                                double step = 1e-5) {
    require(step > 0.0, "quantum_fisher_wy: step must be positive");
    require_in_domain(family.domain.contains(theta - step) &&
                          family.domain.contains(theta + step),
                      "quantum_fisher_wy: theta +- step leaves the family domain");
    const HermitianMatrix hi = matrix_sqrt_psd(family.rho(theta + step).matrix());
    const HermitianMatrix lo = matrix_sqrt_psd(family.rho(theta - step).matrix());
    const std::size_t n = hi.dim();
    // Tr(A^2) = sum |A_jk|^2 for Hermitian A = d sqrt(rho)/d theta.
    double trace_sq = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            trace_sq += std::norm((hi(r, c) - lo(r, c)) / (2.0 * step));
    return 4.0 * trace_sq;
}

namespace detail {

struct LineElementTerms {
    double fisher = 0.0;          // sum dp^2 / p
    double phase_second = 0.0;    // sum p dphi^2
    double phase_mean = 0.0;      // sum p dphi
};

inline LineElementTerms line_element_terms(const PureStateFamily& family, double theta) {
    require_in_domain(family.domain.contains(theta),
                      "pure-state metric: theta outside the family domain");
    const std::vector<double> p = family.probabilities(theta);
    const std::vector<double> pd = family.probability_rates(theta);
    const std::vector<double> phid = family.phase_rates(theta);
    LineElementTerms terms;
    for (std::size_t k = 0; k < family.dim; ++k) {
        require_in_domain(p[k] > 0.0,
                          "pure-state metric: p_k vanished (singular chart)");
        terms.fisher += pd[k] * pd[k] / p[k];
        terms.phase_second += p[k] * phid[k] * phid[k];
        terms.phase_mean += p[k] * phid[k];
    }
    return terms;
}

}  // namespace detail

// ds^2_WY / dtheta^2 = sum dp^2/p + 4 [sum p dphi^2 - (sum p dphi)^2].
inline double wy_line_element(const PureStateFamily& family, double theta) {
    const auto terms = detail::line_element_terms(family, theta);
    return terms.fisher +
           4.0 * (terms.phase_second - terms.phase_mean * terms.phase_mean);
}

// Fubini-Study speed g_FS(theta) = ||dpsi||^2 - |<psi|dpsi>|^2, in the
// analytic modulus-phase form. Exactly one quarter of wy_line_element.
inline double fubini_study_speed(const PureStateFamily& family, double theta) {
    const auto terms = detail::line_element_terms(family, theta);
    return 0.25 * terms.fisher + terms.phase_second - terms.phase_mean * terms.phase_mean;
}

// Squared overlap |<psi(theta_a)|psi(theta_b)>|^2 of two family members.
inline double overlap_squared(const PureStateFamily& family, double theta_a,
                              double theta_b) {
    const std::vector<Complex> a = family.amplitudes(theta_a);
    const std::vector<Complex> b = family.amplitudes(theta_b);
    Complex inner{0.0, 0.0};
    for (std::size_t k = 0; k < family.dim; ++k) inner += std::conj(a[k]) * b[k];
    return std::norm(inner);
}

}  // namespace qig
