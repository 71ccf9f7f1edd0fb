// Dense complex Hermitian linear algebra: eigendecomposition, PSD square
// roots, commutators and traces. Substrate for every density-operator
// computation in the library.

#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qig/common.hpp"

namespace qig {

using Complex = std::complex<double>;

constexpr double kHermitianTol = 1e-12;  // max ||M - M†|| entry allowed on construction
constexpr double kPsdClipTol = 1e-12;    // eigenvalues in [-clip, 0) are treated as 0

// Dense complex square matrix with Hermitian symmetry, row-major storage.
// Hermiticity is checked on construction and trusted afterwards.
class HermitianMatrix {
public:
    explicit HermitianMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
        require(dim >= 1, "HermitianMatrix: dim must be >= 1");
    }

    HermitianMatrix(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {
        require(dim >= 1, "HermitianMatrix: dim must be >= 1");
        require(entries_.size() == dim * dim,
                "HermitianMatrix: entry count does not match dim*dim");
        check_hermitian();
    }

    std::size_t dim() const { return dim_; }

    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    Complex& operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    Complex trace() const {
        Complex t{0.0, 0.0};
        for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
        return t;
    }

    static HermitianMatrix identity(std::size_t dim) {
        HermitianMatrix m(dim);
        for (std::size_t k = 0; k < dim; ++k) m(k, k) = Complex{1.0, 0.0};
        return m;
    }

    static HermitianMatrix diagonal(const std::vector<double>& values) {
        HermitianMatrix m(values.size());
        for (std::size_t k = 0; k < values.size(); ++k) m(k, k) = Complex{values[k], 0.0};
        return m;
    }

private:
    void check_hermitian() const {
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = j; k < dim_; ++k) {
                const Complex delta = (*this)(j, k) - std::conj((*this)(k, j));
                require(std::abs(delta) <= kHermitianTol,
                        "HermitianMatrix: input is not Hermitian within tolerance");
            }
        }
    }

    std::size_t dim_;
    std::vector<Complex> entries_;
};

// Hermitian, positive semidefinite, unit trace. Eigenvalues in
// [-kPsdClipTol, 0) are accepted (they are clipped wherever a spectrum is
// taken); anything more negative is rejected.
class DensityOperator {
public:
    explicit DensityOperator(HermitianMatrix matrix) : matrix_(std::move(matrix)) {
        require(std::abs(matrix_.trace() - Complex{1.0, 0.0}) <= kHermitianTol,
                "DensityOperator: trace must equal 1");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(matrix_),
                                                               Eigen::EigenvaluesOnly);
        require_in_domain(solver.eigenvalues().minCoeff() >= -kPsdClipTol,
                          "DensityOperator: matrix has a negative eigenvalue");
    }

    const HermitianMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }

    static Eigen::MatrixXcd to_eigen(const HermitianMatrix& m) {
        Eigen::MatrixXcd out(m.dim(), m.dim());
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
        return out;
    }

private:
    HermitianMatrix matrix_;
};

// Traceless Hermitian matrix: an element of the tangent space at a density
// operator.
class TangentDirection {
public:
    explicit TangentDirection(HermitianMatrix matrix) : matrix_(std::move(matrix)) {
        require(std::abs(matrix_.trace()) <= kHermitianTol,
                "TangentDirection: trace must equal 0");
    }

    const HermitianMatrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }

private:
    HermitianMatrix matrix_;
};

// Eigendecomposition result: ascending real eigenvalues and the unitary of
// eigenvector columns.
struct Spectrum {
    std::vector<double> eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors;     // column k pairs with eigenvalues[k]

    HermitianMatrix reconstruct() const {
        const std::size_t n = eigenvalues.size();
        Eigen::VectorXd lambda(n);
        for (std::size_t k = 0; k < n; ++k) lambda(static_cast<Eigen::Index>(k)) = eigenvalues[k];
        const Eigen::MatrixXcd m =
            eigenvectors * lambda.asDiagonal() * eigenvectors.adjoint();
        std::vector<Complex> entries(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                // Symmetrize away the last-bit asymmetry of the triple product.
                entries[r * n + c] =
                    0.5 * (m(r, c) + std::conj(m(c, r)));
            }
        return HermitianMatrix(n, std::move(entries));
    }
};

inline Spectrum eigendecompose(const HermitianMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(DensityOperator::to_eigen(m));
    if (solver.info() != Eigen::Success)
        throw numerical_error("eigendecompose: solver did not converge");
    Spectrum spectrum;
    spectrum.eigenvalues.assign(solver.eigenvalues().data(),
                                solver.eigenvalues().data() + m.dim());
    spectrum.eigenvectors = solver.eigenvectors();
    return spectrum;
}

// Principal square root of a PSD Hermitian matrix. Eigenvalues within
// kPsdClipTol of zero are clipped to zero (the square root is not Lipschitz
// there, so solver noise would otherwise blow up to sqrt-scale); anything
// below -kPsdClipTol is rejected.
inline HermitianMatrix matrix_sqrt_psd(const HermitianMatrix& m) {
    Spectrum spectrum = eigendecompose(m);
    std::vector<double> roots(spectrum.eigenvalues.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
        double lambda = spectrum.eigenvalues[k];
        require_in_domain(lambda >= -kPsdClipTol,
                          "matrix_sqrt_psd: matrix is not positive semidefinite");
        roots[k] = lambda > kPsdClipTol ? std::sqrt(lambda) : 0.0;
    }
    Spectrum root_spectrum{std::move(roots), spectrum.eigenvectors};
    return root_spectrum.reconstruct();
}

// AB - BA as a raw complex matrix (anti-Hermitian for Hermitian inputs).
inline std::vector<Complex> commutator(const HermitianMatrix& a, const HermitianMatrix& b) {
    require(a.dim() == b.dim(), "commutator: dimension mismatch");
    const std::size_t n = a.dim();
    std::vector<Complex> out(n * n, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Complex sum{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                sum += a(r, k) * b(k, c) - b(r, k) * a(k, c);
            out[r * n + c] = sum;
        }
    return out;
}

// i[A, B]: Hermitian and traceless for Hermitian A, B, so it lands in the
// tangent space.
inline TangentDirection commutator_direction(const HermitianMatrix& a,
                                             const HermitianMatrix& b) {
    const std::size_t n = a.dim();
    std::vector<Complex> raw = commutator(a, b);
    std::vector<Complex> entries(n * n);
    const Complex i_unit{0.0, 1.0};
    for (std::size_t k = 0; k < n * n; ++k) entries[k] = i_unit * raw[k];
    // Clean up rounding on the diagonal so the trace check is exact.
    for (std::size_t d = 0; d < n; ++d)
        entries[d * n + d] = Complex{entries[d * n + d].real(), 0.0};
    return TangentDirection(HermitianMatrix(n, std::move(entries)));
}

}  // namespace qig
