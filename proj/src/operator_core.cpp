#include "semigibbs/operator_core.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace semigibbs::core {

namespace {

double hermitian_defect(const Matrix& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

// ----------------------------- HermitianMatrix -----------------------------

HermitianMatrix::HermitianMatrix(Matrix a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("HermitianMatrix: matrix must be square, got " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    if (a.rows() == 0) throw std::invalid_argument("HermitianMatrix: empty matrix");
    const double defect = hermitian_defect(a);
    if (defect > 1e-8)
        throw std::invalid_argument("HermitianMatrix: ||A - A^dagger||_max = " +
                                    std::to_string(defect) + " exceeds 1e-8");
    mat_ = 0.5 * (a + a.adjoint().eval());
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
    return HermitianMatrix(Matrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index dim) {
    return HermitianMatrix(Matrix::Zero(dim, dim));
}

// ------------------------------ DensityMatrix ------------------------------

DensityMatrix::DensityMatrix(HermitianMatrix rho) : rho_(std::move(rho)) {
    const double tr = rho_.mat().trace().real();
    if (std::abs(tr - 1.0) > 1e-10)
        throw std::invalid_argument("DensityMatrix: |Tr - 1| = " + std::to_string(std::abs(tr - 1.0)));
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_.mat(), Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin < -1e-10)
        throw std::invalid_argument("DensityMatrix: smallest eigenvalue " + std::to_string(lmin) +
                                    " below -1e-10");
}

// ---------------------------------- eigh -----------------------------------

Spectrum eigh(const HermitianMatrix& a) {
    const Matrix& m = a.mat();
    Spectrum s;
    if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real());
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eigh: solver failed for real symmetric matrix of dim " +
                                     std::to_string(m.rows()));
        s.eigenvalues = es.eigenvalues();
        s.eigenvectors = es.eigenvectors().cast<Complex>();
    } else {
        Eigen::SelfAdjointEigenSolver<Matrix> es(m);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("eigh: solver failed for Hermitian matrix of dim " +
                                     std::to_string(m.rows()));
        s.eigenvalues = es.eigenvalues();
        s.eigenvectors = es.eigenvectors();
    }
    return s;
}

// ------------------------------ apply_function -----------------------------

HermitianMatrix apply_function(const HermitianMatrix& a,
                               const std::function<double(double)>& phi) {
    const Spectrum s = eigh(a);
    RealVector f(s.dim());
    for (Eigen::Index i = 0; i < s.dim(); ++i) {
        f[i] = phi(s.eigenvalues[i]);
        if (!std::isfinite(f[i]))
            throw std::overflow_error(
                "apply_function: phi overflows at eigenvalue " + std::to_string(s.eigenvalues[i]) +
                "; for Boltzmann weights use log_partition / gibbs_density instead");
    }
    Matrix out = s.eigenvectors * f.asDiagonal() * s.eigenvectors.adjoint();
    return HermitianMatrix(std::move(out));
}

// ------------------------------ log_partition ------------------------------

double log_partition(const Spectrum& spec, double beta) {
    if (beta <= 0) throw std::invalid_argument("log_partition: beta must be positive");
    const double lmin = spec.eigenvalues.minCoeff();
    double s = 0.0;
    for (Eigen::Index i = 0; i < spec.dim(); ++i)
        s += std::exp(-beta * (spec.eigenvalues[i] - lmin));
    return -beta * lmin + std::log(s);
}

double log_partition(const HermitianMatrix& a, double beta) {
    return log_partition(eigh(a), beta);
}

// ------------------------------ gibbs_density ------------------------------

DensityMatrix gibbs_density(const Spectrum& spec, double beta) {
    if (beta <= 0) throw std::invalid_argument("gibbs_density: beta must be positive");
    const double lmin = spec.eigenvalues.minCoeff();
    RealVector w(spec.dim());
    for (Eigen::Index i = 0; i < spec.dim(); ++i)
        w[i] = std::exp(-beta * (spec.eigenvalues[i] - lmin));
    w /= w.sum();
    Matrix rho = spec.eigenvectors * w.asDiagonal() * spec.eigenvectors.adjoint();
    return DensityMatrix(HermitianMatrix(std::move(rho)));
}

DensityMatrix gibbs_density(const HermitianMatrix& h, double beta) {
    return gibbs_density(eigh(h), beta);
}

// ---------------------------- gibbs_expectation ----------------------------

double gibbs_expectation(const Spectrum& spec, double beta, const HermitianMatrix& a) {
    if (spec.dim() != a.dim())
        throw std::invalid_argument("gibbs_expectation: dimension mismatch, " +
                                    std::to_string(spec.dim()) + " vs " + std::to_string(a.dim()));
    if (beta <= 0) throw std::invalid_argument("gibbs_expectation: beta must be positive");
    const double lmin = spec.eigenvalues.minCoeff();
    RealVector w(spec.dim());
    for (Eigen::Index i = 0; i < spec.dim(); ++i)
        w[i] = std::exp(-beta * (spec.eigenvalues[i] - lmin));
    w /= w.sum();
    const Matrix au = a.mat() * spec.eigenvectors;
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < spec.dim(); ++i)
        acc += w[i] * spec.eigenvectors.col(i).dot(au.col(i));
    if (std::abs(acc.imag()) > 1e-10)
        throw std::runtime_error("gibbs_expectation: imaginary residue " +
                                 std::to_string(acc.imag()));
    return acc.real();
}

double gibbs_expectation(const HermitianMatrix& h, double beta, const HermitianMatrix& a) {
    return gibbs_expectation(eigh(h), beta, a);
}

// --------------------------- von_neumann_entropy ---------------------------

double von_neumann_entropy(const DensityMatrix& rho) {
    const Spectrum s = eigh(rho.hermitian());
    double acc = 0.0;
    for (Eigen::Index i = 0; i < s.dim(); ++i) {
        const double p = s.eigenvalues[i];
        if (p < -1e-10)
            throw std::invalid_argument("von_neumann_entropy: eigenvalue " + std::to_string(p) +
                                        " below -1e-10");
        if (p <= 1e-14) continue;
        acc -= p * std::log(p);
    }
    return acc;
}

// ------------------------------ SpectrumCache ------------------------------

std::uint64_t matrix_content_hash(const Matrix& m) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](const unsigned char* p, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    };
    const auto rows = static_cast<std::uint64_t>(m.rows());
    mix(reinterpret_cast<const unsigned char*>(&rows), sizeof(rows));
    mix(reinterpret_cast<const unsigned char*>(m.data()),
        sizeof(Complex) * static_cast<std::size_t>(m.size()));
    return h;
}

std::shared_ptr<const Spectrum> SpectrumCache::get_or_compute(const HermitianMatrix& a) {
    const std::uint64_t key = matrix_content_hash(a.mat());
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    auto spec = std::make_shared<const Spectrum>(eigh(a));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.emplace(key, spec);
    return it->second;
}

std::size_t SpectrumCache::size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
}

}  // namespace semigibbs::core
