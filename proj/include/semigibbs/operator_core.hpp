// operator_core.hpp - dense Hermitian operators, spectra, Gibbs densities,
// stable log-partition functions and von Neumann entropy.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace semigibbs::core {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// ----------------------------- domain types --------------------------------

// Self-adjoint matrix. Construction symmetrizes (A + A†)/2 and rejects inputs
// whose defect ||A - A†||_max exceeds 1e-8; the stored operator satisfies the
// defect bound 1e-12.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(Matrix a);
    static HermitianMatrix identity(Eigen::Index dim);
    static HermitianMatrix zero(Eigen::Index dim);

    Eigen::Index dim() const { return mat_.rows(); }
    const Matrix& mat() const { return mat_; }

    double max_abs() const { return mat_.cwiseAbs().maxCoeff(); }

  private:
    Matrix mat_;
};

// Eigendecomposition A = U diag(λ) U†, eigenvalues ascending, U unitary to
// 1e-10 and reconstruction valid to 1e-9 * max(1, ||A||).
struct Spectrum {
    RealVector eigenvalues;
    Matrix eigenvectors;

    Eigen::Index dim() const { return eigenvalues.size(); }
};

// Unit-trace positive matrix; eigenvalues above -1e-10, |Tr - 1| <= 1e-10.
class DensityMatrix {
  public:
    explicit DensityMatrix(HermitianMatrix rho);

    Eigen::Index dim() const { return rho_.dim(); }
    const Matrix& mat() const { return rho_.mat(); }
    const HermitianMatrix& hermitian() const { return rho_; }

  private:
    HermitianMatrix rho_;
};

// ------------------------------ operations ---------------------------------

// Dense self-adjoint eigendecomposition. Real-symmetric inputs take a faster
// real path; the result is identical up to solver round-off.
Spectrum eigh(const HermitianMatrix& a);

// U diag(φ(λ)) U†. Throws if φ overflows on the spectrum (use log_partition
// for Boltzmann weights at large ||βA||).
HermitianMatrix apply_function(const HermitianMatrix& a,
                               const std::function<double(double)>& phi);

// log Tr e^{-βA} evaluated as -βλ_min + log Σ e^{-β(λ-λ_min)}; safe for
// ||βA|| up to 1e4.
double log_partition(const HermitianMatrix& a, double beta);
double log_partition(const Spectrum& spec, double beta);

// e^{-βH} / Tr e^{-βH}.
DensityMatrix gibbs_density(const HermitianMatrix& h, double beta);
DensityMatrix gibbs_density(const Spectrum& spec, double beta);

// Tr(ρ_β A) with ρ_β the Gibbs density of h. Computed in the eigenbasis with
// shifted Boltzmann weights; never forms e^{-βH}.
double gibbs_expectation(const HermitianMatrix& h, double beta, const HermitianMatrix& a);
double gibbs_expectation(const Spectrum& spec, double beta, const HermitianMatrix& a);

// -Tr ρ log ρ with 0 log 0 = 0. Eigenvalues in [-1e-10, 1e-14] count as zero;
// anything below -1e-10 is rejected.
double von_neumann_entropy(const DensityMatrix& rho);

// ---------------------------- spectrum cache -------------------------------

// Content-addressed cache of eigendecompositions, shared across β sweeps.
// Thread-safe: concurrent lookup, single-writer insertion.
class SpectrumCache {
  public:
    std::shared_ptr<const Spectrum> get_or_compute(const HermitianMatrix& a);
    std::size_t size() const;

  private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, std::shared_ptr<const Spectrum>> map_;
};

// FNV-1a over the raw matrix payload, mixed with the dimension.
std::uint64_t matrix_content_hash(const Matrix& m);

}  // namespace semigibbs::core
