// tensor_ops.hpp - operators on qubit tensor powers (C^2)^{x N}: permutation
// symmetrization, local-term embedding, partial traces, Pauli strings.

#pragma once

#include "semigibbs/operator_core.hpp"

#include <array>
#include <cstdint>

namespace semigibbs::tensor {

using core::Complex;
using core::HermitianMatrix;
using core::Matrix;

// Site 0 is the leftmost (most significant) tensor factor; A ⊗ B carries the
// index i = i_A * dim(B) + i_B.
Matrix kron(const Matrix& a, const Matrix& b);

// Pauli matrices sigma_0 = I, sigma_1, sigma_2, sigma_3.
const Matrix& pauli(int mu);

// Adds w * sigma_{mu_0}(0) ... sigma_{mu_{N-1}}(N-1) to `out` (dim 2^N).
// Each Pauli string has one nonzero per column.
void add_pauli_string(Matrix& out, const std::array<std::uint8_t, 16>& mu, int sites,
                      Complex w);

// (1/N!) sum_pi P_pi A P_pi^{-1} over all N! site permutations.
// sites <= 8 enumerates the permutation group directly; 8 < sites <= 12 goes
// through the Pauli-coefficient transform and averages string coefficients
// over site multisets, which is exact for any input. Larger N is rejected
// with a pointer to the collective spin path.
Matrix symmetrize(const Matrix& a, int sites);
HermitianMatrix symmetrize(const HermitianMatrix& a, int sites);

// The two internal routes, exposed for cross-validation.
Matrix symmetrize_permutations(const Matrix& a, int sites);
Matrix symmetrize_pauli_multiset(const Matrix& a, int sites);

// S_{M,N}(A) = symmetrize(A ⊗ I^{(N-M)}); requires 2^N <= 4096.
HermitianMatrix embed_local(const HermitianMatrix& a, int sites_in, int sites_out);

// Partial trace over the trailing (N - keep) factors; keep = 0 gives a 1x1
// matrix holding Tr(rho) = 1.
core::DensityMatrix reduced_density(const core::DensityMatrix& rho, int sites, int keep);
Matrix partial_trace_tail(const Matrix& a, int sites, int keep);

// Dicke-basis isometry D: C^{N+1} -> (C^2)^{x N}; column m is the normalized
// sum of all basis states with m down spins.
Matrix dicke_isometry(int sites);

}  // namespace semigibbs::tensor
