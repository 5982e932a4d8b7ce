#include "semigibbs/tensor_ops.hpp"

#include "semigibbs/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace semigibbs::tensor {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

double factorial(int n) {
    double r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

const Matrix& pauli(int mu) {
    static const std::array<Matrix, 4> sigma = [] {
        std::array<Matrix, 4> s;
        s[0] = Matrix::Identity(2, 2);
        s[1] = Matrix{{0, 1}, {1, 0}};
        s[2] = Matrix{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
        s[3] = Matrix{{1, 0}, {0, -1}};
        return s;
    }();
    return sigma.at(static_cast<std::size_t>(mu));
}

void add_pauli_string(Matrix& out, const std::array<std::uint8_t, 16>& mu, int sites,
                      Complex w) {
    const std::int64_t dim = ipow(2, sites);
    // sigma_1 and sigma_2 flip the site bit; sigma_2 and sigma_3 carry phases.
    std::int64_t flip = 0;
    for (int t = 0; t < sites; ++t)
        if (mu[t] == 1 || mu[t] == 2) flip |= (std::int64_t{1} << (sites - 1 - t));
    for (std::int64_t c = 0; c < dim; ++c) {
        const std::int64_t r = c ^ flip;
        Complex amp = w;
        for (int t = 0; t < sites; ++t) {
            const int bit = static_cast<int>((c >> (sites - 1 - t)) & 1);  // 0 = up
            switch (mu[t]) {
                case 0: case 1: break;
                case 2: amp *= bit ? Complex(0, -1) : Complex(0, 1); break;
                case 3: amp *= bit ? -1.0 : 1.0; break;
                default: throw std::invalid_argument("add_pauli_string: bad index");
            }
        }
        out(r, c) += amp;
    }
}

// --------------------------- permutation route ------------------------------

Matrix symmetrize_permutations(const Matrix& a, int sites) {
    const std::int64_t dim = ipow(2, sites);
    if (a.rows() != dim || a.cols() != dim)
        throw std::invalid_argument("symmetrize: matrix dim does not match 2^sites");

    std::vector<std::array<int, 8>> perms;
    std::array<int, 8> p{};
    std::iota(p.begin(), p.begin() + sites, 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + sites));

    const auto nperm = static_cast<std::int64_t>(perms.size());
    Matrix zero = Matrix::Zero(dim, dim);
    Matrix total = par::reduce_blocked(nperm, zero, [&](std::int64_t t) {
        const auto& pm = perms[static_cast<std::size_t>(t)];
        // P_pi moves site s to slot pm[s]; basis index map on bit strings.
        std::vector<std::int64_t> idx(static_cast<std::size_t>(dim));
        for (std::int64_t i = 0; i < dim; ++i) {
            std::int64_t j = 0;
            for (int s = 0; s < sites; ++s) {
                const std::int64_t bit = (i >> (sites - 1 - s)) & 1;
                j |= bit << (sites - 1 - pm[s]);
            }
            idx[static_cast<std::size_t>(i)] = j;
        }
        Matrix b(dim, dim);
        for (std::int64_t i = 0; i < dim; ++i)
            for (std::int64_t j = 0; j < dim; ++j)
                b(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]) = a(i, j);
        return b;
    });
    return total / factorial(sites);
}

// ------------------------- Pauli multiset route ------------------------------
//
// Decompose A = sum_s c_s sigma_s over Pauli strings via a per-site 4x4
// transform, average c_s over all strings sharing a site multiset, transform
// back. Exact; cost O(N 4^N).

namespace {

// Forward per-site map from matrix-unit entries (M00, M01, M10, M11) to Pauli
// coordinates (c_I, c_1, c_2, c_3), and its inverse.
void apply_axis_map(std::vector<Complex>& v, int sites, int axis, bool forward) {
    const std::int64_t n = ipow(4, sites);
    const std::int64_t stride = ipow(4, sites - 1 - axis);
    for (std::int64_t base = 0; base < n; ++base) {
        if ((base / stride) % 4 != 0) continue;
        Complex m0 = v[base], m1 = v[base + stride], m2 = v[base + 2 * stride],
                m3 = v[base + 3 * stride];
        Complex a, b, c, d;
        if (forward) {  // (M00,M01,M10,M11) -> c
            a = 0.5 * (m0 + m3);
            b = 0.5 * (m1 + m2);
            c = 0.5 * Complex(0, 1) * (m1 - m2);
            d = 0.5 * (m0 - m3);
        } else {  // c -> (M00,M01,M10,M11)
            a = m0 + m3;
            b = m1 - Complex(0, 1) * m2;
            c = m1 + Complex(0, 1) * m2;
            d = m0 - m3;
        }
        v[base] = a;
        v[base + stride] = b;
        v[base + 2 * stride] = c;
        v[base + 3 * stride] = d;
    }
}

}  // namespace

Matrix symmetrize_pauli_multiset(const Matrix& a, int sites) {
    const std::int64_t dim = ipow(2, sites);
    if (a.rows() != dim || a.cols() != dim)
        throw std::invalid_argument("symmetrize: matrix dim does not match 2^sites");
    const std::int64_t n4 = ipow(4, sites);

    // Pack (row, col) into per-site digit pairs s_t = 2*i_t + j_t.
    std::vector<Complex> v(static_cast<std::size_t>(n4));
    for (std::int64_t i = 0; i < dim; ++i)
        for (std::int64_t j = 0; j < dim; ++j) {
            std::int64_t idx = 0;
            for (int t = 0; t < sites; ++t) {
                const std::int64_t it = (i >> (sites - 1 - t)) & 1;
                const std::int64_t jt = (j >> (sites - 1 - t)) & 1;
                idx = idx * 4 + (2 * it + jt);
            }
            v[static_cast<std::size_t>(idx)] = a(i, j);
        }

    for (int t = 0; t < sites; ++t) apply_axis_map(v, sites, t, true);

    // Group-average coefficients over digit multisets (n_I, n_1, n_2, n_3).
    std::vector<int> key(static_cast<std::size_t>(n4));
    std::vector<Complex> sum;
    std::vector<std::int64_t> count;
    auto key_index = [](int n1, int n2, int n3) { return ((n1 * 13) + n2) * 13 + n3; };
    std::vector<int> key_slot(13 * 13 * 13, -1);
    for (std::int64_t s = 0; s < n4; ++s) {
        int cnt[4] = {0, 0, 0, 0};
        std::int64_t d = s;
        for (int t = 0; t < sites; ++t) {
            ++cnt[d % 4];
            d /= 4;
        }
        const int ki = key_index(cnt[1], cnt[2], cnt[3]);
        int slot = key_slot[static_cast<std::size_t>(ki)];
        if (slot < 0) {
            slot = static_cast<int>(sum.size());
            key_slot[static_cast<std::size_t>(ki)] = slot;
            sum.push_back(0.0);
            count.push_back(0);
        }
        key[static_cast<std::size_t>(s)] = slot;
        sum[static_cast<std::size_t>(slot)] += v[static_cast<std::size_t>(s)];
        ++count[static_cast<std::size_t>(slot)];
    }
    for (std::int64_t s = 0; s < n4; ++s) {
        const int slot = key[static_cast<std::size_t>(s)];
        v[static_cast<std::size_t>(s)] =
            sum[static_cast<std::size_t>(slot)] / static_cast<double>(count[static_cast<std::size_t>(slot)]);
    }

    for (int t = 0; t < sites; ++t) apply_axis_map(v, sites, t, false);

    Matrix out(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i)
        for (std::int64_t j = 0; j < dim; ++j) {
            std::int64_t idx = 0;
            for (int t = 0; t < sites; ++t) {
                const std::int64_t it = (i >> (sites - 1 - t)) & 1;
                const std::int64_t jt = (j >> (sites - 1 - t)) & 1;
                idx = idx * 4 + (2 * it + jt);
            }
            out(i, j) = v[static_cast<std::size_t>(idx)];
        }
    return out;
}

Matrix symmetrize(const Matrix& a, int sites) {
    if (sites < 1) throw std::invalid_argument("symmetrize: sites must be >= 1");
    if (sites > 12)
        throw std::invalid_argument(
            "symmetrize: capacity is sites <= 12; use the collective spin-sector path for "
            "permutation-invariant work at larger N");
    if (sites <= 8) return symmetrize_permutations(a, sites);
    return symmetrize_pauli_multiset(a, sites);
}

HermitianMatrix symmetrize(const HermitianMatrix& a, int sites) {
    return HermitianMatrix(symmetrize(a.mat(), sites));
}

HermitianMatrix embed_local(const HermitianMatrix& a, int sites_in, int sites_out) {
    if (sites_out < sites_in)
        throw std::invalid_argument("embed_local: target sites must be >= input sites");
    const std::int64_t dim_out = ipow(2, sites_out);
    if (dim_out > 4096)
        throw std::invalid_argument("embed_local: capacity is 2^N <= 4096");
    if (a.dim() != ipow(2, sites_in))
        throw std::invalid_argument("embed_local: matrix dim does not match 2^sites_in");
    Matrix padded = a.mat();
    if (sites_out > sites_in) {
        const std::int64_t pad = ipow(2, sites_out - sites_in);
        padded = kron(padded, Matrix::Identity(pad, pad));
    }
    return HermitianMatrix(symmetrize(padded, sites_out));
}

Matrix partial_trace_tail(const Matrix& a, int sites, int keep) {
    if (keep < 0 || keep > sites) throw std::invalid_argument("partial_trace_tail: bad keep");
    const std::int64_t dk = ipow(2, keep);
    const std::int64_t dt = ipow(2, sites - keep);
    if (a.rows() != dk * dt) throw std::invalid_argument("partial_trace_tail: dim mismatch");
    Matrix out = Matrix::Zero(dk, dk);
    for (std::int64_t i = 0; i < dk; ++i)
        for (std::int64_t j = 0; j < dk; ++j) {
            Complex acc = 0.0;
            for (std::int64_t t = 0; t < dt; ++t) acc += a(i * dt + t, j * dt + t);
            out(i, j) = acc;
        }
    return out;
}

core::DensityMatrix reduced_density(const core::DensityMatrix& rho, int sites, int keep) {
    const std::int64_t dim = ipow(2, sites);
    if (dim > 4096) throw std::invalid_argument("reduced_density: capacity is 2^N <= 4096");
    if (rho.dim() != dim) throw std::invalid_argument("reduced_density: dim mismatch");
    return core::DensityMatrix(HermitianMatrix(partial_trace_tail(rho.mat(), sites, keep)));
}

Matrix dicke_isometry(int sites) {
    const std::int64_t dim = ipow(2, sites);
    Matrix d = Matrix::Zero(dim, sites + 1);
    std::vector<double> norm(static_cast<std::size_t>(sites) + 1, 0.0);
    for (std::int64_t i = 0; i < dim; ++i) {
        int downs = 0;
        for (int t = 0; t < sites; ++t) downs += static_cast<int>((i >> t) & 1);
        d(i, downs) = 1.0;
        norm[static_cast<std::size_t>(downs)] += 1.0;
    }
    for (int m = 0; m <= sites; ++m) d.col(m) /= std::sqrt(norm[static_cast<std::size_t>(m)]);
    return d;
}

}  // namespace semigibbs::tensor
