#include "qswap/separability.hpp"

#include <cmath>
#include <numeric>

#include "qswap/error.hpp"

namespace qswap {

linalg::RealMatrix BlochMatrix::full() const {
    const auto n = t.rows() + 1;
    linalg::RealMatrix out = linalg::RealMatrix::Zero(n, n);
    out(0, 0) = c;
    out.bottomRightCorner(t.rows(), t.cols()) = t;
    return out;
}

BlochMatrix bloch_matrix(const DensityMatrix& rho, double c_value) {
    const auto d = rho.bipartite_dimension();
    const auto generators = gellmann_generators(d);
    const auto m = static_cast<Eigen::Index>(generators.size());

    // tr(rho (A (x) B)) = sum_{ij,kl} rho[(k,l),(i,j)] A[i,k] B[j,l]; contract through the
    // d x d blocks of rho to avoid building d^2 x d^2 products.
    const auto n = static_cast<Eigen::Index>(d);
    std::vector<ComplexMatrix> partial(generators.size());
    for (std::size_t a = 0; a < generators.size(); ++a) {
        // partial[a](l, j) = sum_{i,k} A[i,k] rho[(k,l),(i,j)]
        ComplexMatrix acc = ComplexMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index k = 0; k < n; ++k) {
                const auto coeff = generators[a](i, k);
                if (coeff == linalg::Complex{0.0, 0.0}) continue;
                acc += coeff * rho.matrix().block(k * n, i * n, n, n);
            }
        }
        partial[a] = std::move(acc);
    }

    BlochMatrix out;
    out.c = c_value;
    out.t.resize(m, m);
    for (Eigen::Index a = 0; a < m; ++a) {
        for (Eigen::Index b = 0; b < m; ++b) {
            // B = l_b^t, so B[j,l] = l_b[l,j] and the contraction is sum_{l,j} partial(l,j) l_b(l,j).
            const linalg::Complex value =
                partial[static_cast<std::size_t>(a)].cwiseProduct(generators[static_cast<std::size_t>(b)]).sum();
            out.t(a, b) = value.real();
        }
    }
    return out;
}

double kyfan_excess(const DensityMatrix& rho, double c_value) {
    const auto bloch = bloch_matrix(rho, c_value);
    const auto sv = linalg::singular_values(bloch.t);
    return std::abs(bloch.c) + std::accumulate(sv.begin(), sv.end(), 0.0) - 1.0;
}

WitnessVerdict realignment_witness(const DensityMatrix& rho, double tolerance) {
    static_cast<void>(rho.bipartite_dimension());
    const double norm = linalg::trace_norm(linalg::realign(rho.matrix(), rho.dims()));
    WitnessVerdict out;
    out.excess = norm - 1.0;
    out.entangled = out.excess > tolerance;
    return out;
}

}  // namespace qswap
