#include "qswap/swap.hpp"

#include <cmath>
#include <sstream>

#include "qswap/error.hpp"

namespace qswap {

using linalg::Complex;

namespace {

std::size_t common_dimension(const SchmidtVector& p, const SchmidtVector& p2) {
    if (p.dimension() != p2.dimension()) {
        std::ostringstream os;
        os << "Schmidt vectors have different dimensions (" << p.dimension() << " vs " << p2.dimension() << ")";
        throw DimensionError(os.str());
    }
    return p.dimension();
}

std::string describe(WeylLabel label) {
    std::ostringstream os;
    os << "(" << label.u << ", " << label.v << ")";
    return os.str();
}

}  // namespace

const PureBipartiteState& PureSwapOutcome::ad_state() const {
    if (!state) {
        throw ZeroProbabilityBranch("branch " + describe(label) + " has zero probability and no state");
    }
    return *state;
}

const DensityMatrix& MixedSwapOutcome::ad_state() const {
    if (!state) {
        throw ZeroProbabilityBranch("branch " + describe(label) + " has zero probability and no state");
    }
    return *state;
}

double swap_normalization(const SchmidtVector& p, const SchmidtVector& p2, std::size_t v) {
    const auto d = common_dimension(p, p2);
    double total = 0.0;
    for (std::size_t l = 0; l < d; ++l) total += p[l] * p2[linalg::mod_add(l, v, d)];
    return total;
}

PureSwapOutcome swap_pure(const SchmidtVector& p, const SchmidtVector& p2, WeylLabel label) {
    const auto d = common_dimension(p, p2);
    require_label(d, label);

    PureSwapOutcome out;
    out.label = label;
    out.normalization = swap_normalization(p, p2, label.v);
    if (out.normalization < kZeroBranchThreshold) {
        return out;
    }
    out.probability = out.normalization / static_cast<double>(d);

    const auto n = static_cast<Eigen::Index>(d);
    const double inv_norm = 1.0 / std::sqrt(out.normalization);
    ComplexMatrix amp = ComplexMatrix::Zero(n, n);
    for (std::size_t l = 0; l < d; ++l) {
        const std::size_t partner = linalg::mod_add(l, label.v, d);
        // e^{-2 pi i l u / d}
        const Complex phase = std::conj(root_of_unity(d, l * label.u));
        amp(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(partner)) =
            std::sqrt(p[l] * p2[partner]) * inv_norm * phase;
    }
    out.state.emplace(std::move(amp));
    return out;
}

std::vector<PureSwapOutcome> swap_outcome_distribution(const SchmidtVector& p, const SchmidtVector& p2) {
    const auto d = common_dimension(p, p2);
    std::vector<PureSwapOutcome> out;
    out.reserve(d * d);
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t v = 0; v < d; ++v) out.push_back(swap_pure(p, p2, WeylLabel{u, v}));
    }
    return out;
}

MixedSwapOutcome swap_general(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd, WeylLabel label) {
    const auto d = rho_ab.bipartite_dimension();
    if (rho_cd.bipartite_dimension() != d) {
        throw DimensionError("swap_general: input pairs have different local dimensions");
    }
    require_label(d, label);

    const ComplexMatrix joint = linalg::kron(rho_ab.matrix(), rho_cd.matrix());

    // K = I_A (x) <Psi_uv|_BC (x) I_D, rows indexed (a, x), columns (a, b, c, x).
    const auto bell = generalized_bell(d, label).amplitudes();
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix contract = ComplexMatrix::Zero(n * n, n * n * n * n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index x = 0; x < n; ++x) {
            const Eigen::Index row = a * n + x;
            for (Eigen::Index b = 0; b < n; ++b) {
                for (Eigen::Index c = 0; c < n; ++c) {
                    const Eigen::Index col = ((a * n + b) * n + c) * n + x;
                    contract(row, col) = std::conj(bell(b, c));
                }
            }
        }
    }

    ComplexMatrix unnormalized = contract * joint * contract.adjoint();
    MixedSwapOutcome out;
    out.label = label;
    const double probability = unnormalized.trace().real();
    if (probability < kZeroBranchThreshold) {
        return out;
    }
    out.probability = probability;
    unnormalized /= probability;
    unnormalized = 0.5 * (unnormalized + unnormalized.adjoint()).eval();
    out.state.emplace(std::move(unnormalized), SubsystemDims{d, d});
    return out;
}

std::vector<MixedSwapOutcome> swap_general_distribution(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd) {
    const auto d = rho_ab.bipartite_dimension();
    std::vector<MixedSwapOutcome> out;
    out.reserve(d * d);
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t v = 0; v < d; ++v) out.push_back(swap_general(rho_ab, rho_cd, WeylLabel{u, v}));
    }
    return out;
}

IsotropicState swap_isotropic(const IsotropicState& s1, const IsotropicState& s2) {
    if (s1.dimension() != s2.dimension()) {
        throw DimensionError("swap_isotropic: links have different dimensions");
    }
    return IsotropicState(s1.dimension(), s1.visibility() * s2.visibility());
}

DensityMatrix canonicalize_outcome(const DensityMatrix& state, WeylLabel label) {
    const auto d = state.bipartite_dimension();
    require_label(d, label);
    const ComplexMatrix local = linalg::kron(linalg::identity(d), weyl(d, label));
    ComplexMatrix rotated = local * state.matrix() * local.adjoint();
    rotated = 0.5 * (rotated + rotated.adjoint()).eval();
    return DensityMatrix(std::move(rotated), state.dims());
}

}  // namespace qswap
