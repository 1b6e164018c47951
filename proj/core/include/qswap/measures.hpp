#pragma once

#include <cstddef>
#include <vector>

#include "qswap/states.hpp"
#include "qswap/swap.hpp"

namespace qswap {

// Values this close to zero are treated as zero before entangled/separable comparisons.
inline constexpr double kZeroClamp = 1e-12;

/// Singlet fraction F = <Phi+|rho|Phi+>, restricted to [0, 1].
class FidelityValue {
public:
    explicit FidelityValue(double f);
    [[nodiscard]] double value() const noexcept { return f_; }

private:
    double f_;
};

/// I-concurrence sqrt(2 (1 - tr rho_A^2)) of a pure bipartite state.
[[nodiscard]] double iconcurrence_pure(const PureBipartiteState& state);

/// Normalized negativity (2/(d-1)) sum_{i<j} sqrt(p_i p_j) of a Schmidt-form state.
[[nodiscard]] double negativity_pure_schmidt(const SchmidtVector& p);

// Per-branch closed forms. They depend on v only; zero-probability branches throw ZeroProbabilityBranch.
[[nodiscard]] double iconcurrence_outcome(const SchmidtVector& p, const SchmidtVector& p2, std::size_t v);
[[nodiscard]] double negativity_outcome(const SchmidtVector& p, const SchmidtVector& p2, std::size_t v);

/// Measures of one swap branch. Branches that never occur report zero values and
/// `occurs == false`, so they drop out of probability-weighted averages.
struct BranchMeasures {
    WeylLabel label;
    double probability = 0.0;
    double iconcurrence = 0.0;
    double negativity = 0.0;
    bool occurs = false;
};

[[nodiscard]] std::vector<BranchMeasures> branch_measures(const SchmidtVector& p, const SchmidtVector& p2);

/// sqrt(2) sum_v sqrt(P_v^2 - sum_l (p_l p'_{l+v})^2).
[[nodiscard]] double avg_iconcurrence(const SchmidtVector& p, const SchmidtVector& p2);

/// (2/(d-1)) sum_v sum_{i<j} sqrt(p_i p'_{i+v} p_j p'_{j+v}).
[[nodiscard]] double avg_negativity(const SchmidtVector& p, const SchmidtVector& p2);

/// Normalized negativity (2/(d-1)) * |sum of negative eigenvalues| of the partial
/// transpose on the first subsystem of a d x d state.
///
/// Zero negativity does not imply separability in general (PPT-entangled states exist);
/// no bound-entanglement detection is attempted.
[[nodiscard]] double negativity_density(const DensityMatrix& rho);

[[nodiscard]] FidelityValue isotropic_fidelity(const IsotropicState& s);

/// Inverse of isotropic_fidelity for a given dimension.
[[nodiscard]] double visibility_from_fidelity(std::size_t d, FidelityValue f);

// Isotropic closed forms in terms of fidelity; both vanish for F <= 1/d.
[[nodiscard]] double iconcurrence_isotropic(std::size_t d, FidelityValue f);
[[nodiscard]] double negativity_isotropic(std::size_t d, FidelityValue f);

}  // namespace qswap
