#pragma once

#include <optional>
#include <vector>

#include "qswap/states.hpp"

namespace qswap {

// Branches whose probability falls below this carry probability 0 and no state.
inline constexpr double kZeroBranchThreshold = 1e-12;

/// One Bell-measurement branch of the pure Schmidt-form swap.
struct PureSwapOutcome {
    WeylLabel label;
    double probability = 0.0;
    // Sum_l p_l p'_{l+v}; the branch probability is this divided by d.
    double normalization = 0.0;
    std::optional<PureBipartiteState> state;

    [[nodiscard]] bool occurs() const noexcept { return state.has_value(); }
    // Throws ZeroProbabilityBranch when the branch never occurs.
    [[nodiscard]] const PureBipartiteState& ad_state() const;
};

/// One branch of the density-matrix swap; the state lives on (A, D).
struct MixedSwapOutcome {
    WeylLabel label;
    double probability = 0.0;
    std::optional<DensityMatrix> state;

    [[nodiscard]] bool occurs() const noexcept { return state.has_value(); }
    [[nodiscard]] const DensityMatrix& ad_state() const;
};

/// Sum_l p_l p'_{l+v}, independent of the phase label u.
[[nodiscard]] double swap_normalization(const SchmidtVector& p, const SchmidtVector& p2, std::size_t v);

/// Closed-form swap of sum sqrt(p_j)|jj>_AB and sum sqrt(p'_j)|jj>_CD after projecting
/// BC onto |Psi_uv>. The AD amplitude on |l>|l+v> is sqrt(p_l p'_{l+v}) e^{-2 pi i l u/d} / sqrt(P_uv).
[[nodiscard]] PureSwapOutcome swap_pure(const SchmidtVector& p, const SchmidtVector& p2, WeylLabel label);

/// All d^2 branches, ordered by (u, v) ascending.
[[nodiscard]] std::vector<PureSwapOutcome> swap_outcome_distribution(const SchmidtVector& p,
                                                                     const SchmidtVector& p2);

/// Brute-force swap on density matrices.
///
/// Subsystems are ordered A, B, C, D over rho_ab (x) rho_cd, flattened with A as the
/// most significant digit. The unnormalized AD state is tr_BC(Pi rho Pi) with
/// Pi = I_A (x) |Psi_uv><Psi_uv|_BC (x) I_D, evaluated as K rho K^dagger where
/// K = I_A (x) <Psi_uv|_BC (x) I_D; its trace is the branch probability.
[[nodiscard]] MixedSwapOutcome swap_general(const DensityMatrix& rho_ab, const DensityMatrix& rho_cd,
                                            WeylLabel label);

[[nodiscard]] std::vector<MixedSwapOutcome> swap_general_distribution(const DensityMatrix& rho_ab,
                                                                      const DensityMatrix& rho_cd);

/// Swapping two isotropic links yields an isotropic link with the product visibility
/// (after the local correction applied by canonicalize_outcome).
[[nodiscard]] IsotropicState swap_isotropic(const IsotropicState& s1, const IsotropicState& s2);

/// Applies I (x) U_uv to a branch-(u, v) AD state, mapping |Phi_uv> onto |Phi+>.
[[nodiscard]] DensityMatrix canonicalize_outcome(const DensityMatrix& state, WeylLabel label);

}  // namespace qswap
