#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qswap/measures.hpp"
#include "qswap/states.hpp"

namespace qswap {

struct TeleportResult {
    WeylLabel outcome;
    double probability = 0.0;
    DensityMatrix output_state;  // Diana's corrected single-qudit state
    double fidelity_to_input = 0.0;
};

/// Teleports `input` (a normalized d-vector) through `channel` (Alice's qudit first,
/// Diana's second) and keeps the branch where Alice's joint measurement on
/// (input, her qudit) yields |Phi_uv> = sum_k e^{2 pi i k u/d}/sqrt(d) |k, k+v>.
///
/// Diana's unnormalized state is tr_{input,A}[(|Phi_uv><Phi_uv| (x) I) |phi><phi| (x) channel],
/// its trace is the branch probability, and the correction is the Weyl operator U_uv with
/// the same labels. For the channel |Phi+> that correction returns the input exactly on
/// every branch. Zero-probability branches throw ZeroProbabilityBranch.
[[nodiscard]] TeleportResult teleport_branch(const DensityMatrix& channel, std::span<const linalg::Complex> input,
                                             WeylLabel label);

/// All d^2 branches that occur, ordered by (u, v).
[[nodiscard]] std::vector<TeleportResult> teleport_all(const DensityMatrix& channel,
                                                       std::span<const linalg::Complex> input);

/// Haar-random pure qudit from seeded standard complex Gaussians.
[[nodiscard]] linalg::ComplexVector haar_random_state(std::size_t d, std::uint64_t seed);

struct FidelityEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
};

/// Mean over Haar-random inputs of the probability-weighted branch fidelity.
///
/// Sample i draws its input from a seed derived from (seed, i) alone, so the estimate is
/// fixed by (seed, samples) however the samples are scheduled.
[[nodiscard]] FidelityEstimate teleport_average_fidelity(const DensityMatrix& channel, std::size_t samples,
                                                         std::uint64_t seed);

struct ChainReport {
    std::size_t link_count = 0;
    double end_visibility = 0.0;
    double end_fidelity = 0.0;
    FidelityEstimate teleport;
};

/// Composes isotropic links by repeated swapping and teleports through the end-to-end link.
[[nodiscard]] ChainReport repeater_chain(std::size_t d, std::span<const double> link_visibilities,
                                         std::size_t samples, std::uint64_t seed);

}  // namespace qswap
