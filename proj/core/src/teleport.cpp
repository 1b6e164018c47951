#include "qswap/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "qswap/error.hpp"
#include "qswap/swap.hpp"

namespace qswap {

using linalg::Complex;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

ComplexVector to_vector(std::span<const Complex> input, std::size_t d) {
    if (input.size() != d) {
        std::ostringstream os;
        os << "teleport: input has " << input.size() << " amplitudes, channel dimension is " << d;
        throw DimensionError(os.str());
    }
    ComplexVector phi(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) phi(static_cast<Eigen::Index>(k)) = input[k];
    const double norm = phi.squaredNorm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kProbabilityTolerance) {
        throw DomainError("teleport: input state is not normalized");
    }
    return phi;
}

// K = <Phi_uv|_{XA} (x) I_D, a d x d^3 matrix over (x, a, out) with the output digit last.
ComplexMatrix measurement_contraction(std::size_t d, WeylLabel label) {
    const auto bell = generalized_bell(d, label).amplitudes();
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix k = ComplexMatrix::Zero(n, n * n * n);
    for (Eigen::Index x = 0; x < n; ++x) {
        for (Eigen::Index a = 0; a < n; ++a) {
            for (Eigen::Index out = 0; out < n; ++out) {
                k(out, (x * n + a) * n + out) = std::conj(bell(x, a));
            }
        }
    }
    return k;
}

struct BranchKernel {
    WeylLabel label;
    ComplexMatrix contraction;
    ComplexMatrix correction;
};

std::vector<BranchKernel> branch_kernels(std::size_t d) {
    std::vector<BranchKernel> out;
    out.reserve(d * d);
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t v = 0; v < d; ++v) {
            const WeylLabel label{u, v};
            out.push_back({label, measurement_contraction(d, label), weyl(d, label)});
        }
    }
    return out;
}

std::optional<TeleportResult> run_branch(const BranchKernel& kernel, const ComplexMatrix& joint,
                                         const ComplexVector& phi, std::size_t d) {
    ComplexMatrix diana = kernel.contraction * joint * kernel.contraction.adjoint();
    const double probability = diana.trace().real();
    if (probability < kZeroBranchThreshold) return std::nullopt;
    diana = kernel.correction * (diana / probability) * kernel.correction.adjoint();
    diana = 0.5 * (diana + diana.adjoint()).eval();
    const double fidelity = std::clamp((phi.adjoint() * diana * phi)(0, 0).real(), 0.0, 1.0);
    return TeleportResult{kernel.label, probability, DensityMatrix(std::move(diana), SubsystemDims{d}), fidelity};
}

ComplexMatrix joint_state(const ComplexVector& phi, const DensityMatrix& channel) {
    return linalg::kron(ComplexMatrix(phi * phi.adjoint()), channel.matrix());
}

}  // namespace

TeleportResult teleport_branch(const DensityMatrix& channel, std::span<const Complex> input, WeylLabel label) {
    const auto d = channel.bipartite_dimension();
    require_label(d, label);
    const ComplexVector phi = to_vector(input, d);
    const BranchKernel kernel{label, measurement_contraction(d, label), weyl(d, label)};
    auto result = run_branch(kernel, joint_state(phi, channel), phi, d);
    if (!result) {
        std::ostringstream os;
        os << "teleport: branch (" << label.u << ", " << label.v << ") has zero probability";
        throw ZeroProbabilityBranch(os.str());
    }
    return std::move(*result);
}

std::vector<TeleportResult> teleport_all(const DensityMatrix& channel, std::span<const Complex> input) {
    const auto d = channel.bipartite_dimension();
    const ComplexVector phi = to_vector(input, d);
    const ComplexMatrix joint = joint_state(phi, channel);
    std::vector<TeleportResult> out;
    for (const auto& kernel : branch_kernels(d)) {
        if (auto r = run_branch(kernel, joint, phi, d)) out.push_back(std::move(*r));
    }
    return out;
}

ComplexVector haar_random_state(std::size_t d, std::uint64_t seed) {
    require_dimension(d);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector phi(static_cast<Eigen::Index>(d));
    for (Eigen::Index k = 0; k < phi.size(); ++k) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        phi(k) = Complex{re, im};
    }
    return phi / phi.norm();
}

FidelityEstimate teleport_average_fidelity(const DensityMatrix& channel, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw DomainError("teleport_average_fidelity: samples must be >= 1");
    }
    const auto d = channel.bipartite_dimension();
    const auto kernels = branch_kernels(d);

    // Welford accumulation of the per-input average fidelity.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const ComplexVector phi = haar_random_state(d, splitmix64(seed ^ splitmix64(i)));
        const ComplexMatrix joint = joint_state(phi, channel);
        double value = 0.0;
        for (const auto& kernel : kernels) {
            if (auto r = run_branch(kernel, joint, phi, d)) value += r->probability * r->fidelity_to_input;
        }
        const double delta = value - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (value - mean);
    }
    FidelityEstimate out;
    out.mean = mean;
    out.samples = samples;
    if (samples > 1) {
        const double variance = m2 / static_cast<double>(samples - 1);
        out.standard_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(samples));
    }
    return out;
}

ChainReport repeater_chain(std::size_t d, std::span<const double> link_visibilities, std::size_t samples,
                           std::uint64_t seed) {
    if (link_visibilities.empty()) {
        throw DomainError("repeater_chain: at least one link is required");
    }
    IsotropicState end(d, link_visibilities.front());
    for (std::size_t k = 1; k < link_visibilities.size(); ++k) {
        end = swap_isotropic(end, IsotropicState(d, link_visibilities[k]));
    }
    ChainReport out;
    out.link_count = link_visibilities.size();
    out.end_visibility = end.visibility();
    out.end_fidelity = isotropic_fidelity(end).value();
    out.teleport = teleport_average_fidelity(isotropic_density(end), samples, seed);
    return out;
}

}  // namespace qswap
