#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qswap/linalg.hpp"

namespace qswap {

using linalg::ComplexMatrix;
using linalg::ComplexVector;
using linalg::SubsystemDims;

// Tolerance on the normalization of probability vectors and pure states.
inline constexpr double kProbabilityTolerance = 1e-10;

/// Schmidt probabilities (p_0, ..., p_{d-1}) of a pure biqudit state sum_j sqrt(p_j)|jj>.
///
/// Entries must be non-negative. A sum within kProbabilityTolerance of 1 is
/// renormalized; anything further off is rejected rather than silently fixed.
class SchmidtVector {
public:
    explicit SchmidtVector(std::vector<double> probabilities);

    static SchmidtVector uniform(std::size_t d);

    [[nodiscard]] std::size_t dimension() const noexcept { return p_.size(); }
    [[nodiscard]] double operator[](std::size_t j) const { return p_.at(j); }
    [[nodiscard]] std::span<const double> values() const noexcept { return p_; }

private:
    std::vector<double> p_;
};

/// Pure state of a d x d bipartite system, amp(i, j) = <i|<j|psi>.
class PureBipartiteState {
public:
    explicit PureBipartiteState(ComplexMatrix amplitudes);

    [[nodiscard]] std::size_t dimension() const noexcept { return static_cast<std::size_t>(amp_.rows()); }
    [[nodiscard]] const ComplexMatrix& amplitudes() const noexcept { return amp_; }
    [[nodiscard]] linalg::Complex amplitude(std::size_t i, std::size_t j) const;

    // Flattened ket with index i*d + j.
    [[nodiscard]] ComplexVector ket() const;
    // Reduced state of the first subsystem, amp * amp^dagger.
    [[nodiscard]] ComplexMatrix reduced_first() const;

private:
    ComplexMatrix amp_;
};

/// Hermitian, unit-trace operator with an attached subsystem layout.
///
/// Construction checks Hermiticity and trace; positivity costs an eigensolve,
/// so it is exposed separately through is_positive().
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix rho, SubsystemDims dims);

    static DensityMatrix from_pure(const PureBipartiteState& psi);
    static DensityMatrix from_ket(const ComplexVector& ket, SubsystemDims dims);

    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return rho_; }
    [[nodiscard]] const SubsystemDims& dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t side() const noexcept { return static_cast<std::size_t>(rho_.rows()); }

    // Local dimension of a d x d bipartite layout; throws for other layouts.
    [[nodiscard]] std::size_t bipartite_dimension() const;

    [[nodiscard]] bool is_positive(double tolerance = 1e-10) const;

private:
    ComplexMatrix rho_;
    SubsystemDims dims_;
};

/// alpha |Phi+><Phi+| + (1 - alpha) I/d^2 with alpha in [-1/(d^2-1), 1].
class IsotropicState {
public:
    IsotropicState(std::size_t d, double visibility);

    [[nodiscard]] std::size_t dimension() const noexcept { return d_; }
    [[nodiscard]] double visibility() const noexcept { return visibility_; }

    [[nodiscard]] static double min_visibility(std::size_t d);

private:
    std::size_t d_;
    double visibility_;
};

struct WeylLabel {
    std::size_t u = 0;
    std::size_t v = 0;

    bool operator==(const WeylLabel&) const = default;
};

void require_dimension(std::size_t d);
void require_label(std::size_t d, WeylLabel label);

[[nodiscard]] linalg::Complex root_of_unity(std::size_t d, std::size_t power);

[[nodiscard]] PureBipartiteState maximally_entangled(std::size_t d);
[[nodiscard]] PureBipartiteState schmidt_state(const SchmidtVector& p);

/// |Psi_uv> = d^{-1/2} sum_l e^{2 pi i l u / d} |l>|l + v>.
[[nodiscard]] PureBipartiteState generalized_bell(std::size_t d, WeylLabel label);

/// U_uv = sum_j omega^{j u} |j><j + v|, omega = e^{2 pi i / d}.
[[nodiscard]] ComplexMatrix weyl(std::size_t d, WeylLabel label);

/// Generalized Gell-Mann matrices normalized to tr(l_a l_b) = 2 delta_ab.
/// Order: symmetric pairs (j<k), antisymmetric pairs (j<k), then diagonal l = 1..d-1.
[[nodiscard]] std::vector<ComplexMatrix> gellmann_generators(std::size_t d);

[[nodiscard]] DensityMatrix isotropic_density(std::size_t d, double visibility);
[[nodiscard]] DensityMatrix isotropic_density(const IsotropicState& s);

}  // namespace qswap
