#include "qswap/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "qswap/error.hpp"

namespace qswap {

using linalg::Complex;

void require_dimension(std::size_t d) {
    if (d < 2) {
        throw DomainError("qudit dimension must be >= 2, got " + std::to_string(d));
    }
}

void require_label(std::size_t d, WeylLabel label) {
    if (label.u >= d || label.v >= d) {
        std::ostringstream os;
        os << "label (" << label.u << ", " << label.v << ") out of range for d = " << d;
        throw DomainError(os.str());
    }
}

Complex root_of_unity(std::size_t d, std::size_t power) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(power % d) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

SchmidtVector::SchmidtVector(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    require_dimension(p_.size());
    for (double x : p_) {
        if (!std::isfinite(x) || x < 0.0) {
            throw DomainError("Schmidt probabilities must be finite and non-negative");
        }
    }
    const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << "Schmidt probabilities sum to " << total << ", expected 1";
        throw DomainError(os.str());
    }
    for (double& x : p_) x /= total;
}

SchmidtVector SchmidtVector::uniform(std::size_t d) {
    require_dimension(d);
    return SchmidtVector(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

PureBipartiteState::PureBipartiteState(ComplexMatrix amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.rows() != amp_.cols()) {
        throw DimensionError("PureBipartiteState: amplitude matrix must be d x d");
    }
    require_dimension(static_cast<std::size_t>(amp_.rows()));
    if (!amp_.allFinite()) {
        throw DomainError("PureBipartiteState: non-finite amplitude");
    }
    const double norm = amp_.squaredNorm();
    if (std::abs(norm - 1.0) > kProbabilityTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << "PureBipartiteState: squared norm " << norm << ", expected 1";
        throw DomainError(os.str());
    }
}

Complex PureBipartiteState::amplitude(std::size_t i, std::size_t j) const {
    return amp_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
}

ComplexVector PureBipartiteState::ket() const {
    const auto d = amp_.rows();
    ComplexVector out(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) out(i * d + j) = amp_(i, j);
    }
    return out;
}

ComplexMatrix PureBipartiteState::reduced_first() const {
    return amp_ * amp_.adjoint();
}

DensityMatrix::DensityMatrix(ComplexMatrix rho, SubsystemDims dims) : rho_(std::move(rho)), dims_(std::move(dims)) {
    if (rho_.rows() != rho_.cols() || dims_.count() == 0 || static_cast<std::size_t>(rho_.rows()) != dims_.total()) {
        throw DimensionError("DensityMatrix: matrix side does not match subsystem dims");
    }
    if (rho_.rows() > static_cast<Eigen::Index>(linalg::kMaxDenseDimension)) {
        throw CapacityError("DensityMatrix: side length exceeds dense cap");
    }
    if (!rho_.allFinite()) {
        throw DomainError("DensityMatrix: non-finite entry");
    }
    if (linalg::hermitian_deviation(rho_) > linalg::kHermitianTolerance) {
        throw DomainError("DensityMatrix: matrix is not Hermitian");
    }
    const Complex tr = rho_.trace();
    if (std::abs(tr - 1.0) > kProbabilityTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << "DensityMatrix: trace " << tr.real() << ", expected 1";
        throw DomainError(os.str());
    }
}

DensityMatrix DensityMatrix::from_pure(const PureBipartiteState& psi) {
    const auto d = psi.dimension();
    return from_ket(psi.ket(), SubsystemDims{d, d});
}

DensityMatrix DensityMatrix::from_ket(const ComplexVector& ket, SubsystemDims dims) {
    return DensityMatrix(ket * ket.adjoint(), std::move(dims));
}

std::size_t DensityMatrix::bipartite_dimension() const {
    if (dims_.count() != 2 || dims_[0] != dims_[1]) {
        throw DimensionError("expected a d x d bipartite density matrix");
    }
    return dims_[0];
}

bool DensityMatrix::is_positive(double tolerance) const {
    const auto ev = linalg::hermitian_eigenvalues(rho_);
    return ev.front() >= -tolerance;
}

IsotropicState::IsotropicState(std::size_t d, double visibility) : d_(d), visibility_(visibility) {
    require_dimension(d);
    if (!std::isfinite(visibility) || visibility > 1.0 + 1e-12 || visibility < min_visibility(d) - 1e-12) {
        std::ostringstream os;
        os << "visibility " << visibility << " outside [" << min_visibility(d) << ", 1] for d = " << d;
        throw DomainError(os.str());
    }
    visibility_ = std::clamp(visibility, min_visibility(d), 1.0);
}

double IsotropicState::min_visibility(std::size_t d) {
    const auto dd = static_cast<double>(d);
    return -1.0 / (dd * dd - 1.0);
}

PureBipartiteState maximally_entangled(std::size_t d) {
    require_dimension(d);
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix amp = ComplexMatrix::Identity(n, n) / std::sqrt(static_cast<double>(d));
    return PureBipartiteState(std::move(amp));
}

PureBipartiteState schmidt_state(const SchmidtVector& p) {
    const auto n = static_cast<Eigen::Index>(p.dimension());
    ComplexMatrix amp = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) amp(j, j) = std::sqrt(p[static_cast<std::size_t>(j)]);
    return PureBipartiteState(std::move(amp));
}

PureBipartiteState generalized_bell(std::size_t d, WeylLabel label) {
    require_dimension(d);
    require_label(d, label);
    const auto n = static_cast<Eigen::Index>(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix amp = ComplexMatrix::Zero(n, n);
    for (std::size_t l = 0; l < d; ++l) {
        amp(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(linalg::mod_add(l, label.v, d))) =
            root_of_unity(d, l * label.u) * scale;
    }
    return PureBipartiteState(std::move(amp));
}

ComplexMatrix weyl(std::size_t d, WeylLabel label) {
    require_dimension(d);
    require_label(d, label);
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (std::size_t j = 0; j < d; ++j) {
        out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(linalg::mod_add(j, label.v, d))) =
            root_of_unity(d, j * label.u);
    }
    return out;
}

std::vector<ComplexMatrix> gellmann_generators(std::size_t d) {
    require_dimension(d);
    const auto n = static_cast<Eigen::Index>(d);
    std::vector<ComplexMatrix> out;
    out.reserve(d * d - 1);

    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            ComplexMatrix m = ComplexMatrix::Zero(n, n);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            out.push_back(std::move(m));
        }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            ComplexMatrix m = ComplexMatrix::Zero(n, n);
            m(j, k) = Complex{0.0, -1.0};
            m(k, j) = Complex{0.0, 1.0};
            out.push_back(std::move(m));
        }
    }
    for (Eigen::Index l = 1; l < n; ++l) {
        const double ld = static_cast<double>(l);
        const double scale = std::sqrt(2.0 / (ld * (ld + 1.0)));
        ComplexMatrix m = ComplexMatrix::Zero(n, n);
        for (Eigen::Index j = 0; j < l; ++j) m(j, j) = scale;
        m(l, l) = -ld * scale;
        out.push_back(std::move(m));
    }
    return out;
}

DensityMatrix isotropic_density(std::size_t d, double visibility) {
    return isotropic_density(IsotropicState(d, visibility));
}

DensityMatrix isotropic_density(const IsotropicState& s) {
    const auto d = s.dimension();
    const double v = s.visibility();
    const auto n = static_cast<Eigen::Index>(d * d);
    const ComplexVector phi = maximally_entangled(d).ket();
    ComplexMatrix rho = v * (phi * phi.adjoint()) +
                        ((1.0 - v) / static_cast<double>(d * d)) * ComplexMatrix::Identity(n, n);
    return DensityMatrix(std::move(rho), SubsystemDims{d, d});
}

}  // namespace qswap
