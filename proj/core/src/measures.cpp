#include "qswap/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qswap/error.hpp"

namespace qswap {

namespace {

double clamp_zero(double x) {
    return std::abs(x) <= kZeroClamp ? 0.0 : x;
}

// Products q_l = p_l p'_{l+v} that weight the |l>|l+v> component of branch v.
std::vector<double> branch_weights(const SchmidtVector& p, const SchmidtVector& p2, std::size_t v) {
    if (p.dimension() != p2.dimension()) {
        throw DimensionError("Schmidt vectors have different dimensions");
    }
    const auto d = p.dimension();
    std::vector<double> q(d);
    for (std::size_t l = 0; l < d; ++l) q[l] = p[l] * p2[linalg::mod_add(l, v, d)];
    return q;
}

double pairwise_root_sum(const std::vector<double>& q) {
    double total = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = i + 1; j < q.size(); ++j) total += std::sqrt(q[i] * q[j]);
    }
    return total;
}

double sum_of(const std::vector<double>& q) {
    double total = 0.0;
    for (double x : q) total += x;
    return total;
}

double sum_of_squares(const std::vector<double>& q) {
    double total = 0.0;
    for (double x : q) total += x * x;
    return total;
}

void require_branch_label(std::size_t d, std::size_t v) {
    if (v >= d) {
        throw DomainError("shift label v = " + std::to_string(v) + " out of range for d = " + std::to_string(d));
    }
}

}  // namespace

FidelityValue::FidelityValue(double f) : f_(f) {
    if (!std::isfinite(f) || f < -kZeroClamp || f > 1.0 + kZeroClamp) {
        std::ostringstream os;
        os << "fidelity " << f << " outside [0, 1]";
        throw DomainError(os.str());
    }
    f_ = std::clamp(f, 0.0, 1.0);
}

double iconcurrence_pure(const PureBipartiteState& state) {
    const ComplexMatrix reduced = state.reduced_first();
    const double purity = (reduced * reduced).trace().real();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double negativity_pure_schmidt(const SchmidtVector& p) {
    const auto d = static_cast<double>(p.dimension());
    std::vector<double> q(p.values().begin(), p.values().end());
    return 2.0 / (d - 1.0) * pairwise_root_sum(q);
}

double iconcurrence_outcome(const SchmidtVector& p, const SchmidtVector& p2, std::size_t v) {
    require_branch_label(p.dimension(), v);
    const auto q = branch_weights(p, p2, v);
    const double norm = sum_of(q);
    if (norm < kZeroBranchThreshold) {
        throw ZeroProbabilityBranch("I-concurrence requested for a zero-probability branch");
    }
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - sum_of_squares(q) / (norm * norm))));
}

double negativity_outcome(const SchmidtVector& p, const SchmidtVector& p2, std::size_t v) {
    require_branch_label(p.dimension(), v);
    const auto q = branch_weights(p, p2, v);
    const double norm = sum_of(q);
    if (norm < kZeroBranchThreshold) {
        throw ZeroProbabilityBranch("negativity requested for a zero-probability branch");
    }
    const auto d = static_cast<double>(p.dimension());
    return 2.0 / (norm * (d - 1.0)) * pairwise_root_sum(q);
}

std::vector<BranchMeasures> branch_measures(const SchmidtVector& p, const SchmidtVector& p2) {
    const auto outcomes = swap_outcome_distribution(p, p2);
    std::vector<BranchMeasures> out;
    out.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        BranchMeasures m;
        m.label = o.label;
        m.probability = o.probability;
        m.occurs = o.occurs();
        if (m.occurs) {
            m.iconcurrence = iconcurrence_outcome(p, p2, o.label.v);
            m.negativity = negativity_outcome(p, p2, o.label.v);
        }
        out.push_back(m);
    }
    return out;
}

double avg_iconcurrence(const SchmidtVector& p, const SchmidtVector& p2) {
    const auto d = p.dimension();
    double total = 0.0;
    for (std::size_t v = 0; v < d; ++v) {
        const auto q = branch_weights(p, p2, v);
        const double norm = sum_of(q);
        total += std::sqrt(std::max(0.0, norm * norm - sum_of_squares(q)));
    }
    return std::numbers::sqrt2 * total;
}

double avg_negativity(const SchmidtVector& p, const SchmidtVector& p2) {
    const auto d = p.dimension();
    double total = 0.0;
    for (std::size_t v = 0; v < d; ++v) total += pairwise_root_sum(branch_weights(p, p2, v));
    return 2.0 / (static_cast<double>(d) - 1.0) * total;
}

double negativity_density(const DensityMatrix& rho) {
    const auto d = rho.bipartite_dimension();
    const auto spectrum = linalg::hermitian_eigenvalues(linalg::partial_transpose(rho.matrix(), rho.dims(), 0));
    double negative = 0.0;
    for (double ev : spectrum) {
        if (ev < 0.0) negative -= ev;
    }
    return clamp_zero(2.0 / (static_cast<double>(d) - 1.0) * negative);
}

FidelityValue isotropic_fidelity(const IsotropicState& s) {
    const auto d = static_cast<double>(s.dimension());
    const double v = s.visibility();
    return FidelityValue(v + (1.0 - v) / (d * d));
}

double visibility_from_fidelity(std::size_t d, FidelityValue f) {
    require_dimension(d);
    const auto dd = static_cast<double>(d * d);
    return (f.value() * dd - 1.0) / (dd - 1.0);
}

double iconcurrence_isotropic(std::size_t d, FidelityValue f) {
    require_dimension(d);
    const auto dd = static_cast<double>(d);
    const double excess = clamp_zero(f.value() - 1.0 / dd);
    if (excess <= 0.0) return 0.0;
    return std::sqrt(2.0 * dd / (dd - 1.0)) * excess;
}

double negativity_isotropic(std::size_t d, FidelityValue f) {
    require_dimension(d);
    const auto dd = static_cast<double>(d);
    const double excess = clamp_zero(f.value() - 1.0 / dd);
    if (excess <= 0.0) return 0.0;
    return (f.value() * dd - 1.0) / (dd - 1.0);
}

}  // namespace qswap
