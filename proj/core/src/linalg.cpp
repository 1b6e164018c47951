#include "qswap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "qswap/error.hpp"

namespace qswap::linalg {

namespace {

std::string shape(const ComplexMatrix& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols();
    return os.str();
}

void require_finite(const ComplexMatrix& m, const char* what) {
    if (!is_finite(m)) {
        throw DomainError(std::string(what) + ": matrix has non-finite entries");
    }
}

void require_square_annotated(const ComplexMatrix& rho, const SubsystemDims& dims, const char* what) {
    if (rho.rows() != rho.cols()) {
        throw DimensionError(std::string(what) + ": expected a square matrix, got " + shape(rho));
    }
    if (dims.count() == 0 || static_cast<std::size_t>(rho.rows()) != dims.total()) {
        std::ostringstream os;
        os << what << ": subsystem dims multiply to " << dims.total() << " but matrix is " << shape(rho);
        throw DimensionError(os.str());
    }
}

void require_within_cap(std::size_t n, const char* what) {
    if (n > kMaxDenseDimension) {
        std::ostringstream os;
        os << what << ": side length " << n << " exceeds dense cap " << kMaxDenseDimension;
        throw CapacityError(os.str());
    }
}

}  // namespace

SubsystemDims::SubsystemDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (auto d : dims_) {
        if (d < 2) {
            throw DimensionError("SubsystemDims: every subsystem dimension must be >= 2");
        }
    }
}

SubsystemDims::SubsystemDims(std::initializer_list<std::size_t> dims)
    : SubsystemDims(std::vector<std::size_t>(dims)) {}

std::size_t SubsystemDims::total() const noexcept {
    if (dims_.empty()) return 0;
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>{});
}

std::vector<std::size_t> SubsystemDims::digits(std::size_t index) const {
    std::vector<std::size_t> out(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
        out[k] = index % dims_[k];
        index /= dims_[k];
    }
    return out;
}

std::size_t SubsystemDims::flatten(std::span<const std::size_t> digits) const {
    std::size_t index = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        index = index * dims_[k] + digits[k];
    }
    return index;
}

bool is_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

double hermitian_deviation(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix identity(std::size_t n) {
    const auto side = static_cast<Eigen::Index>(n);
    return ComplexMatrix::Identity(side, side);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_finite(a, "kron");
    require_finite(b, "kron");
    const auto rows = a.rows() * b.rows();
    const auto cols = a.cols() * b.cols();
    require_within_cap(static_cast<std::size_t>(std::max(rows, cols)), "kron");

    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemDims& dims,
                            std::span<const std::size_t> keep) {
    require_square_annotated(rho, dims, "partial_trace");
    if (keep.empty()) {
        throw DimensionError("partial_trace: keep set must be non-empty");
    }
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] >= dims.count() || (k > 0 && keep[k] <= keep[k - 1])) {
            throw DimensionError("partial_trace: keep indices must be strictly increasing and in range");
        }
    }

    std::vector<std::size_t> kept_dims;
    std::vector<std::size_t> traced;
    std::vector<std::size_t> traced_dims;
    for (std::size_t k = 0; k < dims.count(); ++k) {
        if (std::find(keep.begin(), keep.end(), k) != keep.end()) {
            kept_dims.push_back(dims[k]);
        } else {
            traced.push_back(k);
            traced_dims.push_back(dims[k]);
        }
    }
    const SubsystemDims kept_layout(kept_dims);
    const std::size_t kept_total = kept_layout.total();
    const std::size_t traced_total = traced.empty() ? 1 : SubsystemDims(traced_dims).total();

    // Precompute the flat-index contribution of every kept and every traced configuration.
    auto contribution = [&](std::span<const std::size_t> which, std::span<const std::size_t> which_dims,
                            std::size_t config) {
        std::vector<std::size_t> full(dims.count(), 0);
        for (std::size_t k = which.size(); k-- > 0;) {
            full[which[k]] = config % which_dims[k];
            config /= which_dims[k];
        }
        return dims.flatten(full);
    };
    std::vector<std::size_t> kept_offset(kept_total);
    for (std::size_t c = 0; c < kept_total; ++c) kept_offset[c] = contribution(keep, kept_dims, c);
    std::vector<std::size_t> traced_offset(traced_total, 0);
    if (!traced.empty()) {
        for (std::size_t c = 0; c < traced_total; ++c) traced_offset[c] = contribution(traced, traced_dims, c);
    }

    const auto n = static_cast<Eigen::Index>(kept_total);
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (std::size_t r = 0; r < kept_total; ++r) {
        for (std::size_t c = 0; c < kept_total; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t t = 0; t < traced_total; ++t) {
                acc += rho(static_cast<Eigen::Index>(kept_offset[r] + traced_offset[t]),
                           static_cast<Eigen::Index>(kept_offset[c] + traced_offset[t]));
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemDims& dims, std::size_t subsystem) {
    require_square_annotated(rho, dims, "partial_transpose");
    if (subsystem >= dims.count()) {
        throw DimensionError("partial_transpose: subsystem index out of range");
    }
    const std::size_t n = dims.total();
    std::size_t stride = 1;
    for (std::size_t k = dims.count(); k-- > subsystem + 1;) stride *= dims[k];
    const std::size_t local = dims[subsystem];

    // index = rest + digit * stride; transposing swaps the digit between row and column.
    std::vector<std::size_t> digit(n);
    std::vector<std::size_t> rest(n);
    for (std::size_t i = 0; i < n; ++i) {
        digit[i] = (i / stride) % local;
        rest[i] = i - digit[i] * stride;
    }
    ComplexMatrix out(rho.rows(), rho.cols());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(static_cast<Eigen::Index>(rest[r] + digit[c] * stride),
                static_cast<Eigen::Index>(rest[c] + digit[r] * stride)) =
                rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    require_finite(m, "hermitian_eigenvalues");
    if (m.rows() != m.cols()) {
        throw DimensionError("hermitian_eigenvalues: expected a square matrix, got " + shape(m));
    }
    const double deviation = hermitian_deviation(m);
    if (deviation > kHermitianTolerance) {
        std::ostringstream os;
        os << "hermitian_eigenvalues: matrix is not Hermitian (max deviation " << deviation << ")";
        throw DomainError(os.str());
    }
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw DomainError("hermitian_eigenvalues: eigensolver did not converge");
    }
    const auto& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    require_finite(m, "singular_values");
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    const auto& sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

std::vector<double> singular_values(const RealMatrix& m) {
    if (!m.allFinite()) {
        throw DomainError("singular_values: matrix has non-finite entries");
    }
    Eigen::BDCSVD<RealMatrix> svd(m);
    const auto& sv = svd.singularValues();
    std::vector<double> out(sv.data(), sv.data() + sv.size());
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

double trace_norm(const ComplexMatrix& m) {
    const auto sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

ComplexMatrix realign(const ComplexMatrix& rho, const SubsystemDims& dims) {
    require_square_annotated(rho, dims, "realign");
    if (dims.count() != 2 || dims[0] != dims[1]) {
        throw DimensionError("realign: expected a d x d bipartition");
    }
    const auto d = static_cast<Eigen::Index>(dims[0]);
    ComplexMatrix out(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            for (Eigen::Index k = 0; k < d; ++k) {
                for (Eigen::Index l = 0; l < d; ++l) {
                    out(i * d + j, k * d + l) = rho(i * d + k, j * d + l);
                }
            }
        }
    }
    return out;
}

}  // namespace qswap::linalg
