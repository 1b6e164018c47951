#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qswap::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

// Largest matrix side length any dense routine will build (two d=8 qudit pairs).
inline constexpr std::size_t kMaxDenseDimension = 4096;

// Max-abs deviation from Hermiticity tolerated before an eigensolve.
inline constexpr double kHermitianTolerance = 1e-9;

/// Ordered per-subsystem dimensions annotating a composite matrix.
///
/// Basis index flattening is row-major over subsystems: for dims (d0, d1, ..., dn)
/// the basis state |i0 i1 ... in> has index ((i0*d1 + i1)*d2 + ...)*dn + in,
/// i.e. the first subsystem is the most significant digit.
class SubsystemDims {
public:
    SubsystemDims() = default;
    explicit SubsystemDims(std::vector<std::size_t> dims);
    SubsystemDims(std::initializer_list<std::size_t> dims);

    [[nodiscard]] std::size_t count() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t operator[](std::size_t k) const { return dims_.at(k); }
    [[nodiscard]] std::size_t total() const noexcept;
    [[nodiscard]] std::span<const std::size_t> values() const noexcept { return dims_; }

    // Split a flat index into per-subsystem digits.
    [[nodiscard]] std::vector<std::size_t> digits(std::size_t index) const;
    [[nodiscard]] std::size_t flatten(std::span<const std::size_t> digits) const;

    bool operator==(const SubsystemDims&) const = default;

private:
    std::vector<std::size_t> dims_;
};

[[nodiscard]] bool is_finite(const ComplexMatrix& m);
[[nodiscard]] double hermitian_deviation(const ComplexMatrix& m);

[[nodiscard]] ComplexMatrix identity(std::size_t n);

/// Kronecker product; result side lengths are the products of the inputs'.
[[nodiscard]] ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
[[nodiscard]] ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Reduced matrix over the subsystems listed in `keep` (strictly increasing),
/// in their original order.
[[nodiscard]] ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemDims& dims,
                                          std::span<const std::size_t> keep);

/// Transposes the indices of a single subsystem. Exact entry permutation, so it is an involution.
[[nodiscard]] ComplexMatrix partial_transpose(const ComplexMatrix& rho, const SubsystemDims& dims,
                                              std::size_t subsystem);

/// Ascending real spectrum of a Hermitian matrix. Input is symmetrized first;
/// deviation beyond kHermitianTolerance is rejected.
[[nodiscard]] std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Singular values, descending.
[[nodiscard]] std::vector<double> singular_values(const ComplexMatrix& m);
[[nodiscard]] std::vector<double> singular_values(const RealMatrix& m);

[[nodiscard]] double trace_norm(const ComplexMatrix& m);

/// Realignment reshuffle of a bipartite d x d operator: R[(i,j),(k,l)] = rho[(i,k),(j,l)].
[[nodiscard]] ComplexMatrix realign(const ComplexMatrix& rho, const SubsystemDims& dims);

// Non-negative residues for modular qudit labels.
[[nodiscard]] constexpr std::size_t mod_add(std::size_t a, std::size_t b, std::size_t d) noexcept {
    return (a % d + b % d) % d;
}
[[nodiscard]] constexpr std::size_t mod_sub(std::size_t a, std::size_t b, std::size_t d) noexcept {
    return (a % d + d - b % d) % d;
}

}  // namespace qswap::linalg
