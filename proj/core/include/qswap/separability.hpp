#pragma once

#include "qswap/states.hpp"

namespace qswap {

// Realignment excess above this reads as entangled.
inline constexpr double kWitnessTolerance = 1e-9;

/// Block matrix [[c, 0], [0, T]] with T_ab = tr(rho (l_a (x) l_b^t)) over the
/// Gell-Mann generators of SU(d). The zero border is implicit.
struct BlochMatrix {
    double c = 0.0;
    linalg::RealMatrix t;

    [[nodiscard]] linalg::RealMatrix full() const;
};

/// Full (d^2-1) x (d^2-1) correlation block; `c_value` is stored as given.
[[nodiscard]] BlochMatrix bloch_matrix(const DensityMatrix& rho, double c_value);

/// |c| + sum of singular values of T, minus 1. No verdict is attached: the scalar c
/// is caller-supplied and has no canonical default.
[[nodiscard]] double kyfan_excess(const DensityMatrix& rho, double c_value);

struct WitnessVerdict {
    double excess = 0.0;
    bool entangled = false;
};

/// Realignment (CCNR) test: excess = ||R(rho)||_1 - 1, entangled when excess > tolerance.
[[nodiscard]] WitnessVerdict realignment_witness(const DensityMatrix& rho, double tolerance = kWitnessTolerance);

}  // namespace qswap
