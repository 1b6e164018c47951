#include <gtest/gtest.h>

#include <random>

#include "qswap/measures.hpp"
#include "qswap/separability.hpp"
#include "support/oracles.hpp"

namespace {

using namespace qswap;

// T_ab = tr(rho (l_a (x) l_b^t)) by the literal Kronecker route.
linalg::RealMatrix brute_correlations(const ComplexMatrix& rho, std::size_t d) {
    const auto g = gellmann_generators(d);
    const auto m = static_cast<Eigen::Index>(g.size());
    linalg::RealMatrix t(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = 0; b < m; ++b)
            t(a, b) = (rho * qswap::testing::brute_kron(g[std::size_t(a)], g[std::size_t(b)].transpose()))
                          .trace()
                          .real();
    return t;
}

TEST(BlochMatrix, MatchesLiteralTraces) {
    std::mt19937_64 rng(301);
    for (std::size_t d = 2; d <= 3; ++d) {
        const auto raw = qswap::testing::random_density(rng, int(d * d), 3);
        const DensityMatrix rho(raw, SubsystemDims{d, d});
        const auto bloch = bloch_matrix(rho, 0.25);
        EXPECT_EQ(bloch.c, 0.25);
        EXPECT_LT((bloch.t - brute_correlations(raw, d)).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_EQ(bloch.full().rows(), bloch.t.rows() + 1);
        EXPECT_EQ(bloch.full()(0, 0), 0.25);
        EXPECT_EQ(bloch.full()(0, 1), 0.0);
    }
}

TEST(BlochMatrix, MaximallyMixedHasNoCorrelations) {
    for (std::size_t d = 2; d <= 4; ++d) {
        EXPECT_LT(bloch_matrix(isotropic_density(d, 0.0), 0.0).t.cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(BlochMatrix, IsotropicIsScaledIdentity) {
    const auto t = bloch_matrix(isotropic_density(3, 0.6), 0.0).t;
    EXPECT_LT((t - 0.4 * linalg::RealMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-9);
    for (std::size_t d = 2; d <= 5; ++d) {
        for (double v : {-0.02, 0.1, 0.5, 1.0}) {
            const auto tv = bloch_matrix(isotropic_density(d, v), 0.0).t;
            const auto m = tv.rows();
            EXPECT_LT((tv - (2.0 * v / double(d)) * linalg::RealMatrix::Identity(m, m)).cwiseAbs().maxCoeff(), 1e-9);
        }
    }
}

TEST(BlochMatrix, MaximallyMixedFactorKillsCorrelations) {
    std::mt19937_64 rng(307);
    const auto b = qswap::testing::random_density(rng, 3, 3);
    const DensityMatrix rho(linalg::kron(linalg::identity(3) / 3.0, b), SubsystemDims{3, 3});
    EXPECT_LT(bloch_matrix(rho, 0.0).t.cwiseAbs().maxCoeff(), 1e-14);
}

TEST(KyFan, ReferenceValues) {
    EXPECT_NEAR(kyfan_excess(isotropic_density(3, 0.0), 0.0), -1.0, 1e-14);
    for (std::size_t d = 2; d <= 5; ++d) {
        const double v = 0.45;
        EXPECT_NEAR(kyfan_excess(isotropic_density(d, v), 0.0), 2.0 * v * (d * d - 1.0) / d - 1.0, 1e-9);
    }
    EXPECT_NEAR(kyfan_excess(isotropic_density(2, 1.0 / 3.0), 0.0), 0.0, 1e-12);
    EXPECT_NEAR(kyfan_excess(isotropic_density(2, 1.0 / 3.0), -0.5), 0.5, 1e-12);
}

TEST(RealignmentWitness, ReferenceValues) {
    const auto bell = realignment_witness(isotropic_density(2, 1.0));
    EXPECT_NEAR(bell.excess, 1.0, 1e-12);
    EXPECT_TRUE(bell.entangled);

    for (std::size_t d = 2; d <= 5; ++d) {
        const auto dd = double(d);
        for (double v : {0.0, 0.2, 0.55, 1.0}) {
            EXPECT_NEAR(realignment_witness(isotropic_density(d, v)).excess, 1.0 / dd + v * (dd * dd - 1.0) / dd - 1.0,
                        1e-10);
        }
        const auto boundary = realignment_witness(isotropic_density(d, 1.0 / (dd + 1.0)));
        EXPECT_NEAR(boundary.excess, 0.0, 1e-12);
        EXPECT_FALSE(boundary.entangled);
    }
}

TEST(RealignmentWitness, ProductStatesNeverFlagged) {
    std::mt19937_64 rng(311);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = qswap::testing::random_density(rng, 3, 1 + trial % 3);
        const auto b = qswap::testing::random_density(rng, 3, 1 + trial % 2);
        const auto w = realignment_witness(DensityMatrix(linalg::kron(a, b), SubsystemDims{3, 3}));
        EXPECT_LE(w.excess, 1e-10);
        EXPECT_FALSE(w.entangled);
    }
}

TEST(RealignmentWitness, AgreesWithPptOnIsotropicGrid) {
    for (std::size_t d = 2; d <= 5; ++d) {
        const double threshold = 1.0 / (double(d) + 1.0);
        for (int k = 0; k <= 100; ++k) {
            const double v = k / 100.0;
            const auto rho = isotropic_density(d, v);
            const bool flagged = realignment_witness(rho).entangled;
            if (v <= threshold) EXPECT_FALSE(flagged) << d << " " << v;
            if (v > threshold + 0.01) EXPECT_TRUE(flagged) << d << " " << v;
            EXPECT_EQ(flagged, negativity_density(rho) > 0.0) << d << " " << v;
        }
    }
}

}  // namespace
