#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "optomech/gaussian_measures.hpp"
#include "optomech/presets.hpp"
#include "oracles.hpp"

namespace optomech {
namespace {

Eigen::Matrix4d rotate(const Eigen::Matrix4d& V, int mode, double theta)
{
    Eigen::Matrix4d R = Eigen::Matrix4d::Identity();
    R.block<2, 2>(2 * mode, 2 * mode) = oracle::rotation(theta);
    return R * V * R.transpose();
}

TEST(LogNegativity, Vacuum)
{
    const auto r = log_negativity(Eigen::Matrix4d(Eigen::Matrix4d::Identity() / 2));
    EXPECT_NEAR(r.eta_minus, 0.5, 1e-15);
    EXPECT_EQ(r.log_negativity, 0.0);
}

TEST(LogNegativity, TwoModeSqueezedHalf)
{
    const auto r = log_negativity(oracle::two_mode_squeezed(0.5));
    EXPECT_NEAR(r.log_negativity, 1.0, 1e-12);
    EXPECT_NEAR(r.eta_minus, std::exp(-1.0) / 2, 1e-14);
}

TEST(LogNegativity, TwoModeSqueezedFamilyModerate)
{
    // Below r ~ 4 the double-precision covariance still encodes the state to 1e-10.
    for (int i = 0; i <= 400; ++i) {
        const double r = i / 100.0;
        EXPECT_NEAR(log_negativity(oracle::two_mode_squeezed(r)).log_negativity, 2 * r, 1e-9) << r;
    }
}

TEST(LogNegativity, TwoModeSqueezedMatchesRepresentedState)
{
    // For [[cI, sZ], [sZ, cI]] the partial transpose has symplectic eigenvalue c - s,
    // and c - s of two doubles within a factor two is exact.
    for (int i = 0; i <= 500; ++i) {
        const Eigen::Matrix4d V = oracle::two_mode_squeezed(i / 100.0);
        const double exact = -std::log(2 * (V(0, 0) - V(0, 2)));
        EXPECT_NEAR(log_negativity(V).log_negativity, exact, 1e-9) << i;
    }
}

TEST(LogNegativity, ThermalProductStatesAreSeparable)
{
    for (double n1 : {0.5, 0.7, 3.0, 800.0})
        for (double n2 : {0.5, 1.0, 20.0}) {
            Eigen::Vector4d d(n1, n1, n2, n2);
            const auto r = log_negativity(Eigen::Matrix4d(d.asDiagonal()));
            EXPECT_NEAR(r.log_negativity, 0.0, 1e-15);
            EXPECT_NEAR(r.eta_minus, std::min(n1, n2), 1e-12 * std::max(n1, n2));
        }
}

TEST(LogNegativity, LocalRotationInvariance)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(0.0, 2 * constants::pi);
    for (int t = 0; t < 100; ++t) {
        const Eigen::Matrix4d V = oracle::random_physical_cm(rng);
        const double base = log_negativity(V).log_negativity;
        const double theta = angle(rng);
        EXPECT_NEAR(log_negativity(rotate(V, 0, theta)).log_negativity, base, 1e-9);
        EXPECT_NEAR(log_negativity(rotate(V, 1, theta)).log_negativity, base, 1e-9);
    }
}

TEST(LogNegativity, NonPhysicalInputRaises)
{
    Eigen::Matrix4d neg = -Eigen::Matrix4d::Identity();
    EXPECT_THROW(log_negativity(neg), NumericalError);

    Eigen::Matrix4d bad = Eigen::Matrix4d::Identity() / 2;
    bad(0, 2) = bad(2, 0) = 5.0;  // indefinite
    EXPECT_THROW(log_negativity(bad), NumericalError);
}

TEST(Reduction, IndicesAndBlocks)
{
    using namespace mode_index;
    EXPECT_EQ(bipartition_indices(Bipartition::mirror_field), (std::array<int, 4>{q, p, X, Y}));
    EXPECT_EQ(bipartition_indices(Bipartition::atom_field), (std::array<int, 4>{Q, P, X, Y}));
    EXPECT_EQ(bipartition_indices(Bipartition::mirror_atom), (std::array<int, 4>{q, p, Q, P}));

    CovarianceMatrix V;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            V.values(i, j) = 10 * i + j;
    const auto b = reduce_bipartition(V, Bipartition::atom_field);
    EXPECT_EQ(b.values(0, 0), V.values(Q, Q));
    EXPECT_EQ(b.values(1, 3), V.values(P, Y));
    EXPECT_EQ(b.correlations()(0, 1), V.values(Q, Y));
    EXPECT_EQ(b.second()(1, 0), V.values(Y, X));
}

TEST(Occupations, VacuumAndThermal)
{
    CovarianceMatrix V;
    V.values = Matrix6::Identity() / 2;
    EXPECT_EQ(mirror_phonons(V), 0.0);
    EXPECT_EQ(bogoliubov_excitations(V), 0.0);
    V.values(2, 2) = V.values(3, 3) = 3.5;
    EXPECT_EQ(mirror_phonons(V), 3.0);
}

TEST(Occupations, DecoupledBogoliubovMode)
{
    auto p = reference_parameters();
    p.bec.omega_sw = p.mirror.omega_m;
    const auto d = derive_quantities(p);
    const auto b = branch_from_photon_number(d, 0.0);
    const auto V = solve_lyapunov(drift_matrix(b, d), diffusion_matrix(d));
    const double expected =
        d.omega_sw * d.omega_sw / (8 * (d.gamma_c * d.gamma_c + d.Omega_c * (d.Omega_c + d.omega_sw)));
    EXPECT_NEAR(bogoliubov_excitations(V), expected, 1e-9);
    EXPECT_NEAR(expected, 0.0731, 1e-4);
    EXPECT_NEAR(mirror_phonons(V), d.nbar, 1e-9 * d.nbar);
}

}  // namespace
}  // namespace optomech
