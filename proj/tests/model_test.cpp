#include <cmath>

#include <gtest/gtest.h>

#include "optomech/model.hpp"
#include "optomech/presets.hpp"

namespace optomech {
namespace {

constexpr double kOmegaM = 2.0 * constants::pi * 1e7;

TEST(DeriveQuantities, CavityDecayRate)
{
    const auto d = derive_quantities(reference_parameters());
    // pi c / (L F) with L = 1 mm, F = 3e4.
    EXPECT_NEAR(d.kappa, 3.1394192788e7, 1.0);
    EXPECT_NEAR(d.kappa / kOmegaM, 0.5, 0.5 * 0.005);
}

TEST(DeriveQuantities, RadiationPressureRateNearReferenceCoupling)
{
    const auto d = derive_quantities(reference_parameters());
    EXPECT_NEAR(d.xi, 324.4, 0.1);
    EXPECT_LT(std::abs(d.xi - kReferenceCoupling) / kReferenceCoupling, 0.03);
}

TEST(DeriveQuantities, BogoliubovFrequencies)
{
    auto p = reference_parameters();
    p.bec.omega_sw = 2.0 * kOmegaM;
    const auto d = derive_quantities(p);
    EXPECT_NEAR(d.Omega_c / kOmegaM, 1.4, 1e-12);
    EXPECT_NEAR(d.omega_B / kOmegaM, std::sqrt(1.4 * 3.4), 1e-12);
    EXPECT_NEAR(d.omega_B / kOmegaM, 2.182, 1e-3);
    EXPECT_NEAR(d.delta_omega / kOmegaM, 1.18, 0.01);
    EXPECT_EQ(d.omega_B, std::sqrt(d.Omega_c * (d.Omega_c + d.omega_sw)));
}

TEST(DeriveQuantities, ThermalOccupation)
{
    auto p = reference_parameters();
    p.mirror.temperature = 0.4;
    // Frozen from 1 / expm1(hbar omega_m / k_B T) evaluated independently.
    EXPECT_NEAR(derive_quantities(p).nbar, 832.9649, 1e-3);
    p.mirror.temperature = 0.0;
    EXPECT_EQ(derive_quantities(p).nbar, 0.0);
}

TEST(DeriveQuantities, BoseFactorBelowFloorIsZero)
{
    EXPECT_EQ(bose_occupation(kOmegaM, 1e-9), 0.0);
    EXPECT_GT(bose_occupation(kOmegaM, 1e-3), 0.0);
}

TEST(DeriveQuantities, ZeroDriveZeroEta)
{
    auto p = reference_parameters();
    p.drive.power = 0.0;
    EXPECT_EQ(derive_quantities(p).eta, 0.0);
}

TEST(DeriveQuantities, PowerEtaInverse)
{
    auto p = reference_parameters();
    p.drive.power = 0.123;
    const auto d = derive_quantities(p);
    EXPECT_NEAR(power_from_eta(d, d.eta), 0.123, 1e-15);
    EXPECT_NEAR(eta_from_power(d, 0.123), d.eta, 1e-6 * d.eta);
}

TEST(DeriveQuantities, GammaMOverKappa)
{
    const auto d = derive_quantities(reference_parameters());
    EXPECT_NEAR(d.gamma_m / d.kappa, 2.0e-5, 2.0e-7);
}

TEST(DeriveQuantities, ZetaDefaultsToXi)
{
    const auto d = derive_quantities(reference_parameters());
    EXPECT_EQ(d.zeta, d.xi);
    auto p = reference_parameters();
    p.bec.zeta = 100.0;
    EXPECT_EQ(derive_quantities(p).zeta, 100.0);
    p.bec.present = false;
    EXPECT_EQ(derive_quantities(p).zeta, 0.0);
}

TEST(DeriveQuantities, BetaClosedForm)
{
    auto p = reference_parameters();
    p.bec.present = false;
    const auto bare = derive_quantities(p);
    EXPECT_NEAR(bare.beta, 1.6744e-3, 1e-6);
    EXPECT_DOUBLE_EQ(bare.beta, bare.xi * bare.xi / bare.omega_m);

    p.bec.present = true;
    p.bec.omega_sw = 0.0;
    const auto with_bec = derive_quantities(p);
    // omega_sw = 0: zeta^2 / Omega_c adds (omega_m / Omega_c) xi^2 / omega_m up to the gamma_c^2 term.
    EXPECT_NEAR(with_bec.beta / bare.beta, 1.0 + 1.0 / 0.4, 1e-5);
}

TEST(DeriveQuantities, PureAndRepeatable)
{
    auto p = reference_parameters();
    p.drive.power = 0.05;
    p.bec.omega_sw = kOmegaM;
    const auto a = derive_quantities(p);
    const auto b = derive_quantities(p);
    EXPECT_EQ(a.beta, b.beta);
    EXPECT_EQ(a.kappa, b.kappa);
    EXPECT_EQ(a.eta, b.eta);
    EXPECT_EQ(a.omega_B, b.omega_B);
}

TEST(ModelProperties, OmegaBAtLeastOmegaC)
{
    auto p = reference_parameters();
    for (double r : {0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0}) {
        p.bec.omega_sw = r * kOmegaM;
        const auto d = derive_quantities(p);
        if (r == 0.0)
            EXPECT_EQ(d.omega_B, d.Omega_c);
        else
            EXPECT_GT(d.omega_B, d.Omega_c);
    }
}

TEST(ModelProperties, BetaMonotonicity)
{
    auto p = reference_parameters();
    p.bec.omega_sw = 0.5 * kOmegaM;
    double prev = 0.0;
    for (double xi : {0.0, 100.0, 200.0, 400.0}) {
        p.xi_override = xi;
        const double beta = derive_quantities(p).beta;
        EXPECT_GT(beta, prev);
        prev = beta;
    }
    p.xi_override.reset();
    prev = 0.0;
    for (double zeta : {10.0, 100.0, 330.0, 1000.0}) {
        p.bec.zeta = zeta;
        const double beta = derive_quantities(p).beta;
        EXPECT_GT(beta, prev);
        prev = beta;
    }
    p.bec.zeta = 330.0;
    prev = INFINITY;
    for (double r : {0.0, 0.1, 0.5, 1.0, 2.0}) {
        p.bec.omega_sw = r * kOmegaM;
        const double beta = derive_quantities(p).beta;
        EXPECT_LT(beta, prev);
        prev = beta;
    }
}

TEST(Validation, RejectsBadFieldsByName)
{
    auto expect_field = [](SystemParams p, const char* field) {
        try {
            validate(p);
            FAIL() << "expected ConfigError for " << field;
        } catch (const ConfigError& e) {
            EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
        }
    };
    auto p = reference_parameters();
    p.cavity.length = 0;
    expect_field(p, "cavity.length");
    p = reference_parameters();
    p.mirror.temperature = -1;
    expect_field(p, "mirror.temperature");
    p = reference_parameters();
    p.bec.omega_R = 0;
    expect_field(p, "bec.omega_R");
    p.bec.present = false;
    EXPECT_NO_THROW(validate(p));
    p = reference_parameters();
    p.drive.power = -0.1;
    expect_field(p, "drive.power");
    p = reference_parameters();
    p.bec.zeta = -3;
    expect_field(p, "bec.zeta");
}

TEST(Microscopic, EmptyCondensate)
{
    MicroscopicBecParams m;
    m.atom_number = 0;
    m.g0 = 2e6;
    m.atomic_detuning = 1e9;
    m.scattering_length = 5e-9;
    m.atom_mass = 1.4e-25;
    m.waist = 25e-6;
    m.cavity_detuning = 3e7;
    const auto e = effective_from_microscopic(m, reference_parameters().cavity);
    EXPECT_EQ(e.zeta, 0.0);
    EXPECT_EQ(e.omega_sw, 0.0);
    EXPECT_EQ(e.delta_c, 3e7);
}

TEST(Microscopic, ScalingWithAtomNumber)
{
    MicroscopicBecParams m;
    m.atom_number = 1e5;
    m.g0 = 2e6;
    m.atomic_detuning = 1e9;
    m.scattering_length = 5e-9;
    m.atom_mass = 1.4e-25;
    m.waist = 25e-6;
    const auto cav = reference_parameters().cavity;
    const auto a = effective_from_microscopic(m, cav);
    m.atom_number *= 4;
    const auto b = effective_from_microscopic(m, cav);
    EXPECT_NEAR(b.zeta / a.zeta, 2.0, 1e-12);
    EXPECT_NEAR(b.omega_sw / a.omega_sw, 4.0, 1e-12);
}

TEST(Microscopic, HalfRootNTimesU0)
{
    MicroscopicBecParams m;
    m.atom_number = 4;
    m.g0 = 1.0;
    m.atomic_detuning = 1.0;  // U0 = 1 rad/s
    m.atom_mass = 1.0;
    m.waist = 1.0;
    const auto e = effective_from_microscopic(m, reference_parameters().cavity);
    EXPECT_DOUBLE_EQ(e.zeta, 1.0);
    EXPECT_DOUBLE_EQ(e.delta_c, 2.0);
}

TEST(Microscopic, RejectsZeroAtomicDetuning)
{
    MicroscopicBecParams m;
    m.atom_number = 10;
    m.g0 = 1;
    m.atomic_detuning = 0;
    m.atom_mass = 1;
    m.waist = 1;
    EXPECT_THROW(effective_from_microscopic(m, reference_parameters().cavity), ConfigError);
}

}  // namespace
}  // namespace optomech
