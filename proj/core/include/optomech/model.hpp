#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace optomech {

/// Raised for inputs that violate a parameter invariant. The message names the field.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical solve cannot produce a trustworthy result
/// (singular Lyapunov system, non-physical covariance, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace constants {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_B = 1.380649e-23;      // J / K
inline constexpr double c = 2.99792458e8;        // m / s
inline constexpr double pi = 3.14159265358979323846;
}  // namespace constants

struct CavityParams {
    double length = 1e-3;          // m
    double wavelength = 1064e-9;   // m
    double finesse = 3e4;
    double delta_c = 0.0;          // effective Stark-shifted detuning, rad/s

    bool operator==(const CavityParams&) const = default;
};

struct MirrorParams {
    double mass = 50e-12;                          // kg (50 ng)
    double omega_m = 2.0 * constants::pi * 1e7;    // rad/s
    double quality = 1e5;                          // gamma_m = omega_m / Q
    double temperature = 0.0;                      // K

    bool operator==(const MirrorParams&) const = default;
};

/// Bogoliubov side mode of the condensate. When `zeta` is unset the coupling
/// defaults to the mirror radiation-pressure rate xi computed from MirrorParams.
struct BecParams {
    bool present = true;
    std::optional<double> zeta;   // rad/s
    double omega_sw = 0.0;        // s-wave scattering frequency, rad/s
    double omega_R = 0.0;         // recoil frequency, rad/s
    double gamma_c = 0.0;         // damping of the density excitation, rad/s
    double temperature = 0.0;     // K, only used with SystemParams::bec_thermal

    bool operator==(const BecParams&) const = default;
};

/// Microscopic condensate description. Converted to (zeta, omega_sw, delta_c) by
/// effective_from_microscopic. The atomic linewidth and pump frequency only
/// justify the dispersive regime and are not needed numerically.
struct MicroscopicBecParams {
    double atom_number = 0.0;
    double g0 = 0.0;                // vacuum Rabi frequency, rad/s
    double atomic_detuning = 0.0;   // Delta_a = omega_p - omega_a, rad/s
    double scattering_length = 0.0; // m
    double atom_mass = 0.0;         // kg
    double waist = 0.0;             // m
    double cavity_detuning = 0.0;   // bare Delta_c = omega_c - omega_p, rad/s
};

struct DriveParams {
    double power = 0.0;  // W

    bool operator==(const DriveParams&) const = default;
};

struct SystemParams {
    CavityParams cavity;
    MirrorParams mirror;
    BecParams bec;
    DriveParams drive;
    /// Replaces the formula value of xi (e.g. xi = 0 for an infinitely heavy mirror).
    std::optional<double> xi_override;
    /// Use gamma_c (2 n_c + 1) for the condensate noise instead of bare gamma_c.
    bool bec_thermal = false;

    bool operator==(const SystemParams&) const = default;
};

/// Everything downstream needs, in rad/s unless noted. Absent BEC is encoded as zeta = 0.
struct DerivedQuantities {
    double omega_c = 0.0;
    double kappa = 0.0;
    double eta = 0.0;           // amplitude drive rate
    double xi = 0.0;
    double zeta = 0.0;
    double omega_m = 0.0;
    double gamma_m = 0.0;
    double omega_sw = 0.0;
    double gamma_c = 0.0;
    double Omega_c = 0.0;
    double omega_B = 0.0;
    double delta_omega = 0.0;   // omega_B - omega_m, signed
    double delta_c = 0.0;
    double nbar = 0.0;          // mirror bath occupation
    double nbar_c = 0.0;        // condensate bath occupation (bec_thermal only)
    double beta = 0.0;          // detuning pull per photon: Delta = delta_c - beta n
    bool bec_present = false;
    bool bec_thermal = false;
};

/// Throws ConfigError naming the first offending field.
void validate(const SystemParams& params);

/// Bose occupation 1/(exp(hbar omega / k_B T) - 1). Returns 0 for T = 0 and for
/// hbar omega / k_B T > kBoseExponentFloor, where exp() would overflow.
double bose_occupation(double omega, double temperature);
inline constexpr double kBoseExponentFloor = 700.0;

/// Radiation-pressure rate (omega_c / L) sqrt(hbar / (m omega_m)).
double radiation_pressure_rate(const CavityParams& cavity, const MirrorParams& mirror);

DerivedQuantities derive_quantities(const SystemParams& params);

/// Drive power (W) that produces amplitude rate eta.
double power_from_eta(const DerivedQuantities& d, double eta);
double eta_from_power(const DerivedQuantities& d, double power);

struct EffectiveBecCouplings {
    double zeta = 0.0;
    double omega_sw = 0.0;
    double delta_c = 0.0;
};

/// zeta = sqrt(N) U0 / 2, omega_sw = 8 pi hbar a_s N / (m0 L w^2), delta_c = Delta_c + N U0 / 2
/// with U0 = g0^2 / Delta_a.
EffectiveBecCouplings effective_from_microscopic(const MicroscopicBecParams& micro,
                                                 const CavityParams& cavity);

}  // namespace optomech
