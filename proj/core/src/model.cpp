#include "optomech/model.hpp"

#include <cmath>

namespace optomech {

namespace {

void require(bool ok, const char* field, const char* what)
{
    if (!ok)
        throw ConfigError(std::string(field) + ": " + what);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void validate(const SystemParams& p)
{
    require(finite(p.cavity.length) && p.cavity.length > 0, "cavity.length", "must be > 0");
    require(finite(p.cavity.wavelength) && p.cavity.wavelength > 0, "cavity.wavelength", "must be > 0");
    require(finite(p.cavity.finesse) && p.cavity.finesse > 0, "cavity.finesse", "must be > 0");
    require(finite(p.cavity.delta_c), "cavity.delta_c", "must be finite");

    require(finite(p.mirror.mass) && p.mirror.mass > 0, "mirror.mass", "must be > 0");
    require(finite(p.mirror.omega_m) && p.mirror.omega_m > 0, "mirror.omega_m", "must be > 0");
    require(finite(p.mirror.quality) && p.mirror.quality > 0, "mirror.quality", "must be > 0");
    require(finite(p.mirror.temperature) && p.mirror.temperature >= 0, "mirror.temperature", "must be >= 0");

    if (p.bec.zeta)
        require(finite(*p.bec.zeta) && *p.bec.zeta >= 0, "bec.zeta", "must be >= 0");
    require(finite(p.bec.omega_sw) && p.bec.omega_sw >= 0, "bec.omega_sw", "must be >= 0");
    require(finite(p.bec.omega_R) && p.bec.omega_R >= 0, "bec.omega_R", "must be >= 0");
    if (p.bec.present)
        require(p.bec.omega_R > 0, "bec.omega_R", "must be > 0 when the condensate is present");
    require(finite(p.bec.gamma_c) && p.bec.gamma_c >= 0, "bec.gamma_c", "must be >= 0");
    require(finite(p.bec.temperature) && p.bec.temperature >= 0, "bec.temperature", "must be >= 0");

    require(finite(p.drive.power) && p.drive.power >= 0, "drive.power", "must be >= 0");
    if (p.xi_override)
        require(finite(*p.xi_override) && *p.xi_override >= 0, "mirror.xi", "must be >= 0");
}

double bose_occupation(double omega, double temperature)
{
    if (temperature <= 0)
        return 0.0;
    const double x = constants::hbar * omega / (constants::k_B * temperature);
    if (x > kBoseExponentFloor)
        return 0.0;
    return 1.0 / std::expm1(x);
}

double radiation_pressure_rate(const CavityParams& cavity, const MirrorParams& mirror)
{
    const double omega_c = 2.0 * constants::pi * constants::c / cavity.wavelength;
    return omega_c / cavity.length * std::sqrt(constants::hbar / (mirror.mass * mirror.omega_m));
}

DerivedQuantities derive_quantities(const SystemParams& p)
{
    validate(p);
    using namespace constants;

    DerivedQuantities d;
    d.omega_c = 2.0 * pi * c / p.cavity.wavelength;
    d.kappa = pi * c / (p.cavity.length * p.cavity.finesse);
    d.eta = std::sqrt(2.0 * p.drive.power * d.kappa / (hbar * d.omega_c));
    d.xi = p.xi_override ? *p.xi_override : radiation_pressure_rate(p.cavity, p.mirror);
    d.omega_m = p.mirror.omega_m;
    d.gamma_m = p.mirror.omega_m / p.mirror.quality;
    d.delta_c = p.cavity.delta_c;
    d.nbar = bose_occupation(p.mirror.omega_m, p.mirror.temperature);

    d.bec_present = p.bec.present;
    d.bec_thermal = p.bec_thermal;
    d.omega_sw = p.bec.omega_sw;
    d.gamma_c = p.bec.gamma_c;
    d.Omega_c = 4.0 * p.bec.omega_R + 0.5 * p.bec.omega_sw;
    d.omega_B = std::sqrt(d.Omega_c * (d.Omega_c + d.omega_sw));
    d.delta_omega = d.omega_B - d.omega_m;
    d.nbar_c = bose_occupation(d.omega_B, p.bec.temperature);

    if (p.bec.present)
        d.zeta = p.bec.zeta ? *p.bec.zeta : radiation_pressure_rate(p.cavity, p.mirror);

    d.beta = d.xi * d.xi / d.omega_m;
    if (d.zeta > 0) {
        const double stiffness = d.Omega_c + d.omega_sw + d.gamma_c * d.gamma_c / d.Omega_c;
        d.beta += d.zeta * d.zeta / stiffness;
    }
    return d;
}

double power_from_eta(const DerivedQuantities& d, double eta)
{
    return eta * eta * constants::hbar * d.omega_c / (2.0 * d.kappa);
}

double eta_from_power(const DerivedQuantities& d, double power)
{
    return std::sqrt(2.0 * power * d.kappa / (constants::hbar * d.omega_c));
}

EffectiveBecCouplings effective_from_microscopic(const MicroscopicBecParams& m,
                                                 const CavityParams& cavity)
{
    require(std::isfinite(m.atom_number) && m.atom_number >= 0, "microscopic.atom_number", "must be >= 0");
    require(std::isfinite(m.atomic_detuning) && m.atomic_detuning != 0, "microscopic.atomic_detuning",
            "must be nonzero (dispersive regime)");
    require(std::isfinite(m.waist) && m.waist > 0, "microscopic.waist", "must be > 0");
    require(std::isfinite(m.atom_mass) && m.atom_mass > 0, "microscopic.atom_mass", "must be > 0");
    require(std::isfinite(cavity.length) && cavity.length > 0, "cavity.length", "must be > 0");

    const double U0 = m.g0 * m.g0 / m.atomic_detuning;
    EffectiveBecCouplings e;
    e.zeta = 0.5 * std::sqrt(m.atom_number) * U0;
    e.omega_sw = 8.0 * constants::pi * constants::hbar * m.scattering_length * m.atom_number
                 / (m.atom_mass * cavity.length * m.waist * m.waist);
    e.delta_c = m.cavity_detuning + 0.5 * m.atom_number * U0;
    return e;
}

}  // namespace optomech
