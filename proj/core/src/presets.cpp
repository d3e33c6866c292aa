#include "optomech/presets.hpp"

#include <functional>
#include <map>

namespace optomech {

SystemParams reference_parameters()
{
    SystemParams p;
    p.cavity.length = 1e-3;
    p.cavity.wavelength = 1064e-9;
    p.cavity.finesse = 3e4;
    p.mirror.mass = 50e-12;
    p.mirror.omega_m = 2.0 * constants::pi * 1e7;
    p.mirror.quality = 1e5;
    p.mirror.temperature = 0.4;

    const double kappa = constants::pi * constants::c / (p.cavity.length * p.cavity.finesse);
    p.bec.present = true;
    p.bec.omega_R = 0.1 * p.mirror.omega_m;
    p.bec.gamma_c = 1e-3 * kappa;
    p.bec.temperature = 1e-7;
    return p;
}

namespace {

double kappa_of(const SystemParams& p)
{
    return constants::pi * constants::c / (p.cavity.length * p.cavity.finesse);
}

SweepVariant with_omega_sw(const SystemParams& base, double ratio, std::string label)
{
    SweepVariant v{std::move(label), base};
    v.params.bec.omega_sw = ratio * base.mirror.omega_m;
    return v;
}

// Photon number against delta_c / kappa at fixed drive, three interaction strengths.
SweepSpec detuning_curves(std::string id, double power)
{
    SystemParams base = reference_parameters();
    base.drive.power = power;
    SweepSpec s;
    s.name = std::move(id);
    s.variable = SweepVariable::delta_c;
    s.units = AxisUnits::normalized;
    s.lo = -2.0;
    s.hi = 8.0;
    s.mode = SweepMode::mean_field;
    s.bec = BecSelection::both;
    s.variants = {with_omega_sw(base, 0.0, "omega_sw=0"), with_omega_sw(base, 0.5, "omega_sw=0.5"),
                  with_omega_sw(base, 1.0, "omega_sw=1")};
    return s;
}

// Cooling and entanglement against Delta / omega_m at 50 mW and 0.4 K.
SweepSpec cooling_curves(std::string id, std::vector<double> omega_sw_ratios)
{
    SystemParams base = reference_parameters();
    base.drive.power = 50e-3;
    SweepSpec s;
    s.name = std::move(id);
    s.variable = SweepVariable::Delta_effective;
    s.units = AxisUnits::normalized;
    s.lo = 0.0;
    s.hi = 3.0;
    s.mode = SweepMode::full;
    s.bec = BecSelection::both;
    for (double r : omega_sw_ratios) {
        std::string label = "omega_sw=" + std::to_string(r);
        label.erase(label.find_last_not_of('0') + 1);
        if (label.back() == '.')
            label.pop_back();
        s.variants.push_back(with_omega_sw(base, r, label));
    }
    return s;
}

SweepSpec power_curves(std::string id, double delta_over_kappa, double hi)
{
    SweepSpec s;
    s.name = std::move(id);
    s.variable = SweepVariable::power;
    s.units = AxisUnits::normalized;
    s.lo = 0.0;
    s.hi = hi;
    s.mode = SweepMode::mean_field;
    SystemParams base = reference_parameters();
    base.cavity.delta_c = delta_over_kappa * kappa_of(base);
    s.variants = {{"base", base}};
    return s;
}

const std::map<std::string, std::function<SweepSpec()>, std::less<>>& registry()
{
    static const std::map<std::string, std::function<SweepSpec()>, std::less<>> presets = {
        {"fig2a", [] { return detuning_curves("fig2a", 10e-3); }},
        {"fig2b", [] { return detuning_curves("fig2b", 50e-3); }},
        {"fig2c", [] { return detuning_curves("fig2c", 250e-3); }},
        {"fig2d",
         [] {
             SweepSpec s = power_curves("fig2d", 4.0, 0.3);
             const SystemParams base = s.variants.front().params;
             s.bec = BecSelection::both;
             s.variants = {with_omega_sw(base, 0.0, "omega_sw=0"), with_omega_sw(base, 0.5, "omega_sw=0.5"),
                           with_omega_sw(base, 1.0, "omega_sw=1")};
             return s;
         }},
        {"fig3",
         [] {
             SweepSpec s = power_curves("fig3", 3.0, 0.2);
             const SystemParams base = s.variants.front().params;
             s.bec = BecSelection::present;
             s.variants = {with_omega_sw(base, 0.01, "omega_sw=0.01"), with_omega_sw(base, 1.0, "omega_sw=1")};
             return s;
         }},
        {"fig4",
         [] {
             SweepSpec s = power_curves("fig4", 5.0, 0.7);
             SystemParams base = s.variants.front().params;
             base.bec.zeta = kReferenceCoupling;
             base.bec.omega_sw = 0.1 * base.mirror.omega_m;
             s.bec = BecSelection::present;
             s.variants.clear();
             for (auto [factor, label] : {std::pair{0.0, "xi=0"}, std::pair{1.0, "xi=xi0"}, std::pair{2.0, "xi=2xi0"}}) {
                 SweepVariant v{label, base};
                 v.params.xi_override = factor * kReferenceCoupling;
                 s.variants.push_back(v);
             }
             return s;
         }},
        {"fig5a", [] { return cooling_curves("fig5a", {2.0}); }},
        {"fig5b", [] { return cooling_curves("fig5b", {1.0}); }},
        {"fig5c", [] { return cooling_curves("fig5c", {0.5}); }},
        {"fig6a", [] { return cooling_curves("fig6a", {2.0}); }},
        {"fig6b", [] { return cooling_curves("fig6b", {1.0}); }},
        {"fig6c", [] { return cooling_curves("fig6c", {0.5}); }},
        {"fig7", [] { return cooling_curves("fig7", {0.0, 0.5, 1.0}); }},
    };
    return presets;
}

}  // namespace

const std::vector<std::string>& preset_ids()
{
    static const std::vector<std::string> ids = {"fig2a", "fig2b", "fig2c", "fig2d", "fig3",
                                                 "fig4", "fig5a", "fig5b", "fig5c", "fig6a",
                                                 "fig6b", "fig6c", "fig7"};
    return ids;
}

SweepSpec figure_preset(std::string_view id)
{
    const auto& r = registry();
    auto it = r.find(id);
    if (it == r.end())
        throw ConfigError("figure: unknown preset id '" + std::string(id) + "'");
    return it->second();
}

}  // namespace optomech
