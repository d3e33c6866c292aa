#include "optomech/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "optomech/presets.hpp"

namespace optomech {

using nlohmann::json;

namespace {

// Typed access to one JSON object; remembers consumed keys so leftovers can be rejected.
class Section {
public:
    Section(const json* obj, std::string path) : obj_(obj), path_(std::move(path))
    {
        if (obj_ && !obj_->is_object())
            throw ConfigError(path_ + ": must be an object");
    }

    bool has(const std::string& key) const { return obj_ && obj_->contains(key); }

    std::optional<double> number(const std::string& key)
    {
        const json* v = take(key);
        if (!v || v->is_null())
            return std::nullopt;
        if (!v->is_number())
            throw ConfigError(field(key) + ": must be a number");
        const double x = v->get<double>();
        if (!std::isfinite(x))
            throw ConfigError(field(key) + ": must be finite");
        return x;
    }

    std::optional<bool> boolean(const std::string& key)
    {
        const json* v = take(key);
        if (!v)
            return std::nullopt;
        if (!v->is_boolean())
            throw ConfigError(field(key) + ": must be true or false");
        return v->get<bool>();
    }

    std::optional<std::string> text(const std::string& key)
    {
        const json* v = take(key);
        if (!v)
            return std::nullopt;
        if (!v->is_string())
            throw ConfigError(field(key) + ": must be a string");
        return v->get<std::string>();
    }

    const json* raw(const std::string& key) { return take(key); }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    void finish() const
    {
        if (!obj_)
            return;
        for (auto it = obj_->begin(); it != obj_->end(); ++it)
            if (!used_.count(it.key()))
                throw ConfigError(field(it.key()) + ": unknown field");
    }

private:
    const json* take(const std::string& key)
    {
        used_.insert(key);
        if (!obj_ || !obj_->contains(key))
            return nullptr;
        return &(*obj_)[key];
    }

    const json* obj_;
    std::string path_;
    std::set<std::string> used_;
};

AxisUnits parse_units(Section& root)
{
    const auto u = root.text("units");
    if (!u || *u == "si")
        return AxisUnits::si;
    if (*u == "normalized")
        return AxisUnits::normalized;
    throw ConfigError("units: expected \"si\" or \"normalized\"");
}

MicroscopicBecParams parse_microscopic(const json& obj)
{
    Section s(&obj, "bec.microscopic");
    MicroscopicBecParams m;
    auto req = [&](const char* key) {
        auto v = s.number(key);
        if (!v)
            throw ConfigError(s.field(key) + ": required");
        return *v;
    };
    m.atom_number = req("atom_number");
    m.g0 = req("g0");
    m.atomic_detuning = req("atomic_detuning");
    m.scattering_length = req("scattering_length");
    m.atom_mass = req("atom_mass");
    m.waist = req("waist");
    m.cavity_detuning = s.number("cavity_detuning").value_or(0.0);
    s.finish();
    return m;
}

SystemParams parse_system_params(const json& doc, AxisUnits units)
{
    const bool norm = units == AxisUnits::normalized;
    SystemParams p = reference_parameters();
    const json* none = nullptr;
    auto sub = [&](const char* key) { return doc.contains(key) ? &doc[key] : none; };

    Section cav(sub("cavity"), "cavity");
    p.cavity.length = cav.number("length").value_or(p.cavity.length);
    p.cavity.wavelength = cav.number("wavelength").value_or(p.cavity.wavelength);
    p.cavity.finesse = cav.number("finesse").value_or(p.cavity.finesse);
    const auto delta_c = cav.number("delta_c");
    cav.finish();

    Section mir(sub("mirror"), "mirror");
    p.mirror.mass = mir.number("mass").value_or(p.mirror.mass);
    p.mirror.omega_m = mir.number("omega_m").value_or(p.mirror.omega_m);
    p.mirror.quality = mir.number("quality").value_or(p.mirror.quality);
    p.mirror.temperature = mir.number("temperature").value_or(p.mirror.temperature);
    p.xi_override = mir.number("xi");
    mir.finish();

    if (!(p.cavity.length > 0) || !(p.cavity.finesse > 0))
        throw ConfigError("cavity: length and finesse must be > 0");
    const double kappa = constants::pi * constants::c / (p.cavity.length * p.cavity.finesse);
    const double omega_m = p.mirror.omega_m;
    const double freq_unit = norm ? omega_m : 1.0;
    const double rate_unit = norm ? kappa : 1.0;

    p.cavity.delta_c = delta_c.value_or(0.0) * rate_unit;

    Section bec(sub("bec"), "bec");
    p.bec.present = bec.boolean("present").value_or(true);
    if (auto z = bec.number("zeta"))
        p.bec.zeta = *z;
    if (auto w = bec.number("omega_sw"))
        p.bec.omega_sw = *w * freq_unit;
    if (auto w = bec.number("omega_R"))
        p.bec.omega_R = *w * freq_unit;
    else
        p.bec.omega_R = 0.1 * omega_m;
    if (auto g = bec.number("gamma_c"))
        p.bec.gamma_c = *g * rate_unit;
    else
        p.bec.gamma_c = 1e-3 * kappa;
    p.bec.temperature = bec.number("temperature").value_or(p.bec.temperature);
    p.bec_thermal = bec.boolean("thermal_noise").value_or(false);

    if (const json* micro = bec.raw("microscopic")) {
        if (bec.has("zeta") || bec.has("omega_sw"))
            throw ConfigError("bec.microscopic: conflicts with bec.zeta / bec.omega_sw");
        if (delta_c)
            throw ConfigError("bec.microscopic: conflicts with cavity.delta_c (derived from cavity_detuning)");
        const auto e = effective_from_microscopic(parse_microscopic(*micro), p.cavity);
        p.bec.zeta = e.zeta;
        p.bec.omega_sw = e.omega_sw;
        p.cavity.delta_c = e.delta_c;
    }
    bec.finish();

    Section drv(sub("drive"), "drive");
    p.drive.power = drv.number("power").value_or(0.0);
    drv.finish();

    validate(p);
    return p;
}

SweepSpec parse_sweep(const json& doc, const json& base_doc, AxisUnits units)
{
    Section s(&doc, "sweep");
    SweepSpec spec;
    spec.units = units;
    spec.name = s.text("name").value_or("sweep");

    const auto var = s.text("variable");
    if (!var)
        throw ConfigError("sweep.variable: required");
    const auto v = parse_sweep_variable(*var);
    if (!v)
        throw ConfigError("sweep.variable: unknown '" + *var
                          + "' (expected delta_c, power, Delta_effective, omega_sw or xi)");
    spec.variable = *v;

    const auto lo = s.number("lo");
    const auto hi = s.number("hi");
    if (!lo)
        throw ConfigError("sweep.lo: required");
    if (!hi)
        throw ConfigError("sweep.hi: required");
    spec.lo = *lo;
    spec.hi = *hi;

    if (const json* pts = s.raw("points")) {
        if (!pts->is_number_integer())
            throw ConfigError("sweep.points: must be an integer");
        spec.points = pts->get<int>();
    }

    const auto mode = s.text("mode").value_or("mean_field");
    if (mode == "mean_field")
        spec.mode = SweepMode::mean_field;
    else if (mode == "full")
        spec.mode = SweepMode::full;
    else
        throw ConfigError("sweep.mode: expected \"mean_field\" or \"full\"");

    const auto bec = s.text("bec").value_or("present");
    if (bec == "present")
        spec.bec = BecSelection::present;
    else if (bec == "absent")
        spec.bec = BecSelection::absent;
    else if (bec == "both")
        spec.bec = BecSelection::both;
    else
        throw ConfigError("sweep.bec: expected \"present\", \"absent\" or \"both\"");

    if (const json* variants = s.raw("variants")) {
        if (!variants->is_array())
            throw ConfigError("sweep.variants: must be an array");
        for (std::size_t i = 0; i < variants->size(); ++i) {
            const std::string path = "sweep.variants[" + std::to_string(i) + "]";
            json patch = (*variants)[i];
            if (!patch.is_object())
                throw ConfigError(path + ": must be an object");
            if (!patch.contains("label") || !patch["label"].is_string())
                throw ConfigError(path + ".label: required string");
            SweepVariant variant;
            variant.label = patch["label"].get<std::string>();
            patch.erase("label");
            if (patch.contains("units") || patch.contains("sweep"))
                throw ConfigError(path + ": may only override cavity, mirror, bec and drive");
            json merged = base_doc;
            merged.merge_patch(patch);
            try {
                variant.params = parse_system_params(merged, units);
            } catch (const ConfigError& e) {
                throw ConfigError(path + "." + e.what());
            }
            spec.variants.push_back(std::move(variant));
        }
    }
    s.finish();

    if (spec.variants.empty())
        spec.variants.push_back({"base", parse_system_params(base_doc, units)});
    validate(spec);
    return spec;
}

}  // namespace

Config parse_config(const json& doc)
{
    if (!doc.is_object())
        throw ConfigError("config: top level must be an object");
    Section root(&doc, "");
    Config cfg;
    cfg.units = parse_units(root);
    root.raw("cavity");
    root.raw("mirror");
    root.raw("bec");
    root.raw("drive");
    const json* sweep = root.raw("sweep");
    root.finish();

    json base = doc;
    base.erase("sweep");
    cfg.params = parse_system_params(base, cfg.units);
    if (sweep)
        cfg.sweep = parse_sweep(*sweep, base, cfg.units);
    return cfg;
}

Config load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: " + path.string() + ": " + e.what());
    }
    return parse_config(doc);
}

json to_json(const SystemParams& p)
{
    json j;
    j["units"] = "si";
    j["cavity"] = {{"length", p.cavity.length},
                   {"wavelength", p.cavity.wavelength},
                   {"finesse", p.cavity.finesse},
                   {"delta_c", p.cavity.delta_c}};
    j["mirror"] = {{"mass", p.mirror.mass},
                   {"omega_m", p.mirror.omega_m},
                   {"quality", p.mirror.quality},
                   {"temperature", p.mirror.temperature}};
    if (p.xi_override)
        j["mirror"]["xi"] = *p.xi_override;
    j["bec"] = {{"present", p.bec.present},
                {"zeta", p.bec.zeta ? json(*p.bec.zeta) : json(nullptr)},
                {"omega_sw", p.bec.omega_sw},
                {"omega_R", p.bec.omega_R},
                {"gamma_c", p.bec.gamma_c},
                {"temperature", p.bec.temperature},
                {"thermal_noise", p.bec_thermal}};
    j["drive"] = {{"power", p.drive.power}};
    return j;
}

json to_json(const DerivedQuantities& d)
{
    return {{"omega_c", d.omega_c},   {"kappa", d.kappa},       {"eta", d.eta},
            {"xi", d.xi},             {"zeta", d.zeta},         {"omega_m", d.omega_m},
            {"gamma_m", d.gamma_m},   {"omega_sw", d.omega_sw}, {"gamma_c", d.gamma_c},
            {"Omega_c", d.Omega_c},   {"omega_B", d.omega_B},   {"delta_omega", d.delta_omega},
            {"delta_c", d.delta_c},   {"nbar", d.nbar},         {"nbar_c", d.nbar_c},
            {"beta", d.beta},         {"bec_present", d.bec_present},
            {"bec_thermal", d.bec_thermal}};
}

json to_json(const SweepSpec& s)
{
    json variants = json::array();
    for (const auto& v : s.variants)
        variants.push_back({{"label", v.label}, {"params", to_json(v.params)}});
    return {{"name", s.name},
            {"variable", std::string(to_string(s.variable))},
            {"axis", axis_name(s.variable, s.units)},
            {"units", std::string(to_string(s.units))},
            {"lo", s.lo},
            {"hi", s.hi},
            {"points", s.points},
            {"mode", std::string(to_string(s.mode))},
            {"bec", std::string(to_string(s.bec))},
            {"variants", variants}};
}

}  // namespace optomech
