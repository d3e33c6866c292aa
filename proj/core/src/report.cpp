#include "optomech/report.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "optomech/config.hpp"

namespace optomech {

using nlohmann::json;

std::optional<OutputFormat> parse_output_format(std::string_view s)
{
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "json")
        return OutputFormat::json;
    return std::nullopt;
}

std::string format_number(double x)
{
    if (!std::isfinite(x))
        return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

void write_csv(std::ostream& out, const SweepResult& result)
{
    out << "series," << axis_name(result.spec.variable, result.spec.units)
        << ",branch_count,branch,degenerate,n,Delta_rad_s,stability,dn_m,dn_c,EN_mf,EN_af,EN_ma\n";
    for (const auto& row : result.rows) {
        const auto& b = row.branch;
        out << result.series[row.series].label << ',' << format_number(row.x) << ',' << row.branch_count
            << ',' << to_string(b.branch) << ',' << (b.degenerate ? 1 : 0) << ',' << format_number(b.n) << ','
            << format_number(b.Delta) << ',' << to_string(b.stability);
        if (row.measures) {
            const auto& m = *row.measures;
            out << ',' << format_number(m.dn_m) << ',' << format_number(m.dn_c) << ','
                << format_number(m.en_mirror_field) << ',' << format_number(m.en_atom_field) << ','
                << format_number(m.en_mirror_atom);
        } else {
            out << ",,,,,";
        }
        out << '\n';
    }
}

namespace {

json branch_json(const MeanFieldBranch& b)
{
    return {{"branch", std::string(to_string(b.branch))},
            {"degenerate", b.degenerate},
            {"n", b.n},
            {"alpha", b.alpha},
            {"Delta", b.Delta},
            {"q_s", b.q_s},
            {"p_s", b.p_s},
            {"Q_s", b.Q_s},
            {"P_s", b.P_s},
            {"stability", std::string(to_string(b.stability))}};
}

json measures_json(const std::optional<MeasureSet>& m)
{
    if (!m)
        return {{"dn_m", nullptr}, {"dn_c", nullptr}, {"EN_mf", nullptr}, {"EN_af", nullptr}, {"EN_ma", nullptr}};
    return {{"dn_m", m->dn_m},
            {"dn_c", m->dn_c},
            {"EN_mf", m->en_mirror_field},
            {"EN_af", m->en_atom_field},
            {"EN_ma", m->en_mirror_atom}};
}

}  // namespace

json sweep_report(const SweepResult& result)
{
    json derived = json::object();
    for (std::size_t i = 0; i < result.series.size(); ++i)
        derived[result.series[i].label] = to_json(result.derived[i]);

    json rows = json::array();
    for (const auto& row : result.rows) {
        json r = branch_json(row.branch);
        r["series"] = result.series[row.series].label;
        r["x"] = row.x;
        r["branch_count"] = row.branch_count;
        r["measures"] = measures_json(row.measures);
        rows.push_back(std::move(r));
    }
    return {{"spec", to_json(result.spec)}, {"derived_quantities", derived}, {"rows", rows}};
}

std::size_t emit(const SweepResult& result, OutputFormat format, std::ostream& out)
{
    std::ostringstream buf;
    if (format == OutputFormat::csv)
        write_csv(buf, result);
    else
        buf << sweep_report(result).dump(2) << '\n';
    const std::string text = buf.str();
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw std::runtime_error("emit: write failed");
    return text.size();
}

std::size_t emit(const SweepResult& result, OutputFormat format, const std::filesystem::path& destination)
{
    errno = 0;
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error(destination.string() + ": " + std::strerror(errno));
    const std::size_t n = emit(result, format, out);
    out.close();
    if (!out)
        throw std::runtime_error(destination.string() + ": " + std::strerror(errno));
    return n;
}

json point_report(const SystemParams& params)
{
    const DerivedQuantities d = derive_quantities(params);
    json branches = json::array();
    for (auto b : solve_mean_field(d)) {
        const auto m = measure_branch(d, b, true);
        json j = branch_json(b);
        j["measures"] = measures_json(m);
        branches.push_back(std::move(j));
    }
    json window = nullptr;
    if (auto w = bistability_window(d, d.delta_c))
        window = {{"P_low_mW", w->P_low * 1e3},
                  {"P_high_mW", w->P_high * 1e3},
                  {"n_knee_low", w->n_knee_low},
                  {"n_knee_high", w->n_knee_high}};
    return {{"params", to_json(params)},
            {"derived_quantities", to_json(d)},
            {"bistability_window", window},
            {"branches", branches}};
}

}  // namespace optomech
