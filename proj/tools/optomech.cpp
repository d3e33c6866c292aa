// optomech: steady states, stability, cooling and entanglement of a driven
// optomechanical cavity holding a condensate.
//
//   optomech point --config cfg.json [--out report.json]
//   optomech sweep --config cfg.json [--out rows.csv] [--format csv|json]
//   optomech figure fig5a [--out dir]
//   optomech threshold --config cfg.json
//
// Exit codes: 0 success, 1 invalid configuration or invocation, 2 numerical failure.

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "optomech/config.hpp"
#include "optomech/presets.hpp"
#include "optomech/report.hpp"
#include "optomech/steady_state.hpp"
#include "optomech/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

void write_text(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error(out_path + ": " + std::strerror(errno));
    out << text;
    if (!out)
        throw std::runtime_error(out_path + ": write failed");
}

int run_point(const std::string& config_path, const std::string& out_path)
{
    const auto cfg = optomech::load_config(config_path);
    const auto report = optomech::point_report(cfg.params);
    write_text(report.dump(2) + "\n", out_path);
    for (const auto& b : report["branches"])
        if (b["stability"] == "marginal") {
            std::cerr << "optomech: marginal stability, covariance not available\n";
            return kExitNumerical;
        }
    return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& out_path, const std::string& format_name)
{
    const auto format = optomech::parse_output_format(format_name);
    if (!format)
        throw optomech::ConfigError("--format: expected csv or json");
    const auto cfg = optomech::load_config(config_path);
    if (!cfg.sweep)
        throw optomech::ConfigError("sweep: block missing from configuration");
    const auto result = optomech::run_sweep(*cfg.sweep);
    if (out_path.empty())
        optomech::emit(result, *format, std::cout);
    else
        optomech::emit(result, *format, std::filesystem::path(out_path));
    return kExitOk;
}

int run_figure(const std::string& id, const std::string& out_dir)
{
    const auto spec = optomech::figure_preset(id);
    const auto result = optomech::run_sweep(spec);
    const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::filesystem::create_directories(dir);
    const auto path = dir / (id + ".csv");
    const auto bytes = optomech::emit(result, optomech::OutputFormat::csv, path);
    std::cerr << "wrote " << path.string() << " (" << bytes << " bytes, " << result.rows.size() << " rows)\n";
    return kExitOk;
}

int run_threshold(const std::string& config_path)
{
    const auto cfg = optomech::load_config(config_path);
    const auto w = optomech::bistability_window(cfg.params);
    if (!w) {
        std::cout << "no bistability window\n";
        return kExitOk;
    }
    std::printf("threshold_mW %.6f\nwindow_mW %.6f %.6f\n", w->P_low * 1e3, w->P_low * 1e3, w->P_high * 1e3);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Driven optomechanical cavity with a condensate: steady states, stability, cooling, entanglement"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv", figure_id;

    auto* point = app.add_subcommand("point", "Solve one configuration and print a JSON report");
    point->add_option("--config", config_path, "Configuration file (JSON)")->required();
    point->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "Run the sweep described in a configuration file");
    sweep->add_option("--config", config_path, "Configuration file (JSON)")->required();
    sweep->add_option("--out", out_path, "Output file (default stdout)");
    sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* figure = app.add_subcommand("figure", "Run a figure preset and write <id>.csv");
    figure->add_option("id", figure_id, "Preset id")->required()->check(CLI::IsMember(optomech::preset_ids()));
    figure->add_option("--out", out_path, "Output directory (default .)");

    auto* threshold = app.add_subcommand("threshold", "Print the bistability window in mW");
    threshold->add_option("--config", config_path, "Configuration file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*point)
            return run_point(config_path, out_path);
        if (*sweep)
            return run_sweep(config_path, out_path, format);
        if (*figure)
            return run_figure(figure_id, out_path);
        if (*threshold)
            return run_threshold(config_path);
    } catch (const optomech::ConfigError& e) {
        std::cerr << "optomech: " << e.what() << '\n';
        return kExitConfig;
    } catch (const optomech::NumericalError& e) {
        std::cerr << "optomech: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "optomech: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
