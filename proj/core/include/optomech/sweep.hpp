#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "optomech/gaussian_measures.hpp"
#include "optomech/linear_dynamics.hpp"
#include "optomech/model.hpp"
#include "optomech/steady_state.hpp"

namespace optomech {

enum class SweepVariable { delta_c, power, Delta_effective, omega_sw, xi };
enum class SweepMode { mean_field, full };
enum class BecSelection { present, absent, both };

/// How the swept values lo/hi (and the x column) are expressed. In normalized
/// units delta_c is in kappa, Delta_effective and omega_sw in omega_m; power (W)
/// and xi (rad/s) are absolute either way.
enum class AxisUnits { si, normalized };

std::string_view to_string(SweepVariable v);
std::string_view to_string(SweepMode m);
std::string_view to_string(BecSelection b);
std::string_view to_string(AxisUnits u);
std::optional<SweepVariable> parse_sweep_variable(std::string_view s);

/// Column name for the swept value, e.g. "delta_c_over_kappa".
std::string axis_name(SweepVariable v, AxisUnits u);

struct SweepVariant {
    std::string label;
    SystemParams params;
};

struct SweepSpec {
    std::string name;  // preset id or free text, carried into reports
    SweepVariable variable = SweepVariable::power;
    double lo = 0.0;
    double hi = 1.0;
    int points = 600;
    SweepMode mode = SweepMode::mean_field;
    BecSelection bec = BecSelection::present;
    AxisUnits units = AxisUnits::si;
    std::vector<SweepVariant> variants;
};

/// Throws ConfigError naming the offending field.
void validate(const SweepSpec& spec);

/// A variant with the BEC selection applied; one curve of the sweep.
struct SweepSeries {
    std::string label;
    SystemParams params;
};

/// Present-BEC series first (variant order), then absent-BEC series. Absent
/// series that differ from an earlier one only in condensate parameters are dropped.
std::vector<SweepSeries> expand_series(const SweepSpec& spec);

struct MeasureSet {
    double dn_m = 0.0;
    double dn_c = 0.0;
    double en_mirror_field = 0.0;
    double en_atom_field = 0.0;
    double en_mirror_atom = 0.0;
};

struct SweepRow {
    std::size_t series = 0;  // index into SweepResult::series
    double x = 0.0;          // swept value in spec units
    int branch_count = 0;
    MeanFieldBranch branch;
    std::optional<MeasureSet> measures;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepSeries> series;
    std::vector<DerivedQuantities> derived;  // per series, at the series' own parameters
    std::vector<SweepRow> rows;
};

/// Parameters of a series with the swept variable set to x (spec units).
SystemParams apply_sweep_value(const SystemParams& params, SweepVariable v, AxisUnits u, double x);

/// Fills branch.stability; returns the covariance-derived measures only when
/// the branch is Routh-Hurwitz stable. A singular or non-physical solve marks
/// the branch marginal.
std::optional<MeasureSet> measure_branch(const DerivedQuantities& d, MeanFieldBranch& branch,
                                         bool with_measures = true);

/// Reads OPTOMECH_THREADS (0 = serial); defaults to the hardware concurrency.
unsigned default_thread_count();

/// Rows are ordered by series, then ascending x, then ascending n. The output
/// does not depend on `threads`.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = default_thread_count());

}  // namespace optomech
