#include "optomech/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace optomech {

std::string_view to_string(SweepVariable v)
{
    switch (v) {
    case SweepVariable::delta_c: return "delta_c";
    case SweepVariable::power: return "power";
    case SweepVariable::Delta_effective: return "Delta_effective";
    case SweepVariable::omega_sw: return "omega_sw";
    case SweepVariable::xi: return "xi";
    }
    return "?";
}

std::string_view to_string(SweepMode m)
{
    return m == SweepMode::full ? "full" : "mean_field";
}

std::string_view to_string(BecSelection b)
{
    switch (b) {
    case BecSelection::present: return "present";
    case BecSelection::absent: return "absent";
    case BecSelection::both: return "both";
    }
    return "?";
}

std::string_view to_string(AxisUnits u)
{
    return u == AxisUnits::normalized ? "normalized" : "si";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view s)
{
    for (auto v : {SweepVariable::delta_c, SweepVariable::power, SweepVariable::Delta_effective,
                   SweepVariable::omega_sw, SweepVariable::xi})
        if (to_string(v) == s)
            return v;
    return std::nullopt;
}

std::string axis_name(SweepVariable v, AxisUnits u)
{
    const bool norm = u == AxisUnits::normalized;
    switch (v) {
    case SweepVariable::delta_c: return norm ? "delta_c_over_kappa" : "delta_c_rad_s";
    case SweepVariable::power: return "power_W";
    case SweepVariable::Delta_effective: return norm ? "Delta_over_omega_m" : "Delta_rad_s";
    case SweepVariable::omega_sw: return norm ? "omega_sw_over_omega_m" : "omega_sw_rad_s";
    case SweepVariable::xi: return "xi_rad_s";
    }
    return "x";
}

void validate(const SweepSpec& spec)
{
    if (spec.points < 2)
        throw ConfigError("sweep.points: must be >= 2");
    if (!(spec.lo < spec.hi))
        throw ConfigError("sweep.lo: must be < sweep.hi");
    if (spec.variants.empty())
        throw ConfigError("sweep.variants: at least one configuration required");
    for (std::size_t i = 0; i < spec.variants.size(); ++i) {
        const auto& v = spec.variants[i];
        if (v.label.empty())
            throw ConfigError("sweep.variants[" + std::to_string(i) + "].label: must not be empty");
        try {
            validate(v.params);
        } catch (const ConfigError& e) {
            throw ConfigError("sweep.variants[" + std::to_string(i) + "]." + e.what());
        }
    }
    const bool nonneg = spec.variable == SweepVariable::power || spec.variable == SweepVariable::omega_sw
                        || spec.variable == SweepVariable::xi;
    if (nonneg && spec.lo < 0)
        throw ConfigError("sweep.lo: must be >= 0 for " + std::string(to_string(spec.variable)));
}

namespace {

bool same_apart_from_bec(const SystemParams& a, const SystemParams& b)
{
    return a.cavity == b.cavity && a.mirror == b.mirror && a.drive == b.drive
           && a.xi_override == b.xi_override;
}

}  // namespace

std::vector<SweepSeries> expand_series(const SweepSpec& spec)
{
    std::vector<SweepSeries> out;
    const bool want_present = spec.bec != BecSelection::absent;
    const bool want_absent = spec.bec != BecSelection::present;

    if (want_present)
        for (const auto& v : spec.variants) {
            SweepSeries s{v.label, v.params};
            s.params.bec.present = true;
            out.push_back(std::move(s));
        }

    if (want_absent) {
        bool shared = true;
        for (const auto& v : spec.variants)
            shared = shared && same_apart_from_bec(v.params, spec.variants.front().params);

        std::vector<const SystemParams*> seen;
        for (const auto& v : spec.variants) {
            const bool dup = std::any_of(seen.begin(), seen.end(), [&](const SystemParams* p) {
                return same_apart_from_bec(*p, v.params);
            });
            if (dup)
                continue;
            seen.push_back(&v.params);
            SweepSeries s{shared ? std::string("no_bec") : v.label + ":no_bec", v.params};
            s.params.bec.present = false;
            out.push_back(std::move(s));
        }
    }
    return out;
}

SystemParams apply_sweep_value(const SystemParams& params, SweepVariable v, AxisUnits u, double x)
{
    SystemParams p = params;
    const bool norm = u == AxisUnits::normalized;
    switch (v) {
    case SweepVariable::delta_c: {
        const double kappa = constants::pi * constants::c / (p.cavity.length * p.cavity.finesse);
        p.cavity.delta_c = norm ? x * kappa : x;
        break;
    }
    case SweepVariable::power:
        p.drive.power = x;
        break;
    case SweepVariable::Delta_effective:
        // Handled by the caller; delta_c is implied by Delta.
        break;
    case SweepVariable::omega_sw:
        p.bec.omega_sw = norm ? x * p.mirror.omega_m : x;
        break;
    case SweepVariable::xi:
        p.xi_override = x;
        break;
    }
    return p;
}

std::optional<MeasureSet> measure_branch(const DerivedQuantities& d, MeanFieldBranch& branch,
                                         bool with_measures)
{
    const DriftMatrix A = drift_matrix(branch, d);
    branch.stability = assess_stability(A);
    if (branch.stability != Stability::stable || !with_measures)
        return std::nullopt;

    try {
        const CovarianceMatrix V = solve_lyapunov(A, diffusion_matrix(d));
        MeasureSet m;
        m.dn_m = mirror_phonons(V);
        m.dn_c = bogoliubov_excitations(V);
        m.en_mirror_field = log_negativity(reduce_bipartition(V, Bipartition::mirror_field)).log_negativity;
        m.en_atom_field = log_negativity(reduce_bipartition(V, Bipartition::atom_field)).log_negativity;
        m.en_mirror_atom = log_negativity(reduce_bipartition(V, Bipartition::mirror_atom)).log_negativity;
        return m;
    } catch (const NumericalError&) {
        branch.stability = Stability::marginal;
        return std::nullopt;
    }
}

unsigned default_thread_count()
{
    if (const char* env = std::getenv("OPTOMECH_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

double sweep_value(const SweepSpec& spec, int i)
{
    if (i == spec.points - 1)
        return spec.hi;
    return spec.lo + (spec.hi - spec.lo) * static_cast<double>(i) / (spec.points - 1);
}

std::vector<SweepRow> evaluate_point(const SweepSpec& spec, const SweepSeries& series,
                                     std::size_t series_index, double x)
{
    const bool full = spec.mode == SweepMode::full;
    const SystemParams p = apply_sweep_value(series.params, spec.variable, spec.units, x);
    const DerivedQuantities d = derive_quantities(p);

    std::vector<MeanFieldBranch> branches;
    if (spec.variable == SweepVariable::Delta_effective) {
        const double Delta = spec.units == AxisUnits::normalized ? x * d.omega_m : x;
        branches.push_back(branch_at_effective_detuning(d, Delta));
    } else {
        branches = solve_mean_field(d);
    }

    std::vector<SweepRow> rows;
    rows.reserve(branches.size());
    for (auto& b : branches) {
        SweepRow row;
        row.series = series_index;
        row.x = x;
        row.branch_count = static_cast<int>(branches.size());
        row.measures = measure_branch(d, b, full);
        row.branch = b;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, unsigned threads)
{
    validate(spec);

    SweepResult result;
    result.spec = spec;
    result.series = expand_series(spec);
    for (const auto& s : result.series)
        result.derived.push_back(derive_quantities(s.params));

    const std::size_t per_series = static_cast<std::size_t>(spec.points);
    const std::size_t total = per_series * result.series.size();
    std::vector<std::vector<SweepRow>> slots(total);

    auto work = [&](std::size_t k) {
        const std::size_t s = k / per_series;
        const int i = static_cast<int>(k % per_series);
        slots[k] = evaluate_point(spec, result.series[s], s, sweep_value(spec, i));
    };

    const unsigned workers = std::min<std::size_t>(threads, total);
    if (workers <= 1) {
        for (std::size_t k = 0; k < total; ++k)
            work(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < total; k = next++) {
                    try {
                        work(k);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        next = total;
                    }
                }
            });
        for (auto& th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    for (auto& slot : slots)
        for (auto& row : slot)
            result.rows.push_back(std::move(row));
    return result;
}

}  // namespace optomech
