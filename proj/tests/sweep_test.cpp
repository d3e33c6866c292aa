#include <cmath>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "optomech/presets.hpp"
#include "optomech/sweep.hpp"

namespace optomech {
namespace {

bool rows_equal(const SweepRow& a, const SweepRow& b)
{
    const bool measures_equal = a.measures.has_value() == b.measures.has_value()
                                && (!a.measures
                                    || (a.measures->dn_m == b.measures->dn_m && a.measures->dn_c == b.measures->dn_c
                                        && a.measures->en_mirror_field == b.measures->en_mirror_field
                                        && a.measures->en_atom_field == b.measures->en_atom_field
                                        && a.measures->en_mirror_atom == b.measures->en_mirror_atom));
    return a.series == b.series && a.x == b.x && a.branch_count == b.branch_count && a.branch.n == b.branch.n
           && a.branch.Delta == b.branch.Delta && a.branch.stability == b.branch.stability && measures_equal;
}

SweepSpec small_full_sweep()
{
    auto spec = figure_preset("fig5a");
    spec.points = 40;
    return spec;
}

TEST(Presets, AllIdsBuildAndValidate)
{
    EXPECT_EQ(preset_ids().size(), 13u);
    for (const auto& id : preset_ids()) {
        const auto spec = figure_preset(id);
        EXPECT_EQ(spec.name, id);
        EXPECT_NO_THROW(validate(spec)) << id;
    }
    EXPECT_THROW(figure_preset("fig9"), ConfigError);
}

TEST(Presets, ReferenceDevice)
{
    const auto p = reference_parameters();
    const auto d = derive_quantities(p);
    EXPECT_EQ(p.bec.omega_R, 0.1 * p.mirror.omega_m);
    EXPECT_NEAR(d.gamma_c, 1e-3 * d.kappa, 1e-9 * d.kappa);
    EXPECT_EQ(p.mirror.temperature, 0.4);
    EXPECT_EQ(p.drive.power, 0.0);
}

TEST(Presets, SwitchingFrequencyVariants)
{
    const auto spec = figure_preset("fig2d");
    ASSERT_EQ(spec.variants.size(), 3u);
    const double wm = reference_parameters().mirror.omega_m;
    EXPECT_EQ(spec.variants[0].params.bec.omega_sw, 0.0);
    EXPECT_EQ(spec.variants[1].params.bec.omega_sw, 0.5 * wm);
    EXPECT_EQ(spec.variants[2].params.bec.omega_sw, 1.0 * wm);
    EXPECT_EQ(spec.bec, BecSelection::both);
    EXPECT_EQ(spec.variable, SweepVariable::power);
}

TEST(Series, NoBecSeriesDeduplicated)
{
    const auto series = expand_series(figure_preset("fig2d"));
    ASSERT_EQ(series.size(), 4u);
    EXPECT_EQ(series.back().label, "no_bec");
    EXPECT_FALSE(series.back().params.bec.present);
    for (int i = 0; i < 3; ++i)
        EXPECT_TRUE(series[i].params.bec.present);
}

TEST(Series, DistinctVariantsKeepOwnBaseline)
{
    auto spec = figure_preset("fig4");
    spec.bec = BecSelection::both;
    const auto series = expand_series(spec);
    ASSERT_EQ(series.size(), 6u);
    EXPECT_EQ(series[3].label, spec.variants[0].label + ":no_bec");
}

TEST(Sweep, ParallelMatchesSerial)
{
    const auto spec = small_full_sweep();
    const auto serial = run_sweep(spec, 0);
    const auto parallel = run_sweep(spec, 8);
    ASSERT_EQ(serial.rows.size(), parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i)
        EXPECT_TRUE(rows_equal(serial.rows[i], parallel.rows[i])) << i;
}

TEST(Sweep, Deterministic)
{
    auto spec = figure_preset("fig2b");
    spec.points = 101;
    const auto a = run_sweep(spec, 4);
    const auto b = run_sweep(spec, 4);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        EXPECT_TRUE(rows_equal(a.rows[i], b.rows[i]));
}

TEST(Sweep, RowOrdering)
{
    auto spec = figure_preset("fig2c");
    spec.points = 201;
    const auto r = run_sweep(spec, 3);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        const auto& a = r.rows[i - 1];
        const auto& b = r.rows[i];
        ASSERT_LE(a.series, b.series);
        if (a.series == b.series) {
            ASSERT_LE(a.x, b.x);
            if (a.x == b.x)
                ASSERT_LT(a.branch.n, b.branch.n);
        }
    }
    bool saw_three = false;
    for (const auto& row : r.rows)
        saw_three = saw_three || row.branch_count == 3;
    EXPECT_TRUE(saw_three);
}

TEST(Sweep, EffectiveDetuningMode)
{
    const auto spec = small_full_sweep();
    const auto r = run_sweep(spec, 2);
    ASSERT_EQ(r.rows.size(), 2u * 40u);
    const double wm = reference_parameters().mirror.omega_m;
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.branch_count, 1);
        EXPECT_NEAR(row.branch.Delta, row.x * wm, 1e-9 * wm);
        if (row.branch.stability == Stability::stable)
            EXPECT_TRUE(row.measures.has_value());
        else
            EXPECT_FALSE(row.measures.has_value());
    }
}

TEST(Sweep, MeanFieldModeHasNoMeasures)
{
    auto spec = figure_preset("fig3");
    spec.points = 50;
    for (const auto& row : run_sweep(spec).rows) {
        EXPECT_FALSE(row.measures.has_value());
        EXPECT_NE(row.branch.stability, Stability::unknown);
    }
}

TEST(Sweep, MirrorAtomEntanglementVanishes)
{
    auto spec = figure_preset("fig7");
    spec.points = 120;
    int measured_points = 0;
    for (const auto& row : run_sweep(spec).rows)
        if (row.measures) {
            ++measured_points;
            EXPECT_LE(row.measures->en_mirror_atom, 1e-12) << row.x;
        }
    EXPECT_GT(measured_points, 300);
}

TEST(Sweep, TrivialTwoPointSweep)
{
    SweepSpec spec;
    spec.name = "trivial";
    spec.variable = SweepVariable::power;
    spec.lo = 0.0;
    spec.hi = 0.01;
    spec.points = 2;
    spec.bec = BecSelection::absent;
    auto p = reference_parameters();
    p.xi_override = 0.0;
    p.bec.present = false;
    spec.variants.push_back({"flat", p});
    const auto r = run_sweep(spec);
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_EQ(r.rows[0].x, 0.0);
    EXPECT_EQ(r.rows[1].x, 0.01);
    EXPECT_EQ(r.rows[0].branch.n, 0.0);
    EXPECT_EQ(r.derived[0].beta, 0.0);
    const auto& d = r.derived[0];
    EXPECT_NEAR(r.rows[1].branch.n, eta_from_power(d, 0.01) * eta_from_power(d, 0.01) / (d.kappa * d.kappa),
                1e-12 * r.rows[1].branch.n);
}

TEST(Sweep, InvalidSpecNamesField)
{
    auto expect_message = [](SweepSpec spec, const std::string& field) {
        try {
            run_sweep(spec);
            FAIL() << "expected ConfigError mentioning " << field;
        } catch (const ConfigError& e) {
            EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
        }
    };
    auto spec = figure_preset("fig3");
    spec.points = 1;
    expect_message(spec, "sweep.points");
    spec = figure_preset("fig3");
    spec.hi = spec.lo;
    expect_message(spec, "sweep.lo");
    spec = figure_preset("fig3");
    spec.lo = -1;
    expect_message(spec, "sweep.lo");
    spec = figure_preset("fig3");
    spec.variants.clear();
    expect_message(spec, "sweep.variants");
    spec = figure_preset("fig3");
    spec.variants[1].params.cavity.finesse = -2;
    expect_message(spec, "sweep.variants[1].cavity.finesse");
}

TEST(Sweep, ApplyValueUnits)
{
    const auto p = reference_parameters();
    const double kappa = derive_quantities(p).kappa;
    EXPECT_NEAR(apply_sweep_value(p, SweepVariable::delta_c, AxisUnits::normalized, 2.0).cavity.delta_c, 2 * kappa,
                1e-9 * kappa);
    EXPECT_EQ(apply_sweep_value(p, SweepVariable::delta_c, AxisUnits::si, 5.0).cavity.delta_c, 5.0);
    EXPECT_EQ(apply_sweep_value(p, SweepVariable::omega_sw, AxisUnits::normalized, 0.5).bec.omega_sw,
              0.5 * p.mirror.omega_m);
    EXPECT_EQ(apply_sweep_value(p, SweepVariable::xi, AxisUnits::si, 0.0).xi_override.value(), 0.0);
    EXPECT_EQ(apply_sweep_value(p, SweepVariable::power, AxisUnits::si, 0.2).drive.power, 0.2);
}

TEST(Sweep, NamesRoundTrip)
{
    for (auto v : {SweepVariable::delta_c, SweepVariable::power, SweepVariable::Delta_effective,
                   SweepVariable::omega_sw, SweepVariable::xi})
        EXPECT_EQ(parse_sweep_variable(to_string(v)), v);
    EXPECT_FALSE(parse_sweep_variable("temperature"));
    EXPECT_EQ(axis_name(SweepVariable::delta_c, AxisUnits::normalized), "delta_c_over_kappa");
    EXPECT_EQ(axis_name(SweepVariable::Delta_effective, AxisUnits::normalized), "Delta_over_omega_m");
}

}  // namespace
}  // namespace optomech
