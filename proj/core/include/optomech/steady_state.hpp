#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "optomech/model.hpp"

namespace optomech {

enum class Stability { unknown, stable, unstable, marginal };

std::string_view to_string(Stability s);

enum class BranchLabel { lower, middle, upper, unique };

std::string_view to_string(BranchLabel b);

/// One mean-field fixed point. Quadratures are dimensionless; alpha is real and >= 0.
struct MeanFieldBranch {
    double n = 0.0;       // photon number alpha^2
    double alpha = 0.0;
    double Delta = 0.0;   // effective detuning, rad/s
    double q_s = 0.0;
    double p_s = 0.0;
    double Q_s = 0.0;
    double P_s = 0.0;
    BranchLabel branch = BranchLabel::unique;
    /// Set on a double root at a bistability knee.
    bool degenerate = false;
    Stability stability = Stability::unknown;
};

struct BistabilityWindow {
    double P_low = 0.0;        // W, onset of three roots when increasing the drive
    double P_high = 0.0;       // W, end of the three-root region
    double n_knee_low = 0.0;   // photon number at the P_low turning point
    double n_knee_high = 0.0;  // photon number at the P_high turning point
};

/// Coefficients of n ((delta_c - beta n)^2 + kappa^2) - eta^2, highest power first:
/// [beta^2, -2 delta_c beta, delta_c^2 + kappa^2, -eta^2].
std::array<double, 4> mean_field_cubic(const DerivedQuantities& d, double delta_c);

/// Real roots of x^3 + a x^2 + b x + c. Closed form (trigonometric in the
/// three-root case) followed by one Newton step per root.
struct CubicRoots {
    std::vector<double> roots;  // ascending
    bool degenerate = false;    // discriminant within tolerance of zero
    int double_root = -1;       // index into roots of the repeated root, if degenerate
};
CubicRoots solve_monic_cubic(double a, double b, double c);

/// Builds the complete fixed point (displacements included) for photon number n.
MeanFieldBranch branch_from_photon_number(const DerivedQuantities& d, double n,
                                          BranchLabel label = BranchLabel::unique);

/// Fixed point at a prescribed effective detuning: alpha = eta / sqrt(Delta^2 + kappa^2).
/// No self-consistency loop; delta_c is implied rather than imposed.
MeanFieldBranch branch_at_effective_detuning(const DerivedQuantities& d, double Delta);

/// All fixed points at d.delta_c and d.eta, ascending in n (1-3 entries).
std::vector<MeanFieldBranch> solve_mean_field(const DerivedQuantities& d);
std::vector<MeanFieldBranch> solve_mean_field(const SystemParams& params);

/// |n (Delta^2 + kappa^2) - eta^2| / eta^2 for the branch (absolute when eta = 0).
double mean_field_residual(const DerivedQuantities& d, const MeanFieldBranch& b);

/// Drive power needed to sustain photon number n at detuning delta_c.
double power_for_photon_number(const DerivedQuantities& d, double delta_c, double n);

std::optional<BistabilityWindow> bistability_window(const DerivedQuantities& d, double delta_c);
std::optional<BistabilityWindow> bistability_window(const SystemParams& params);

/// Lower knee of the bistability window, if any.
std::optional<double> threshold_power(const DerivedQuantities& d, double delta_c);
std::optional<double> threshold_power(const SystemParams& params);

}  // namespace optomech
