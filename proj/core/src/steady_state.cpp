#include "optomech/steady_state.hpp"

#include <algorithm>
#include <cmath>

namespace optomech {

std::string_view to_string(Stability s)
{
    switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::marginal: return "marginal";
    case Stability::unknown: break;
    }
    return "unknown";
}

std::string_view to_string(BranchLabel b)
{
    switch (b) {
    case BranchLabel::lower: return "lower";
    case BranchLabel::middle: return "middle";
    case BranchLabel::upper: return "upper";
    case BranchLabel::unique: break;
    }
    return "unique";
}

std::array<double, 4> mean_field_cubic(const DerivedQuantities& d, double delta_c)
{
    return {d.beta * d.beta, -2.0 * delta_c * d.beta, delta_c * delta_c + d.kappa * d.kappa,
            -d.eta * d.eta};
}

namespace {

constexpr double kDegeneracyTolerance = 1e-9;

double newton_step(double x, double a, double b, double c)
{
    const double f = ((x + a) * x + b) * x + c;
    const double df = (3.0 * x + 2.0 * a) * x + b;
    if (df == 0.0)
        return x;
    const double next = x - f / df;
    const double f_next = ((next + a) * next + b) * next + c;
    return std::abs(f_next) <= std::abs(f) ? next : x;
}

}  // namespace

CubicRoots solve_monic_cubic(double a, double b, double c)
{
    // x = t - a/3 gives t^3 + p t + q = 0.
    const double shift = -a / 3.0;
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;

    CubicRoots out;
    const double scale = std::max(std::abs(p), std::cbrt(q * q));
    if (scale == 0.0) {
        out.roots = {shift};
        out.degenerate = true;
        out.double_root = 0;
        return out;
    }

    const double disc = -(4.0 * p * p * p + 27.0 * q * q);
    const double tol = kDegeneracyTolerance * scale * scale * scale;

    if (std::abs(disc) <= tol && p < 0) {
        const double simple = 3.0 * q / p + shift;
        const double repeated = -1.5 * q / p + shift;
        out.degenerate = true;
        out.roots = {newton_step(simple, a, b, c), repeated};
        if (out.roots[0] > out.roots[1]) {
            std::swap(out.roots[0], out.roots[1]);
            out.double_root = 0;
        } else {
            out.double_root = 1;
        }
        return out;
    }

    if (disc > 0) {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            const double t = m * std::cos(theta - 2.0 * constants::pi * k / 3.0);
            out.roots.push_back(newton_step(t + shift, a, b, c));
        }
        std::sort(out.roots.begin(), out.roots.end());
        return out;
    }

    // One real root; pick the cube-root branch that avoids cancellation.
    const double s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const double u = -std::copysign(std::cbrt(std::abs(q) / 2.0 + s), q);
    const double t = u != 0.0 ? u - p / (3.0 * u) : 0.0;
    out.roots = {newton_step(t + shift, a, b, c)};
    return out;
}

MeanFieldBranch branch_from_photon_number(const DerivedQuantities& d, double n, BranchLabel label)
{
    MeanFieldBranch br;
    br.n = std::max(n, 0.0);
    br.alpha = std::sqrt(br.n);
    br.q_s = d.xi / d.omega_m * br.n;
    br.p_s = 0.0;
    if (d.zeta != 0.0) {
        const double stiffness = d.Omega_c + d.omega_sw + d.gamma_c * d.gamma_c / d.Omega_c;
        br.Q_s = -d.zeta * br.n / stiffness;
        br.P_s = d.gamma_c / d.Omega_c * br.Q_s;
    }
    br.Delta = d.delta_c - d.xi * br.q_s + d.zeta * br.Q_s;
    br.branch = label;
    return br;
}

MeanFieldBranch branch_at_effective_detuning(const DerivedQuantities& d, double Delta)
{
    const double n = d.eta * d.eta / (Delta * Delta + d.kappa * d.kappa);
    MeanFieldBranch br = branch_from_photon_number(d, n);
    // Keep Delta exact; the implied delta_c is Delta + beta n.
    br.Delta = Delta;
    return br;
}

std::vector<MeanFieldBranch> solve_mean_field(const DerivedQuantities& d)
{
    const double kappa = d.kappa;
    std::vector<MeanFieldBranch> out;

    if (d.beta == 0.0) {
        const double n = d.eta * d.eta / (d.delta_c * d.delta_c + kappa * kappa);
        out.push_back(branch_from_photon_number(d, n));
        return out;
    }

    // x = beta n / kappa turns the cubic into x ((dc - x)^2 + 1) = e with O(1) coefficients.
    const double dc = d.delta_c / kappa;
    const double e = d.eta * d.eta * d.beta / (kappa * kappa * kappa);
    const CubicRoots r = solve_monic_cubic(-2.0 * dc, dc * dc + 1.0, -e);

    std::vector<double> ns;
    for (double x : r.roots)
        ns.push_back(x * kappa / d.beta);

    static constexpr BranchLabel three[] = {BranchLabel::lower, BranchLabel::middle, BranchLabel::upper};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        BranchLabel label = BranchLabel::unique;
        if (ns.size() == 3)
            label = three[i];
        else if (ns.size() == 2)
            label = i == 0 ? BranchLabel::lower : BranchLabel::upper;
        MeanFieldBranch br = branch_from_photon_number(d, ns[i], label);
        br.degenerate = r.degenerate && static_cast<int>(i) == r.double_root && ns.size() > 1;
        out.push_back(br);
    }
    return out;
}

std::vector<MeanFieldBranch> solve_mean_field(const SystemParams& params)
{
    return solve_mean_field(derive_quantities(params));
}

double mean_field_residual(const DerivedQuantities& d, const MeanFieldBranch& b)
{
    const double eta2 = d.eta * d.eta;
    const double r = b.n * (b.Delta * b.Delta + d.kappa * d.kappa) - eta2;
    return eta2 > 0 ? std::abs(r) / eta2 : std::abs(r);
}

double power_for_photon_number(const DerivedQuantities& d, double delta_c, double n)
{
    const double Delta = delta_c - d.beta * n;
    return n * (Delta * Delta + d.kappa * d.kappa) * constants::hbar * d.omega_c / (2.0 * d.kappa);
}

std::optional<BistabilityWindow> bistability_window(const DerivedQuantities& d, double delta_c)
{
    const double kappa = d.kappa;
    if (d.beta <= 0.0 || delta_c <= std::sqrt(3.0) * kappa)
        return std::nullopt;

    // Turning points of P(n): 3 beta^2 n^2 - 4 delta_c beta n + delta_c^2 + kappa^2 = 0.
    const double root = std::sqrt(delta_c * delta_c - 3.0 * kappa * kappa);
    const double n_small = (2.0 * delta_c - root) / (3.0 * d.beta);
    const double n_large = (2.0 * delta_c + root) / (3.0 * d.beta);

    BistabilityWindow w;
    w.n_knee_low = n_large;   // local minimum of P(n)
    w.n_knee_high = n_small;  // local maximum of P(n)
    w.P_low = power_for_photon_number(d, delta_c, n_large);
    w.P_high = power_for_photon_number(d, delta_c, n_small);
    return w;
}

std::optional<BistabilityWindow> bistability_window(const SystemParams& params)
{
    return bistability_window(derive_quantities(params), params.cavity.delta_c);
}

std::optional<double> threshold_power(const DerivedQuantities& d, double delta_c)
{
    auto w = bistability_window(d, delta_c);
    if (!w)
        return std::nullopt;
    return w->P_low;
}

std::optional<double> threshold_power(const SystemParams& params)
{
    return threshold_power(derive_quantities(params), params.cavity.delta_c);
}

}  // namespace optomech
