#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "optomech/model.hpp"
#include "optomech/sweep.hpp"

namespace optomech {

/// The reference device: 1 mm cavity at 1064 nm with finesse 3e4, 50 ng mirror at
/// 2 pi x 10 MHz with Q = 1e5 held at 0.4 K, recoil 0.1 omega_m, gamma_c = 0.001 kappa,
/// condensate at 0.1 uK, zeta defaulting to xi. Drive and detuning are zero.
SystemParams reference_parameters();

/// Coupling scale used by the xi-sweep dataset (rad/s).
inline constexpr double kReferenceCoupling = 330.0;

/// Known ids: fig2a fig2b fig2c fig2d fig3 fig4 fig5a fig5b fig5c fig6a fig6b fig6c fig7.
const std::vector<std::string>& preset_ids();

/// Throws ConfigError for an unknown id.
SweepSpec figure_preset(std::string_view id);

}  // namespace optomech
