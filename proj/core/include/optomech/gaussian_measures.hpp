#pragma once

#include <array>
#include <string_view>

#include <Eigen/Core>

#include "optomech/linear_dynamics.hpp"

namespace optomech {

enum class Bipartition { mirror_field, atom_field, mirror_atom };

std::string_view to_string(Bipartition bp);

/// Zero-based rows/columns of the 6x6 covariance kept for a bipartition,
/// first-listed mode first: mirror-field -> (q, p, X, Y).
std::array<int, 4> bipartition_indices(Bipartition bp);

/// 4x4 covariance [[B, C], [C^T, B']] of two modes.
struct BipartiteCovariance {
    Eigen::Matrix4d values = Eigen::Matrix4d::Zero();

    Eigen::Matrix2d first() const { return values.topLeftCorner<2, 2>(); }
    Eigen::Matrix2d second() const { return values.bottomRightCorner<2, 2>(); }
    Eigen::Matrix2d correlations() const { return values.topRightCorner<2, 2>(); }
};

struct EntanglementResult {
    double log_negativity = 0.0;
    double eta_minus = 0.0;  // smallest symplectic eigenvalue of the partial transpose
};

/// Effective incoherent mirror phonons (V_qq + V_pp - 1) / 2.
double mirror_phonons(const CovarianceMatrix& V);

/// Effective incoherent Bogoliubov excitations (V_QQ + V_PP - 1) / 2.
double bogoliubov_excitations(const CovarianceMatrix& V);

BipartiteCovariance reduce_bipartition(const CovarianceMatrix& V, Bipartition bp);

/// E_N = max(0, -ln 2 eta_minus) with
/// eta_minus = 2^{-1/2} [S - sqrt(S^2 - 4 det V4)]^{1/2}, S = det B + det B' - 2 det C.
/// Throws NumericalError when V4 is not a physical covariance matrix.
EntanglementResult log_negativity(const BipartiteCovariance& V4);
EntanglementResult log_negativity(const Eigen::Matrix4d& V4);

inline constexpr double kDiscriminantGuard = 1e-12;

}  // namespace optomech
