#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "optomech/model.hpp"
#include "optomech/steady_state.hpp"

namespace optomech {

/// Fluctuation ordering used everywhere: [dX, dY, dq, dp, dQ, dP].
using Matrix6 = Eigen::Matrix<double, 6, 6>;

namespace mode_index {
inline constexpr int X = 0, Y = 1, q = 2, p = 3, Q = 4, P = 5;
}

struct DriftMatrix {
    Matrix6 values = Matrix6::Zero();
};

struct DiffusionMatrix {
    Matrix6 values = Matrix6::Zero();
};

/// V_ij = <du_i du_j + du_j du_i> / 2, vacuum variance 1/2.
struct CovarianceMatrix {
    Matrix6 values = Matrix6::Zero();
};

DriftMatrix drift_matrix(const MeanFieldBranch& branch, const DerivedQuantities& d);

/// diag[kappa, kappa, 0, gamma_m (2 nbar + 1), gamma_c, gamma_c]; with d.bec_thermal the
/// last two become gamma_c (2 nbar_c + 1).
DiffusionMatrix diffusion_matrix(const DerivedQuantities& d);

/// Coefficients a_0..a_n of det(lambda I - A), ascending, a_n = 1 (Faddeev-LeVerrier).
std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& A);

/// Routh-Hurwitz verdict for a real polynomial given ascending coefficients.
/// Throws std::invalid_argument for an empty polynomial or a zero leading coefficient.
Stability is_stable(std::span<const double> coeffs);

/// Scale-normalised characteristic polynomial fed to is_stable.
Stability assess_stability(const Eigen::MatrixXd& A);
Stability assess_stability(const DriftMatrix& A);

/// Solves A V + V A^T = -D through the Kronecker-vectorised linear system.
/// Throws NumericalError on a singular system or when the residual
/// ||A V + V A^T + D||_max exceeds kLyapunovResidualTolerance * ||D||_max.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& D);
CovarianceMatrix solve_lyapunov(const DriftMatrix& A, const DiffusionMatrix& D);

inline constexpr double kLyapunovResidualTolerance = 1e-8;

double lyapunov_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& V,
                         const Eigen::MatrixXd& D);

}  // namespace optomech
