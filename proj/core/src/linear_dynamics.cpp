#include "optomech/linear_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace optomech {

DriftMatrix drift_matrix(const MeanFieldBranch& branch, const DerivedQuantities& d)
{
    using namespace mode_index;
    const double g_m = std::sqrt(2.0) * d.xi * branch.alpha;
    const double g_c = std::sqrt(2.0) * d.zeta * branch.alpha;

    DriftMatrix A;
    Matrix6& a = A.values;
    a(X, X) = -d.kappa;
    a(X, Y) = branch.Delta;
    a(Y, X) = -branch.Delta;
    a(Y, Y) = -d.kappa;
    a(Y, q) = g_m;
    a(Y, Q) = -g_c;
    a(q, p) = d.omega_m;
    a(p, X) = g_m;
    a(p, q) = -d.omega_m;
    a(p, p) = -d.gamma_m;
    a(Q, Q) = -d.gamma_c;
    a(Q, P) = d.Omega_c;
    a(P, X) = -g_c;
    a(P, Q) = -(d.Omega_c + d.omega_sw);
    a(P, P) = -d.gamma_c;
    return A;
}

DiffusionMatrix diffusion_matrix(const DerivedQuantities& d)
{
    using namespace mode_index;
    const double bec_noise = d.bec_thermal ? d.gamma_c * (2.0 * d.nbar_c + 1.0) : d.gamma_c;
    DiffusionMatrix D;
    D.values(X, X) = d.kappa;
    D.values(Y, Y) = d.kappa;
    D.values(q, q) = 0.0;
    D.values(p, p) = d.gamma_m * (2.0 * d.nbar + 1.0);
    D.values(Q, Q) = bec_noise;
    D.values(P, P) = bec_noise;
    return D;
}

std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& A)
{
    if (A.rows() != A.cols())
        throw std::invalid_argument("characteristic_polynomial: matrix must be square");
    const Eigen::Index n = A.rows();
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[n] = 1.0;

    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        M = A * M;
        M.diagonal().array() += c[n - k + 1];
        c[n - k] = -(A * M).trace() / static_cast<double>(k);
    }
    return c;
}

namespace {

constexpr double kRouthZeroTolerance = 64.0 * 2.220446049250313e-16;
constexpr double kRouthEpsilon = 1e-30;

struct RouthOutcome {
    int sign_changes = 0;
    bool used_epsilon = false;
    bool zero_row = false;
};

double max_abs(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

RouthOutcome routh_array(const std::vector<double>& a, double epsilon_sign)
{
    const std::size_t n = a.size() - 1;
    const std::size_t width = n / 2 + 1;
    std::vector<double> prev2(width, 0.0), prev(width, 0.0);
    for (std::size_t j = 0; j < width; ++j) {
        if (2 * j <= n)
            prev2[j] = a[n - 2 * j];
        if (2 * j + 1 <= n)
            prev[j] = a[n - 2 * j - 1];
    }

    RouthOutcome out;
    std::vector<double> first_column{prev2[0], prev[0]};

    for (std::size_t i = 2; i <= n; ++i) {
        std::vector<double> row(width, 0.0);
        for (std::size_t j = 0; j + 1 < width; ++j) {
            const double lhs = prev2[j + 1];
            const double rhs = prev2[0] * prev[j + 1] / prev[0];
            row[j] = lhs - rhs;
            if (std::abs(row[j]) <= kRouthZeroTolerance * (std::abs(lhs) + std::abs(rhs)))
                row[j] = 0.0;
        }

        if (max_abs(row) == 0.0) {
            // Row of zeros: continue with the derivative of the auxiliary polynomial.
            out.zero_row = true;
            const std::size_t order = n - (i - 1);
            for (std::size_t j = 0; j < width; ++j) {
                const double power = static_cast<double>(order) - 2.0 * static_cast<double>(j);
                row[j] = power > 0 ? prev[j] * power : 0.0;
            }
        }
        if (row[0] == 0.0) {
            out.used_epsilon = true;
            row[0] = epsilon_sign * kRouthEpsilon * std::max(max_abs(row), 1.0);
        }

        first_column.push_back(row[0]);
        prev2 = std::move(prev);
        prev = std::move(row);
    }

    for (std::size_t i = 1; i < first_column.size(); ++i)
        if ((first_column[i] > 0) != (first_column[i - 1] > 0))
            ++out.sign_changes;
    return out;
}

}  // namespace

Stability is_stable(std::span<const double> coeffs)
{
    if (coeffs.empty())
        throw std::invalid_argument("is_stable: empty polynomial");
    const double lead = coeffs.back();
    if (lead == 0.0 || !std::isfinite(lead))
        throw std::invalid_argument("is_stable: leading coefficient must be nonzero");

    std::vector<double> a(coeffs.begin(), coeffs.end());
    for (double& x : a) {
        if (!std::isfinite(x))
            throw std::invalid_argument("is_stable: non-finite coefficient");
        x /= lead;
    }
    if (a.size() == 1)
        return Stability::stable;

    // Necessary condition for a Hurwitz polynomial.
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
        if (a[k] <= 0.0)
            return Stability::unstable;

    const RouthOutcome plus = routh_array(a, +1.0);
    if (!plus.used_epsilon) {
        if (plus.sign_changes > 0)
            return Stability::unstable;
        return plus.zero_row ? Stability::marginal : Stability::stable;
    }
    const RouthOutcome minus = routh_array(a, -1.0);
    if (plus.sign_changes > 0 && minus.sign_changes > 0)
        return Stability::unstable;
    return Stability::marginal;
}

Stability assess_stability(const Eigen::MatrixXd& A)
{
    const double scale = A.cwiseAbs().maxCoeff();
    if (scale == 0.0 || !std::isfinite(scale))
        return is_stable(characteristic_polynomial(A));
    const std::vector<double> c = characteristic_polynomial(A / scale);
    return is_stable(c);
}

Stability assess_stability(const DriftMatrix& A)
{
    return assess_stability(Eigen::MatrixXd(A.values));
}

double lyapunov_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& V, const Eigen::MatrixXd& D)
{
    return (A * V + V * A.transpose() + D).cwiseAbs().maxCoeff();
}

namespace {

constexpr double kSingularPivotTolerance = 1e-13;

// In-place Gaussian elimination with partial pivoting; solution overwrites rhs.
void gauss_solve(Eigen::MatrixXd& K, Eigen::VectorXd& rhs)
{
    const Eigen::Index m = K.rows();
    const double scale = K.cwiseAbs().maxCoeff();
    for (Eigen::Index col = 0; col < m; ++col) {
        Eigen::Index pivot = col;
        K.col(col).tail(m - col).cwiseAbs().maxCoeff(&pivot);
        pivot += col;
        if (std::abs(K(pivot, col)) <= kSingularPivotTolerance * scale)
            throw NumericalError("solve_lyapunov: singular system (marginally stable drift matrix)");
        if (pivot != col) {
            K.row(col).swap(K.row(pivot));
            std::swap(rhs(col), rhs(pivot));
        }
        const double diag = K(col, col);
        for (Eigen::Index r = col + 1; r < m; ++r) {
            const double f = K(r, col) / diag;
            if (f == 0.0)
                continue;
            K.row(r).tail(m - col) -= f * K.row(col).tail(m - col);
            rhs(r) -= f * rhs(col);
        }
    }
    for (Eigen::Index r = m - 1; r >= 0; --r) {
        const double s = K.row(r).tail(m - r - 1).dot(rhs.tail(m - r - 1));
        rhs(r) = (rhs(r) - s) / K(r, r);
    }
}

}  // namespace

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& D)
{
    const Eigen::Index n = A.rows();
    if (A.cols() != n || D.rows() != n || D.cols() != n)
        throw std::invalid_argument("solve_lyapunov: dimension mismatch");

    const double scale = A.cwiseAbs().maxCoeff();
    if (scale == 0.0 || !std::isfinite(scale))
        throw NumericalError("solve_lyapunov: drift matrix is zero or non-finite");
    const Eigen::MatrixXd As = A / scale;

    // vec(A V) = (I (x) A) vec(V), vec(V A^T) = (A (x) I) vec(V), column-major vec.
    const Eigen::Index m = n * n;
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            K.block(i * n, i * n, n, n).col(j) += As.col(j);
            K.block(i * n, j * n, n, n).diagonal().array() += As(i, j);
        }

    Eigen::VectorXd rhs(m);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            rhs(j * n + i) = -D(i, j) / scale;

    gauss_solve(K, rhs);

    Eigen::MatrixXd V(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            V(i, j) = rhs(j * n + i);
    V = (0.5 * (V + V.transpose())).eval();

    const double residual = lyapunov_residual(A, V, D);
    const double bound = kLyapunovResidualTolerance * D.cwiseAbs().maxCoeff();
    if (!(residual <= bound))
        throw NumericalError("solve_lyapunov: residual " + std::to_string(residual)
                             + " exceeds tolerance " + std::to_string(bound));
    return V;
}

CovarianceMatrix solve_lyapunov(const DriftMatrix& A, const DiffusionMatrix& D)
{
    CovarianceMatrix V;
    V.values = solve_lyapunov(Eigen::MatrixXd(A.values), Eigen::MatrixXd(D.values));
    return V;
}

}  // namespace optomech
