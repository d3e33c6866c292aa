#include "optomech/gaussian_measures.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <string>

namespace optomech {

std::string_view to_string(Bipartition bp)
{
    switch (bp) {
    case Bipartition::mirror_field: return "mirror-field";
    case Bipartition::atom_field: return "atom-field";
    case Bipartition::mirror_atom: return "mirror-atom";
    }
    return "?";
}

std::array<int, 4> bipartition_indices(Bipartition bp)
{
    using namespace mode_index;
    switch (bp) {
    case Bipartition::mirror_field: return {q, p, X, Y};
    case Bipartition::atom_field: return {Q, P, X, Y};
    case Bipartition::mirror_atom: return {q, p, Q, P};
    }
    return {q, p, X, Y};
}

double mirror_phonons(const CovarianceMatrix& V)
{
    using namespace mode_index;
    return (V.values(q, q) + V.values(p, p) - 1.0) / 2.0;
}

double bogoliubov_excitations(const CovarianceMatrix& V)
{
    using namespace mode_index;
    return (V.values(Q, Q) + V.values(P, P) - 1.0) / 2.0;
}

BipartiteCovariance reduce_bipartition(const CovarianceMatrix& V, Bipartition bp)
{
    const auto idx = bipartition_indices(bp);
    BipartiteCovariance out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.values(i, j) = V.values(idx[i], idx[j]);
    return out;
}

EntanglementResult log_negativity(const BipartiteCovariance& V4)
{
    // Extended precision: for strongly squeezed states det V4 is tiny next to its entries.
    using Wide = Eigen::Matrix<long double, 4, 4>;
    if ((V4.values.diagonal().array() <= 0.0).any())
        throw NumericalError("log_negativity: non-physical covariance (non-positive variance)");
    const Wide W = V4.values.cast<long double>();
    auto det2 = [](const auto& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); };
    const long double sigma = det2(W.topLeftCorner<2, 2>()) + det2(W.bottomRightCorner<2, 2>())
                              - 2.0L * det2(W.topRightCorner<2, 2>());
    const long double det = Eigen::PartialPivLU<Wide>(W).determinant();

    long double disc = sigma * sigma - 4.0L * det;
    if (disc < 0.0L) {
        if (disc < -static_cast<long double>(kDiscriminantGuard) * std::max(1.0L, sigma * sigma))
            throw NumericalError("log_negativity: non-physical covariance (negative discriminant "
                                 + std::to_string(static_cast<double>(disc)) + ")");
        disc = 0.0L;
    }
    if (!(det > 0.0L) || !(sigma > 0.0L))
        throw NumericalError("log_negativity: non-physical covariance (symplectic eigenvalue not positive)");
    // sigma - sqrt(disc) rewritten without cancellation.
    const long double inner = 4.0L * det / (sigma + std::sqrt(disc));

    EntanglementResult r;
    r.eta_minus = static_cast<double>(std::sqrt(inner / 2.0L));
    r.log_negativity = std::max(0.0, static_cast<double>(-std::log(2.0L * std::sqrt(inner / 2.0L))));
    return r;
}

EntanglementResult log_negativity(const Eigen::Matrix4d& V4)
{
    BipartiteCovariance b;
    b.values = V4;
    return log_negativity(b);
}

}  // namespace optomech
