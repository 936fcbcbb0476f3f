// SPDX-License-Identifier: Apache-2.0
#include "maglap/spectrum.hpp"

#include "maglap/error.hpp"
#include "maglap/linalg.hpp"

namespace maglap {

Spectrum eigenvalues(const HermitianMatrix& h) {
    Spectrum s{linalg::hermitian_eigenvalues<double>(h.entries()), h.ambient_max()};
    constexpr double slack = 1e-9;
    for (double v : s.values) {
        if (v < -slack || v > s.ambient_max + slack)
            throw NumericalFailure("eigenvalue " + std::to_string(v) + " outside [0, " + std::to_string(s.ambient_max) +
                                   "]");
    }
    return s;
}

Spectrum spectrum_of(const MwGraph& g) { return eigenvalues(assemble_dml(g)); }

Eigen::VectorXd padded(const Spectrum& b, Eigen::Index n, double pad) {
    Eigen::VectorXd out = Eigen::VectorXd::Constant(n, pad);
    out.head(std::min(n, b.size())) = b.values.head(std::min(n, b.size()));
    return out;
}

bool spectrally_leq(const Spectrum& a, const Spectrum& b, double ambient_max, double tol) {
    if (a.size() < b.size())
        throw InvalidInput("spectral order needs the smaller graph to have at least as many vertices");
    const Eigen::VectorXd upper = padded(b, a.size(), ambient_max);
    return ((a.values - upper).array() <= tol).all();
}

IntervalList gap_set(const Spectrum& s) {
    IntervalList points;
    for (double v : s.values) points.push_back({v, v});
    return complement(merge_intervals(std::move(points)), 0.0, s.ambient_max);
}

}  // namespace maglap
