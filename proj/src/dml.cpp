// SPDX-License-Identifier: Apache-2.0
#include "maglap/dml.hpp"

#include <cmath>

#include "maglap/error.hpp"
#include "maglap/linalg.hpp"

namespace maglap {

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& entries, double ambient_max, double tol) {
    if (entries.rows() != entries.cols()) throw InvalidInput("Hermitian matrix must be square");
    if (linalg::hermitian_defect<double>(entries) > tol) throw InvalidInput("non_hermitian", "matrix is not Hermitian");
    entries_ = (entries + entries.adjoint()) / 2.0;
    ambient_max_ = ambient_max >= 0.0 ? ambient_max
                   : entries_.size() == 0 ? 0.0
                                          : entries_.cwiseAbs().rowwise().sum().maxCoeff();
}

TwistedDerivative assemble_twisted_derivative(const MwGraph& g) {
    const auto nv = static_cast<Eigen::Index>(g.vertex_count());
    const auto ne = static_cast<Eigen::Index>(g.arc_count());
    TwistedDerivative d{Eigen::MatrixXcd::Zero(ne, nv), Eigen::VectorXd(nv), Eigen::VectorXd(ne)};
    for (Eigen::Index v = 0; v < nv; ++v) d.vertex_weights[v] = g.vertex(static_cast<std::size_t>(v)).weight;
    for (Eigen::Index e = 0; e < ne; ++e) {
        const Arc& a = g.arc(static_cast<std::size_t>(e));
        d.arc_weights[e] = a.weight;
        d.matrix(e, static_cast<Eigen::Index>(a.head)) += std::polar(1.0, a.alpha / 2.0);
        d.matrix(e, static_cast<Eigen::Index>(a.tail)) -= std::polar(1.0, -a.alpha / 2.0);
    }
    return d;
}

HermitianMatrix assemble_dml(const MwGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (const Arc& a : g.arcs()) {
        const auto u = static_cast<Eigen::Index>(a.tail);
        const auto w = static_cast<Eigen::Index>(a.head);
        if (a.is_loop()) {
            const double c = a.weight / g.vertex(a.tail).weight;
            h(u, u) += 2.0 * c - 2.0 * c * std::cos(a.alpha);
            continue;
        }
        h(u, u) += a.weight / g.vertex(a.tail).weight;
        h(w, w) += a.weight / g.vertex(a.head).weight;
        const Complex off = std::polar(a.weight / std::sqrt(g.vertex(a.tail).weight * g.vertex(a.head).weight), a.alpha);
        h(u, w) -= off;
        h(w, u) -= std::conj(off);
    }
    return HermitianMatrix(h, n == 0 ? 0.0 : 2.0 * rho_infinity(g));
}

HermitianMatrix assemble_dirichlet_dml(const DirichletGraph& dg) {
    const HermitianMatrix base = assemble_dml(dg.base());
    const Eigen::MatrixXcd& full = base.entries();
    const std::vector<std::size_t>& active = dg.active();
    const auto n = static_cast<Eigen::Index>(active.size());
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            h(i, j) = full(static_cast<Eigen::Index>(active[static_cast<std::size_t>(i)]),
                           static_cast<Eigen::Index>(active[static_cast<std::size_t>(j)]));
    return HermitianMatrix(h, 2.0 * dg.parent_rho_infinity());
}

Eigen::MatrixXcd weighted_operator(const HermitianMatrix& symmetrized, const Eigen::VectorXd& vertex_weights) {
    const Eigen::VectorXd root = vertex_weights.cwiseSqrt();
    return root.cwiseInverse().asDiagonal() * symmetrized.entries() * root.asDiagonal();
}

}  // namespace maglap
