// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "maglap/graph.hpp"

namespace maglap {

using Complex = std::complex<double>;

/// Dense Hermitian matrix together with the upper end of the interval its spectrum is known
/// to live in (2ρ∞ of the graph it was assembled from).
class HermitianMatrix {
public:
    /// Symmetrizes `entries` after checking ‖H − H*‖_max ≤ tol. With `ambient_max` < 0 the
    /// ambient bound defaults to the max absolute row sum (a Gershgorin bound).
    explicit HermitianMatrix(const Eigen::MatrixXcd& entries, double ambient_max = -1.0, double tol = 1e-12);

    Eigen::Index dimension() const { return entries_.rows(); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    double ambient_max() const { return ambient_max_; }

private:
    Eigen::MatrixXcd entries_;
    double ambient_max_ = 0.0;
};

/// d_α : ℓ²(V, m) → ℓ²(E, m), row e = e^{iα_e/2} at ∂₊e and −e^{−iα_e/2} at ∂₋e; the two
/// entries of a loop add up in one column.
struct TwistedDerivative {
    Eigen::MatrixXcd matrix;       ///< |E| × |V|
    Eigen::VectorXd vertex_weights;
    Eigen::VectorXd arc_weights;
};

TwistedDerivative assemble_twisted_derivative(const MwGraph& g);

/// Δ_α = M_V⁻¹ d_α* M_E d_α stored in the symmetrized form M_V^{1/2} Δ_α M_V^{−1/2}, which is
/// Hermitian and has the same spectrum. Diagonal = ρ(v); an arc u → w contributes
/// −m_e e^{iα_e}/√(m(u)m(w)) at (u, w); a loop contributes −2 m_e cos α_e / m(v) on the diagonal.
HermitianMatrix assemble_dml(const MwGraph& g);

/// Principal submatrix of assemble_dml(base) on the active vertices. The ambient bound is
/// the parent graph's 2ρ∞.
HermitianMatrix assemble_dirichlet_dml(const DirichletGraph& dg);

/// Undoes the symmetrization: M_V^{−1/2} S M_V^{1/2}, i.e. the matrix of Δ_α acting on
/// vertex functions in the standard basis.
Eigen::MatrixXcd weighted_operator(const HermitianMatrix& symmetrized, const Eigen::VectorXd& vertex_weights);

}  // namespace maglap
