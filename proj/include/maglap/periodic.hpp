// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "maglap/bracketing.hpp"
#include "maglap/graph.hpp"
#include "maglap/intervals.hpp"
#include "maglap/spectrum.hpp"

namespace maglap {

/// One arc of a closed walk, traversed along (+1) or against (−1) its orientation.
struct FaceStep {
    std::string arc;
    int sign = 1;

    bool operator==(const FaceStep&) const = default;
};

/// Closed walk in the covering graph, written in quotient arcs. Its net index is zero, so it
/// lifts to a cycle of the cover. Faces are the cycles a constant-flux family puts flux s on.
struct Face {
    std::string id;
    std::vector<FaceStep> steps;

    bool operator==(const Face&) const = default;
};

/// Z^d-periodic graph given by its quotient and the index of every arc. The quotient's
/// potential is the periodic potential β.
class PeriodicGraph {
public:
    /// Validates: connected quotient, one index vector of common length d ≥ 1 per arc, the
    /// indices generate Z^d, and faces (if any) are closed walks of net index zero.
    PeriodicGraph(MwGraph quotient, std::vector<Eigen::VectorXi> index,
                  std::optional<std::vector<Face>> faces = std::nullopt);

    const MwGraph& quotient() const { return quotient_; }
    const std::vector<Eigen::VectorXi>& index() const { return index_; }
    const Eigen::VectorXi& index(std::size_t arc) const { return index_.at(arc); }
    int rank() const { return rank_; }

    /// Face metadata; absent for graphs that do not carry any.
    const std::optional<std::vector<Face>>& faces() const { return faces_; }

    /// Same covering with β replaced (indexed like quotient().arcs()).
    PeriodicGraph with_potential(const Eigen::VectorXd& beta) const;

    bool operator==(const PeriodicGraph& other) const;

private:
    MwGraph quotient_;
    std::vector<Eigen::VectorXi> index_;
    std::optional<std::vector<Face>> faces_;
    int rank_ = 0;
};

/// True iff the integer vectors generate Z^d (every Hermite pivot is ±1).
bool generates_lattice(const std::vector<Eigen::VectorXi>& vectors, int d);

/// Arcs with a nonzero index.
IdSet connecting_arc_classes(const PeriodicGraph& p);

/// Quotient with α_e = β_e + θ·ind(e) mod 2π, the potential of the fiber at χ_θ(γ) = e^{iθ·γ}.
MwGraph fiber_potential(const PeriodicGraph& p, const Eigen::VectorXd& theta);

Spectrum fiber_spectrum(const PeriodicGraph& p, const Eigen::VectorXd& theta);

/// Error bound of a band endpoint sampled on a grid with `grid` points per dimension:
/// Σ_j (Σ_e |ind_j(e)|·coupling(e))·π/grid.
double resolution_bound(const PeriodicGraph& p, std::size_t grid);

struct BandStructure {
    std::size_t grid = 0;          ///< points per dimension
    Eigen::MatrixXd theta_grid;    ///< grid^d × d; θ_1 varies slowest
    Eigen::MatrixXd bands;         ///< grid^d × n; row = sorted fiber spectrum
    IntervalList band_intervals;   ///< [min_θ λ_k, max_θ λ_k] per k
    IntervalList covered;          ///< merged union of band_intervals
    IntervalList gaps;             ///< complement in [0, ambient_max]
    double ambient_max = 0.0;
    double resolution_bound = 0.0;
};

struct BandOptions {
    /// When set, the grid is doubled (at most max_doublings times) until no band endpoint
    /// moves by more than this.
    std::optional<double> refine_tol;
    int max_doublings = 4;
};

/// Samples the uniform grid^d lattice θ_j = 2πj/grid. Needs grid ≥ 2; subject to the cost
/// guard grid^d·n³.
BandStructure band_structure(const PeriodicGraph& p, std::size_t grid, const BandOptions& options = {});

/// Bracketing of the covering spectrum: W⁻ = quotient − E0, W⁺ = quotient − V0. E0 defaults
/// to the connecting arcs and must contain them; V0 defaults to minimal_neighborhood(E0).
/// Never looks at θ.
Bracketing covering_bracketing(const PeriodicGraph& p, const std::optional<IdSet>& v0 = std::nullopt,
                               const std::optional<IdSet>& e0 = std::nullopt);

struct FluxRow {
    double s = 0.0;
    IntervalList band_intervals;
    IntervalList gaps;
};

struct FluxDiagram {
    std::vector<FluxRow> rows;
    double ambient_max = 0.0;
};

using FluxFamily = std::function<PeriodicGraph(double)>;

/// One band_structure per s_j = 2πj/s_grid.
FluxDiagram flux_sweep(const FluxFamily& family, std::size_t s_grid, std::size_t theta_grid);

/// Finite piece of a Z-periodic cover: vertices "v@j" for layers j = −radius..radius, one
/// arc "e@j" from (∂₋e, j) to (∂₊e, j + ind e) whenever both layers exist. Weights and β are
/// copied; arcs leaving the window are dropped. Needs d = 1.
MwGraph unfold_truncation(const PeriodicGraph& p, std::size_t radius);

/// Lifts of every face into unfold_truncation(p, radius): one per start layer for which the
/// whole walk stays inside the window.
std::vector<Face> lift_faces(const PeriodicGraph& p, std::size_t radius);

/// Σ sign·α along a face, reduced into [0, 2π).
double face_flux(const MwGraph& g, const Face& face);

}  // namespace maglap
