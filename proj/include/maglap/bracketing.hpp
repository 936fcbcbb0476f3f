// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "maglap/graph.hpp"
#include "maglap/intervals.hpp"
#include "maglap/spectrum.hpp"

namespace maglap {

/// Localization J = ⋃_k [λ_k(Δ⁻), λ_k(Δ⁺)] from an arc-virtualized graph W⁻ = W − E0 and a
/// vertex-virtualized graph W⁺ = W − V0.
struct Bracketing {
    IntervalList intervals;          ///< J_k, k = 1..|V|
    std::size_t padded_from = 0;     ///< number of genuine Δ⁺ eigenvalues; later J_k end at ambient_max
    IntervalList covered;            ///< merged union (after κ refinement, if applied)
    IntervalList gaps;               ///< open complement of `covered` in [0, ambient_max]
    IntervalList isolated_points;    ///< zero-length members of `covered`
    double ambient_max = 0.0;        ///< 2ρ∞ of the original graph
    Spectrum lower;                  ///< λ(Δ⁻)
    Spectrum upper;                  ///< λ(Δ⁺), unpadded
    bool kappa_eligible = false;     ///< bipartite with standard weights
    bool kappa_refined = false;
};

/// Requires V0 to be a neighborhood of E0. Asserts W⁻ ≼ W⁺ (NumericalFailure otherwise).
Bracketing bracketing(const MwGraph& g, const IdSet& e0, const IdSet& v0);

/// Intersects the union with its mirror under κ(λ) = 2 − λ. Only valid for bipartite graphs
/// with standard weights, whose spectra are κ-symmetric for every potential.
Bracketing kappa_refine(const Bracketing& b);

/// Gaps of a localization (already computed on the bracketing).
inline const IntervalList& gap_set(const Bracketing& b) { return b.gaps; }

/// Lipschitz constant of a DML eigenvalue with respect to the potential on one arc.
double arc_coupling(const MwGraph& g, const Arc& a);

/// Complement of ⋃_α σ(Δ_α) sampled on a uniform grid over the chord torus of the
/// gauge-reduced graph. Gaps no longer than 2·(Σ_chords coupling)·π/grid are discarded as
/// sampling artefacts. At most 4 chords are accepted.
IntervalList magnetic_gap_set(const MwGraph& g, std::size_t grid);

enum class DeltaVariant { general, standard, combinatorial };

struct DeltaResult {
    double delta = 0.0;
    double lambda_1 = 0.0;  ///< λ_1(Δ of g − B)
    bool certified() const { return delta > 0.0; }
};

/// Gap certificate at vertex v0 for the connecting arcs B ⊂ E_{v0} (no loops):
///   general:       ρ(v0) − Σ_{e∈B} m_e/m((v0)_e) − m(B)/m(v0) − λ_1(Δ⁻)
///   standard:      1 − Σ_{e∈B} 1/deg((v0)_e) − |B|/deg(v0) − λ_1(Δ⁻)
///   combinatorial: deg(v0) − 2|B| − λ_1(Δ⁻)
/// The two special variants require g to carry the matching weights.
DeltaResult delta_criterion(const MwGraph& g, const std::string& v0, const IdSet& b,
                            DeltaVariant variant = DeltaVariant::general);

/// |Tr Δ⁻ − Tr Δ⁺ − λ_1(Δ⁻) − δ| with W⁺ = g − {v0}, traces taken as eigenvalue sums.
/// Loops at v0 enter through their diagonal term −2 m_e cos α_e / m(v0).
/// Throws NumericalFailure when it exceeds 1e−9·max(1, Σ_v ρ(v)).
double trace_identity_check(const MwGraph& g, const std::string& v0, const IdSet& b);

}  // namespace maglap
