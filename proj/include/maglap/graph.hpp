// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace maglap {

using IdSet = std::set<std::string>;

struct Vertex {
    std::string id;
    double weight = 1.0;

    bool operator==(const Vertex&) const = default;
};

/// Arc as supplied by a caller: endpoints named by vertex id.
struct ArcSpec {
    std::string id;
    std::string tail;
    std::string head;
    double weight = 1.0;
    double alpha = 0.0;
};

/// Arc as stored: endpoints resolved to vertex positions, alpha reduced into [0, 2π).
struct Arc {
    std::string id;
    std::size_t tail = 0;
    std::size_t head = 0;
    double weight = 1.0;
    double alpha = 0.0;

    bool is_loop() const { return tail == head; }
    bool operator==(const Arc&) const = default;
};

enum class WeightScheme { standard, combinatorial };

/// Finite directed multigraph with positive vertex/arc weights and a magnetic potential.
///
/// Orientation is data: the magnetic Laplacian depends on it, so arcs keep the tail/head
/// they were given. Loops and parallel arcs are allowed. Instances are immutable; every
/// transformation returns a new graph.
class MwGraph {
public:
    MwGraph() = default;

    /// Validates ids, endpoints and weights; reduces every alpha modulo 2π.
    MwGraph(std::vector<Vertex> vertices, const std::vector<ArcSpec>& arcs);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const Arc& arc(std::size_t i) const { return arcs_.at(i); }

    bool has_vertex(const std::string& id) const { return vertex_lookup_.contains(id); }
    bool has_arc(const std::string& id) const { return arc_lookup_.contains(id); }

    /// Position of a vertex / arc; throws InvalidInput for unknown ids.
    std::size_t vertex_index(const std::string& id) const;
    std::size_t arc_index(const std::string& id) const;

    /// Arc positions incident to vertex `v`; a loop is listed once.
    const std::vector<std::size_t>& incident(std::size_t v) const { return incidence_.at(v); }

    Eigen::VectorXd alpha() const;
    MwGraph with_alpha(const Eigen::VectorXd& alpha) const;
    std::vector<ArcSpec> arc_specs() const;

    bool operator==(const MwGraph& other) const {
        return vertices_ == other.vertices_ && arcs_ == other.arcs_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Arc> arcs_;
    std::unordered_map<std::string, std::size_t> vertex_lookup_;
    std::unordered_map<std::string, std::size_t> arc_lookup_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/// Same topology and potential, weights replaced by the standard (m(v)=deg v, m_e=1) or
/// combinatorial (m ≡ 1) scheme. Isolated vertices get weight 1 under the standard scheme.
MwGraph apply_weights(const MwGraph& g, WeightScheme scheme);

bool has_weight_scheme(const MwGraph& g, WeightScheme scheme, double tol = 1e-12);

// ---------------------------------------------------------------------------------------
// Local quantities.

std::size_t degree(const MwGraph& g, std::size_t v);
std::size_t degree(const MwGraph& g, const std::string& v);

/// ρ(v) = m(E_v)/m(v); a loop's weight counts twice.
double relative_weight(const MwGraph& g, std::size_t v);
double relative_weight(const MwGraph& g, const std::string& v);

/// max_v ρ(v). Throws on an empty graph.
double rho_infinity(const MwGraph& g);

bool is_connected(const MwGraph& g);

/// |E| − |V| + 1. Throws for disconnected input.
std::size_t betti(const MwGraph& g);

struct Bipartition {
    IdSet first;
    IdSet second;
};

/// A 2-coloring without monochromatic arcs, if one exists. Loops rule it out.
std::optional<Bipartition> is_bipartite(const MwGraph& g);

// ---------------------------------------------------------------------------------------
// Gauge / cohomology.

struct GaugeResult {
    std::map<std::string, double> phi;            ///< vertex phase φ
    std::map<std::string, double> reduced_alpha;  ///< α + dφ, reduced into [0, 2π)
    IdSet support;                                ///< spanning-tree chords
    MwGraph graph;                                ///< input graph carrying reduced_alpha
};

/// Returns g with α replaced by α + dφ, (dφ)_e = φ(∂₊e) − φ(∂₋e).
MwGraph gauge_transform(const MwGraph& g, const Eigen::VectorXd& phi);

/// Gauge-fixes α to vanish on a spanning tree. The tree prefers arcs already carrying
/// α ≡ 0, so a potential that is already supported on chords is left as is.
/// Chord values equal the signed flux of the chord's fundamental cycle.
GaugeResult gauge_reduce(const MwGraph& g);

/// Signed flux (mod 2π) of each fundamental cycle, keyed by its chord and oriented along
/// it. The spanning tree depends only on the arc order, never on α, so the result is a
/// cohomology invariant.
std::map<std::string, double> cycle_fluxes(const MwGraph& g);

// ---------------------------------------------------------------------------------------
// Virtualization.

/// Compressed operator data: the base graph plus the vertices the functions vanish on.
class DirichletGraph {
public:
    DirichletGraph(MwGraph base, IdSet excluded, double parent_rho_infinity);

    const MwGraph& base() const { return base_; }
    const IdSet& excluded() const { return excluded_; }
    /// Positions (in base) of the vertices outside the excluded set, in base order.
    const std::vector<std::size_t>& active() const { return active_; }
    /// ρ∞ of the graph the vertices were virtualized from (the padding value is twice this).
    double parent_rho_infinity() const { return parent_rho_infinity_; }

private:
    MwGraph base_;
    IdSet excluded_;
    std::vector<std::size_t> active_;
    double parent_rho_infinity_ = 0.0;
};

/// Removes the arcs E0; vertex weights, the other arcs and α stay untouched.
MwGraph virtualize_arcs(const MwGraph& g, const IdSet& e0);

/// Functions are forced to vanish on V0. Arcs with both endpoints in V0 (in particular loops
/// at V0) are dropped; arcs joining V0 to the rest are kept as Dirichlet contributions.
DirichletGraph virtualize_vertices(const MwGraph& g, const IdSet& v0);

/// True iff every arc of E0 has an endpoint in V0.
bool is_neighborhood(const MwGraph& g, const IdSet& e0, const IdSet& v0);

/// Greedy vertex cover of E0: repeatedly takes the vertex covering most uncovered arcs,
/// ties broken by the smallest id.
IdSet minimal_neighborhood(const MwGraph& g, const IdSet& e0);

}  // namespace maglap
