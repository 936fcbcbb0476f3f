// SPDX-License-Identifier: Apache-2.0
#include "maglap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "maglap/angle.hpp"
#include "maglap/error.hpp"

namespace maglap {

namespace {

bool valid_weight(double w) { return std::isfinite(w) && w > 0.0; }

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

void require_connected(const MwGraph& g, const char* what) {
    if (g.vertex_count() == 0 || !is_connected(g)) {
        throw InvalidInput("disconnected_graph", std::string(what) + " requires a connected graph");
    }
}

// Spanning tree as an arc mask. With prefer_zero_alpha, arcs already carrying α ≡ 0 are
// offered first so that they end up in the tree.
std::vector<bool> spanning_tree(const MwGraph& g, bool prefer_zero_alpha) {
    DisjointSets sets(g.vertex_count());
    std::vector<bool> in_tree(g.arc_count(), false);
    auto offer = [&](std::size_t i) {
        const Arc& a = g.arc(i);
        if (!a.is_loop() && sets.unite(a.tail, a.head)) in_tree[i] = true;
    };
    if (prefer_zero_alpha) {
        for (std::size_t i = 0; i < g.arc_count(); ++i)
            if (angles_equal(g.arc(i).alpha, 0.0)) offer(i);
        for (std::size_t i = 0; i < g.arc_count(); ++i)
            if (!angles_equal(g.arc(i).alpha, 0.0)) offer(i);
    } else {
        for (std::size_t i = 0; i < g.arc_count(); ++i) offer(i);
    }
    return in_tree;
}

// Phases making α + dφ vanish on every tree arc (φ = 0 at vertex 0).
Eigen::VectorXd tree_phases(const MwGraph& g, const std::vector<bool>& in_tree) {
    const std::size_t n = g.vertex_count();
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> frontier;
    seen[0] = true;
    frontier.push(0);
    while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop();
        for (std::size_t ai : g.incident(v)) {
            if (!in_tree[ai]) continue;
            const Arc& a = g.arc(ai);
            const std::size_t w = a.tail == v ? a.head : a.tail;
            if (seen[w]) continue;
            seen[w] = true;
            const auto wi = static_cast<Eigen::Index>(w);
            const auto vi = static_cast<Eigen::Index>(v);
            // α_e + φ(head) − φ(tail) = 0
            phi[wi] = a.tail == v ? phi[vi] - a.alpha : phi[vi] + a.alpha;
            frontier.push(w);
        }
    }
    return phi.unaryExpr([](double x) { return reduce_angle(x); });
}

}  // namespace

// ---------------------------------------------------------------------------------------

MwGraph::MwGraph(std::vector<Vertex> vertices, const std::vector<ArcSpec>& arcs)
    : vertices_(std::move(vertices)) {
    vertex_lookup_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vertex& v = vertices_[i];
        if (v.id.empty()) throw InvalidInput("vertex with empty id");
        if (!valid_weight(v.weight))
            throw InvalidInput("vertex '" + v.id + "' must have a positive finite weight");
        if (!vertex_lookup_.emplace(v.id, i).second)
            throw InvalidInput("duplicate vertex id '" + v.id + "'");
    }
    incidence_.assign(vertices_.size(), {});
    arcs_.reserve(arcs.size());
    for (const ArcSpec& spec : arcs) {
        if (spec.id.empty()) throw InvalidInput("arc with empty id");
        if (!valid_weight(spec.weight))
            throw InvalidInput("arc '" + spec.id + "' must have a positive finite weight");
        if (!std::isfinite(spec.alpha)) throw InvalidInput("arc '" + spec.id + "' has a non-finite alpha");
        const auto tail = vertex_lookup_.find(spec.tail);
        const auto head = vertex_lookup_.find(spec.head);
        if (tail == vertex_lookup_.end() || head == vertex_lookup_.end())
            throw InvalidInput("arc '" + spec.id + "' references an unknown vertex");
        if (!arc_lookup_.emplace(spec.id, arcs_.size()).second)
            throw InvalidInput("duplicate arc id '" + spec.id + "'");
        incidence_[tail->second].push_back(arcs_.size());
        if (head->second != tail->second) incidence_[head->second].push_back(arcs_.size());
        arcs_.push_back({spec.id, tail->second, head->second, spec.weight, reduce_angle(spec.alpha)});
    }
}

std::size_t MwGraph::vertex_index(const std::string& id) const {
    const auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) throw InvalidInput("unknown_vertex", "unknown vertex id '" + id + "'");
    return it->second;
}

std::size_t MwGraph::arc_index(const std::string& id) const {
    const auto it = arc_lookup_.find(id);
    if (it == arc_lookup_.end()) throw InvalidInput("unknown_arc", "unknown arc id '" + id + "'");
    return it->second;
}

Eigen::VectorXd MwGraph::alpha() const {
    Eigen::VectorXd a(static_cast<Eigen::Index>(arcs_.size()));
    for (std::size_t i = 0; i < arcs_.size(); ++i) a[static_cast<Eigen::Index>(i)] = arcs_[i].alpha;
    return a;
}

MwGraph MwGraph::with_alpha(const Eigen::VectorXd& alpha) const {
    if (static_cast<std::size_t>(alpha.size()) != arcs_.size())
        throw InvalidInput("potential length does not match the arc count");
    MwGraph out = *this;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const double a = alpha[static_cast<Eigen::Index>(i)];
        if (!std::isfinite(a)) throw InvalidInput("non-finite magnetic potential");
        out.arcs_[i].alpha = reduce_angle(a);
    }
    return out;
}

std::vector<ArcSpec> MwGraph::arc_specs() const {
    std::vector<ArcSpec> specs;
    specs.reserve(arcs_.size());
    for (const Arc& a : arcs_)
        specs.push_back({a.id, vertices_[a.tail].id, vertices_[a.head].id, a.weight, a.alpha});
    return specs;
}

MwGraph apply_weights(const MwGraph& g, WeightScheme scheme) {
    std::vector<Vertex> vertices = g.vertices();
    std::vector<ArcSpec> arcs = g.arc_specs();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const std::size_t d = degree(g, v);
        vertices[v].weight = scheme == WeightScheme::standard && d > 0 ? static_cast<double>(d) : 1.0;
    }
    for (ArcSpec& a : arcs) a.weight = 1.0;
    return MwGraph(std::move(vertices), arcs);
}

bool has_weight_scheme(const MwGraph& g, WeightScheme scheme, double tol) {
    for (const Arc& a : g.arcs())
        if (std::abs(a.weight - 1.0) > tol) return false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const double expected =
            scheme == WeightScheme::standard ? static_cast<double>(std::max<std::size_t>(degree(g, v), 1)) : 1.0;
        if (std::abs(g.vertex(v).weight - expected) > tol * expected) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------------------

std::size_t degree(const MwGraph& g, std::size_t v) {
    std::size_t d = 0;
    for (std::size_t ai : g.incident(v)) d += g.arc(ai).is_loop() ? 2 : 1;
    return d;
}

std::size_t degree(const MwGraph& g, const std::string& v) { return degree(g, g.vertex_index(v)); }

double relative_weight(const MwGraph& g, std::size_t v) {
    double total = 0.0;
    for (std::size_t ai : g.incident(v)) {
        const Arc& a = g.arc(ai);
        total += a.is_loop() ? 2.0 * a.weight : a.weight;
    }
    return total / g.vertex(v).weight;
}

double relative_weight(const MwGraph& g, const std::string& v) { return relative_weight(g, g.vertex_index(v)); }

double rho_infinity(const MwGraph& g) {
    if (g.vertex_count() == 0) throw InvalidInput("empty_graph", "rho_infinity of an empty graph");
    double best = 0.0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) best = std::max(best, relative_weight(g, v));
    return best;
}

bool is_connected(const MwGraph& g) {
    if (g.vertex_count() == 0) return false;
    DisjointSets sets(g.vertex_count());
    std::size_t components = g.vertex_count();
    for (const Arc& a : g.arcs())
        if (sets.unite(a.tail, a.head)) --components;
    return components == 1;
}

std::size_t betti(const MwGraph& g) {
    require_connected(g, "betti");
    return g.arc_count() + 1 - g.vertex_count();
}

std::optional<Bipartition> is_bipartite(const MwGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::queue<std::size_t> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            const std::size_t v = frontier.front();
            frontier.pop();
            for (std::size_t ai : g.incident(v)) {
                const Arc& a = g.arc(ai);
                if (a.is_loop()) return std::nullopt;
                const std::size_t w = a.tail == v ? a.head : a.tail;
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    frontier.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (std::size_t v = 0; v < n; ++v) (color[v] == 0 ? parts.first : parts.second).insert(g.vertex(v).id);
    return parts;
}

// ---------------------------------------------------------------------------------------

MwGraph gauge_transform(const MwGraph& g, const Eigen::VectorXd& phi) {
    if (static_cast<std::size_t>(phi.size()) != g.vertex_count())
        throw InvalidInput("phase length does not match the vertex count");
    Eigen::VectorXd alpha = g.alpha();
    for (std::size_t i = 0; i < g.arc_count(); ++i) {
        const Arc& a = g.arc(i);
        alpha[static_cast<Eigen::Index>(i)] +=
            phi[static_cast<Eigen::Index>(a.head)] - phi[static_cast<Eigen::Index>(a.tail)];
    }
    return g.with_alpha(alpha);
}

GaugeResult gauge_reduce(const MwGraph& g) {
    require_connected(g, "gauge_reduce");
    const std::vector<bool> in_tree = spanning_tree(g, true);
    const Eigen::VectorXd phi = tree_phases(g, in_tree);

    GaugeResult result;
    Eigen::VectorXd reduced(static_cast<Eigen::Index>(g.arc_count()));
    for (std::size_t i = 0; i < g.arc_count(); ++i) {
        const Arc& a = g.arc(i);
        double value = 0.0;
        if (!in_tree[i]) {
            value = reduce_angle(a.alpha + phi[static_cast<Eigen::Index>(a.head)] -
                                 phi[static_cast<Eigen::Index>(a.tail)]);
            if (angles_equal(value, 0.0)) value = 0.0;
            result.support.insert(a.id);
        }
        reduced[static_cast<Eigen::Index>(i)] = value;
        result.reduced_alpha[a.id] = value;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) result.phi[g.vertex(v).id] = phi[static_cast<Eigen::Index>(v)];
    result.graph = g.with_alpha(reduced);
    return result;
}

std::map<std::string, double> cycle_fluxes(const MwGraph& g) {
    require_connected(g, "cycle_fluxes");
    const std::vector<bool> in_tree = spanning_tree(g, false);
    const Eigen::VectorXd phi = tree_phases(g, in_tree);
    std::map<std::string, double> fluxes;
    for (std::size_t i = 0; i < g.arc_count(); ++i) {
        if (in_tree[i]) continue;
        const Arc& a = g.arc(i);
        double flux = reduce_angle(a.alpha + phi[static_cast<Eigen::Index>(a.head)] -
                                   phi[static_cast<Eigen::Index>(a.tail)]);
        if (angles_equal(flux, 0.0)) flux = 0.0;
        fluxes[a.id] = flux;
    }
    return fluxes;
}

// ---------------------------------------------------------------------------------------

DirichletGraph::DirichletGraph(MwGraph base, IdSet excluded, double parent_rho_infinity)
    : base_(std::move(base)), excluded_(std::move(excluded)), parent_rho_infinity_(parent_rho_infinity) {
    for (const std::string& id : excluded_) base_.vertex_index(id);
    for (const Arc& a : base_.arcs()) {
        if (excluded_.contains(base_.vertex(a.tail).id) && excluded_.contains(base_.vertex(a.head).id))
            throw InvalidInput("arc '" + a.id + "' has both endpoints in the excluded set");
    }
    for (std::size_t v = 0; v < base_.vertex_count(); ++v)
        if (!excluded_.contains(base_.vertex(v).id)) active_.push_back(v);
    if (active_.empty()) throw InvalidInput("empty_active_set", "virtualizing every vertex leaves no active vertex");
}

MwGraph virtualize_arcs(const MwGraph& g, const IdSet& e0) {
    for (const std::string& id : e0) g.arc_index(id);
    std::vector<ArcSpec> kept;
    for (ArcSpec& a : g.arc_specs())
        if (!e0.contains(a.id)) kept.push_back(std::move(a));
    return MwGraph(g.vertices(), kept);
}

DirichletGraph virtualize_vertices(const MwGraph& g, const IdSet& v0) {
    for (const std::string& id : v0) g.vertex_index(id);
    if (v0.size() >= g.vertex_count())
        throw InvalidInput("empty_active_set", "virtualizing every vertex leaves no active vertex");
    std::vector<ArcSpec> kept;
    for (ArcSpec& a : g.arc_specs())
        if (!(v0.contains(a.tail) && v0.contains(a.head))) kept.push_back(std::move(a));
    return DirichletGraph(MwGraph(g.vertices(), kept), v0, rho_infinity(g));
}

bool is_neighborhood(const MwGraph& g, const IdSet& e0, const IdSet& v0) {
    for (const std::string& id : v0) g.vertex_index(id);
    for (const std::string& id : e0) {
        const Arc& a = g.arc(g.arc_index(id));
        if (!v0.contains(g.vertex(a.tail).id) && !v0.contains(g.vertex(a.head).id)) return false;
    }
    return true;
}

IdSet minimal_neighborhood(const MwGraph& g, const IdSet& e0) {
    std::vector<std::size_t> uncovered;
    for (const std::string& id : e0) uncovered.push_back(g.arc_index(id));
    IdSet cover;
    while (!uncovered.empty()) {
        std::map<std::string, std::size_t> hits;  // ordered by id, so ties go to the smallest
        for (std::size_t ai : uncovered) {
            const Arc& a = g.arc(ai);
            ++hits[g.vertex(a.tail).id];
            if (!a.is_loop()) ++hits[g.vertex(a.head).id];
        }
        auto best = hits.begin();
        for (auto it = hits.begin(); it != hits.end(); ++it)
            if (it->second > best->second) best = it;
        const std::size_t chosen = g.vertex_index(best->first);
        cover.insert(best->first);
        std::erase_if(uncovered, [&](std::size_t ai) {
            return g.arc(ai).tail == chosen || g.arc(ai).head == chosen;
        });
    }
    return cover;
}

}  // namespace maglap
