// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "maglap/angle.hpp"
#include "maglap/dml.hpp"
#include "maglap/graph.hpp"

namespace maglap::testing {

struct RandomGraphOptions {
    int min_vertices = 1;
    int max_vertices = 10;
    int max_arcs = 18;
    double min_weight = 0.1;
    double max_weight = 10.0;
    bool connected = true;
    bool allow_loops = true;
    bool random_alpha = true;
    bool bipartite = false;  ///< arcs only join vertices of opposite index parity
};

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random multigraph. With `connected`, the first n−1 arcs form a random tree; the rest are
/// arbitrary (parallel arcs and, if allowed, loops included).
inline MwGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& o = {}) {
    const int n = uniform_int(rng, o.min_vertices, o.max_vertices);
    const int min_arcs = o.connected ? n - 1 : 0;
    const int m = uniform_int(rng, min_arcs, std::max(min_arcs, o.max_arcs));
    std::vector<Vertex> vertices;
    for (int i = 0; i < n; ++i) vertices.push_back({"v" + std::to_string(i), uniform(rng, o.min_weight, o.max_weight)});
    std::vector<ArcSpec> arcs;
    auto add = [&](int a, int b) {
        const bool flip = uniform_int(rng, 0, 1) == 1;
        arcs.push_back({"e" + std::to_string(arcs.size()), "v" + std::to_string(flip ? b : a),
                        "v" + std::to_string(flip ? a : b), uniform(rng, o.min_weight, o.max_weight),
                        o.random_alpha ? uniform(rng, 0.0, kTwoPi) : 0.0});
    };
    // A vertex of the other parity below `below`, when one exists.
    auto opposite = [&](int v, int below) {
        const int count = (below - (v % 2 == 0 ? 1 : 0) + 1) / 2;
        return 2 * uniform_int(rng, 0, count - 1) + (v % 2 == 0 ? 1 : 0);
    };
    if (o.connected)
        for (int v = 1; v < n; ++v) add(o.bipartite ? opposite(v, v) : uniform_int(rng, 0, v - 1), v);
    while (static_cast<int>(arcs.size()) < m) {
        const int a = uniform_int(rng, 0, n - 1);
        if (o.bipartite) {
            if (n == 1) break;
            add(a, opposite(a, n));
            continue;
        }
        int b = uniform_int(rng, 0, n - 1);
        if (a == b && !o.allow_loops) {
            if (n == 1) break;
            b = (a + 1) % n;
        }
        add(a, b);
    }
    return MwGraph(std::move(vertices), arcs);
}

/// Random subset of arc ids, each kept with probability p.
inline IdSet random_arc_subset(std::mt19937_64& rng, const MwGraph& g, double p) {
    IdSet out;
    for (const Arc& a : g.arcs())
        if (uniform(rng, 0.0, 1.0) < p) out.insert(a.id);
    return out;
}

/// Independent oracle: eigenvalues of the symmetrized DML via Eigen's solver.
inline Eigen::VectorXd oracle_eigenvalues(const Eigen::MatrixXcd& h) {
    if (h.rows() == 0) return {};
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

/// Builds the symmetrized DML entry by entry from the vertex-sum formula, independently of
/// the library's assembly.
inline Eigen::MatrixXcd reference_dml(const MwGraph& g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (const Arc& a : g.arcs()) {
        const auto u = static_cast<Eigen::Index>(a.tail);
        const auto w = static_cast<Eigen::Index>(a.head);
        const double mu = g.vertex(a.tail).weight;
        const double mw = g.vertex(a.head).weight;
        if (u == w) {
            h(u, u) += (2.0 - 2.0 * std::cos(a.alpha)) * a.weight / mu;
            continue;
        }
        h(u, u) += a.weight / mu;
        h(w, w) += a.weight / mw;
        const Complex phase = std::polar(1.0, a.alpha);
        h(u, w) -= a.weight * phase / std::sqrt(mu * mw);
        h(w, u) -= a.weight * std::conj(phase) / std::sqrt(mu * mw);
    }
    return h;
}

}  // namespace maglap::testing
