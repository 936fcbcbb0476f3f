// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "maglap/graph.hpp"
#include "maglap/periodic.hpp"

namespace maglap {

enum class ModelKind { polyacetylene, agnr, zgnr, cycle, z_lattice };

/// A built-in example. `size` is the ribbon width N (agnr, zgnr) or the cycle length n;
/// it is ignored by the other models.
struct ModelSpec {
    ModelKind kind = ModelKind::polyacetylene;
    int size = 0;
    WeightScheme weights = WeightScheme::standard;
    double flux = 0.0;
};

ModelKind parse_model_kind(const std::string& name);
std::string model_name(ModelKind kind);

/// False only for cycle, which is a finite graph.
bool is_periodic(ModelKind kind);

/// Covering graph of a periodic model, with the constant-flux potential β(flux).
///
/// polyacetylene: v1, v2 and hydrogens h1, h2; e1: v2 → v1 with index 1, e2 and e3: v1 → v2,
/// pendants e4: v1 → h1, e5: v2 → h2. β = flux on e2.
/// agnr(3): hexagon e2..e7 (v1 → v2 → … → v6 → v1) and e1: v1 → v4 with index 1.
/// agnr(N ≥ 2), N ≠ 3, and zgnr(N ≥ 1): brick-wall unit cells with 2N carbon vertices.
PeriodicGraph build(const ModelSpec& spec);

/// The graph a model's spectra are computed from: the quotient for periodic models, the
/// n-cycle v1 → … → vn → v1 with α = flux on e1 for cycle.
MwGraph build_graph(const ModelSpec& spec);

/// Puts flux s through every face and zeroes β elsewhere. Faces are peeled off one at a
/// time; each is given the first index-zero arc (by id) that no remaining face uses, and
/// the designated values are then solved in reverse peeling order. Throws when p carries
/// no face metadata.
PeriodicGraph constant_flux_potential(const PeriodicGraph& p, double s);

}  // namespace maglap
