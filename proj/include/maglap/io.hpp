// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "maglap/bracketing.hpp"
#include "maglap/graph.hpp"
#include "maglap/periodic.hpp"
#include "maglap/spectrum.hpp"

namespace maglap::io {

using Json = nlohmann::json;

/// A parsed graph file: always a graph, plus the covering data when `index` is present.
struct GraphDocument {
    MwGraph graph;
    std::optional<PeriodicGraph> periodic;
};

/// Reads the graph JSON format. `"weights": "standard" | "combinatorial"` replaces any
/// explicit weights; `faces` is optional covering metadata.
GraphDocument parse_graph(const Json& doc);
GraphDocument parse_graph(const std::string& text);

/// Full-precision serialization; parse_graph(graph_to_json(g)) reproduces g exactly.
Json graph_to_json(const MwGraph& g);
Json graph_to_json(const PeriodicGraph& p);

/// x rounded to 12 significant digits, as the JSON number nearest to that decimal.
double round12(double x);

/// "%.12g" formatting used by every CSV writer.
std::string format_real(double x);

Json spectrum_to_json(const Spectrum& s);
Json bracketing_to_json(const Bracketing& b);
Json intervals_to_json(const IntervalList& list);

/// Header theta_1..theta_d, lambda_1..lambda_n; one row per grid point.
std::string band_structure_csv(const BandStructure& bs);

/// Header s, band_lo_1, band_hi_1, ..., band_lo_n, band_hi_n.
std::string flux_diagram_csv(const FluxDiagram& d);

/// Inverse of flux_diagram_csv. Gaps are recomputed in [0, ambient_max] with the ambient
/// bound taken as the smallest integer ≥ every band end (less 1e−6), unless given.
FluxDiagram parse_flux_diagram_csv(const std::string& text, std::optional<double> ambient_max = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace maglap::io
