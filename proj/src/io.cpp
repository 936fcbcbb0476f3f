// SPDX-License-Identifier: Apache-2.0
#include "maglap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "maglap/error.hpp"

namespace maglap::io {

namespace {

std::optional<WeightScheme> weight_shorthand(const Json& doc) {
    if (!doc.contains("weights")) return std::nullopt;
    const std::string name = doc.at("weights").get<std::string>();
    if (name == "standard") return WeightScheme::standard;
    if (name == "combinatorial") return WeightScheme::combinatorial;
    throw InvalidInput("invalid_json", "unknown weight scheme '" + name + "'");
}

double weight_field(const Json& item, bool shorthand) {
    if (item.contains("weight")) return item.at("weight").get<double>();
    if (shorthand) return 1.0;
    throw InvalidInput("invalid_json", "missing weight for '" + item.at("id").get<std::string>() + "'");
}

GraphDocument parse_checked(const Json& doc) {
    if (!doc.is_object()) throw InvalidInput("invalid_json", "graph document must be an object");
    const std::optional<WeightScheme> scheme = weight_shorthand(doc);

    std::vector<Vertex> vertices;
    for (const Json& v : doc.at("vertices")) vertices.push_back({v.at("id").get<std::string>(), weight_field(v, scheme.has_value())});

    std::vector<ArcSpec> arcs;
    std::vector<Eigen::VectorXi> index;
    std::size_t with_index = 0;
    for (const Json& a : doc.value("arcs", Json::array())) {
        arcs.push_back({a.at("id").get<std::string>(), a.at("tail").get<std::string>(), a.at("head").get<std::string>(),
                        weight_field(a, scheme.has_value()), a.value("alpha", 0.0)});
        if (a.contains("index")) {
            const std::vector<int> ind = a.at("index").get<std::vector<int>>();
            index.push_back(Eigen::Map<const Eigen::VectorXi>(ind.data(), static_cast<Eigen::Index>(ind.size())));
            ++with_index;
        }
    }
    MwGraph g(std::move(vertices), arcs);
    if (scheme) g = apply_weights(g, *scheme);

    GraphDocument out{g, std::nullopt};
    const bool has_rank = doc.contains("group_rank");
    if (with_index == 0 && !has_rank) {
        if (doc.contains("faces")) throw InvalidInput("invalid_json", "faces given without arc indices");
        return out;
    }
    if (with_index != arcs.size()) throw InvalidInput("invalid_json", "either every arc or no arc carries an index");
    if (has_rank) {
        const int rank = doc.at("group_rank").get<int>();
        for (const Eigen::VectorXi& v : index)
            if (v.size() != rank) throw InvalidInput("invalid_json", "index length differs from group_rank");
    }
    std::optional<std::vector<Face>> faces;
    if (doc.contains("faces")) {
        faces.emplace();
        for (const Json& f : doc.at("faces")) {
            Face face{f.at("id").get<std::string>(), {}};
            for (const Json& step : f.at("arcs")) face.steps.push_back({step.at(0).get<std::string>(), step.at(1).get<int>()});
            faces->push_back(std::move(face));
        }
    }
    out.periodic = PeriodicGraph(g, std::move(index), std::move(faces));
    return out;
}

Json arcs_json(const MwGraph& g, const std::vector<Eigen::VectorXi>* index) {
    Json arcs = Json::array();
    for (std::size_t i = 0; i < g.arc_count(); ++i) {
        const Arc& a = g.arc(i);
        Json item = {{"id", a.id},
                     {"tail", g.vertex(a.tail).id},
                     {"head", g.vertex(a.head).id},
                     {"weight", a.weight},
                     {"alpha", a.alpha}};
        if (index) {
            const Eigen::VectorXi& ind = (*index)[i];
            item["index"] = std::vector<int>(ind.data(), ind.data() + ind.size());
        }
        arcs.push_back(std::move(item));
    }
    return arcs;
}

Json rounded(const Eigen::VectorXd& v) {
    Json out = Json::array();
    for (double x : v) out.push_back(round12(x));
    return out;
}

}  // namespace

GraphDocument parse_graph(const Json& doc) {
    try {
        return parse_checked(doc);
    } catch (const Json::exception& e) {
        throw InvalidInput("invalid_json", e.what());
    }
}

GraphDocument parse_graph(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        throw InvalidInput("invalid_json", e.what());
    }
    return parse_graph(doc);
}

Json graph_to_json(const MwGraph& g) {
    Json vertices = Json::array();
    for (const Vertex& v : g.vertices()) vertices.push_back({{"id", v.id}, {"weight", v.weight}});
    return {{"vertices", vertices}, {"arcs", arcs_json(g, nullptr)}};
}

Json graph_to_json(const PeriodicGraph& p) {
    Json doc = graph_to_json(p.quotient());
    doc["arcs"] = arcs_json(p.quotient(), &p.index());
    doc["group_rank"] = p.rank();
    if (p.faces()) {
        Json faces = Json::array();
        for (const Face& f : *p.faces()) {
            Json steps = Json::array();
            for (const FaceStep& s : f.steps) steps.push_back({s.arc, s.sign});
            faces.push_back({{"id", f.id}, {"arcs", steps}});
        }
        doc["faces"] = faces;
    }
    return doc;
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) { return std::stod(format_real(x)); }

Json intervals_to_json(const IntervalList& list) {
    Json out = Json::array();
    for (const Interval& i : list) out.push_back({round12(i.lo), round12(i.hi)});
    return out;
}

Json spectrum_to_json(const Spectrum& s) {
    return {{"values", rounded(s.values)}, {"ambient", {0.0, round12(s.ambient_max)}}};
}

Json bracketing_to_json(const Bracketing& b) {
    Json points = Json::array();
    for (const Interval& p : b.isolated_points) points.push_back(round12(p.lo));
    return {{"intervals", intervals_to_json(b.intervals)},
            {"union", intervals_to_json(b.covered)},
            {"gaps", intervals_to_json(b.gaps)},
            {"isolated_points", points},
            {"ambient", {0.0, round12(b.ambient_max)}},
            {"padded_from", b.padded_from},
            {"lower", rounded(b.lower.values)},
            {"upper", rounded(b.upper.values)},
            {"kappa_refined", b.kappa_refined}};
}

std::string band_structure_csv(const BandStructure& bs) {
    std::ostringstream out;
    const Eigen::Index d = bs.theta_grid.cols();
    const Eigen::Index n = bs.bands.cols();
    for (Eigen::Index j = 0; j < d; ++j) out << (j ? "," : "") << "theta_" << j + 1;
    for (Eigen::Index k = 0; k < n; ++k) out << ",lambda_" << k + 1;
    out << '\n';
    for (Eigen::Index r = 0; r < bs.bands.rows(); ++r) {
        for (Eigen::Index j = 0; j < d; ++j) out << (j ? "," : "") << format_real(bs.theta_grid(r, j));
        for (Eigen::Index k = 0; k < n; ++k) out << ',' << format_real(bs.bands(r, k));
        out << '\n';
    }
    return out.str();
}

std::string flux_diagram_csv(const FluxDiagram& d) {
    std::ostringstream out;
    const std::size_t n = d.rows.empty() ? 0 : d.rows.front().band_intervals.size();
    out << 's';
    for (std::size_t k = 1; k <= n; ++k) out << ",band_lo_" << k << ",band_hi_" << k;
    out << '\n';
    for (const FluxRow& row : d.rows) {
        out << format_real(row.s);
        for (const Interval& band : row.band_intervals) out << ',' << format_real(band.lo) << ',' << format_real(band.hi);
        out << '\n';
    }
    return out.str();
}

FluxDiagram parse_flux_diagram_csv(const std::string& text, std::optional<double> ambient_max) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("s", 0) != 0)
        throw InvalidInput("invalid_csv", "flux diagram CSV must start with an 's,...' header");
    std::size_t columns = 1;
    for (char c : line) columns += c == ',';
    if (columns % 2 != 1) throw InvalidInput("invalid_csv", "flux diagram header needs lo/hi column pairs");

    FluxDiagram d;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<double> cells;
        std::istringstream fields(line);
        std::string cell;
        try {
            while (std::getline(fields, cell, ',')) cells.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw InvalidInput("invalid_csv", "non-numeric cell on line " + std::to_string(line_no));
        }
        if (cells.size() != columns)
            throw InvalidInput("invalid_csv", "line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                                                  " cells, expected " + std::to_string(columns));
        FluxRow row{cells[0], {}, {}};
        for (std::size_t c = 1; c + 1 < cells.size(); c += 2) {
            if (cells[c] > cells[c + 1]) throw InvalidInput("invalid_csv", "band with lo > hi on line " + std::to_string(line_no));
            row.band_intervals.push_back({cells[c], cells[c + 1]});
        }
        d.rows.push_back(std::move(row));
    }
    if (ambient_max) {
        d.ambient_max = *ambient_max;
    } else {
        double top = 0.0;
        for (const FluxRow& row : d.rows)
            for (const Interval& band : row.band_intervals) top = std::max(top, band.hi);
        d.ambient_max = std::max(1.0, std::ceil(top - 1e-6));
    }
    for (FluxRow& row : d.rows) row.gaps = complement(merge_intervals(row.band_intervals), 0.0, d.ambient_max);
    return d;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("io_error", "cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("io_error", "cannot write '" + path + "'");
    out << contents;
    if (!out) throw InvalidInput("io_error", "write to '" + path + "' failed");
}

}  // namespace maglap::io
