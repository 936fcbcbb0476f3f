// SPDX-License-Identifier: Apache-2.0
#include "maglap/models.hpp"

#include <map>

#include "maglap/angle.hpp"
#include "maglap/error.hpp"

namespace maglap {

namespace {

struct Builder {
    std::vector<Vertex> vertices;
    std::vector<ArcSpec> arcs;
    std::vector<Eigen::VectorXi> index;
    std::vector<Face> faces;

    void vertex(const std::string& id) { vertices.push_back({id, 1.0}); }
    void arc(const std::string& id, const std::string& tail, const std::string& head, int ind = 0) {
        arcs.push_back({id, tail, head, 1.0, 0.0});
        index.push_back(Eigen::VectorXi::Constant(1, ind));
    }

    PeriodicGraph finish(const ModelSpec& spec) const {
        const MwGraph g = apply_weights(MwGraph(vertices, arcs), spec.weights);
        return constant_flux_potential(PeriodicGraph(g, index, faces), spec.flux);
    }
};

std::string site(int x, int y) { return "v" + std::to_string(x) + "_" + std::to_string(y); }

PeriodicGraph polyacetylene(const ModelSpec& spec) {
    Builder b;
    for (const char* v : {"v1", "v2", "h1", "h2"}) b.vertex(v);
    b.arc("e1", "v2", "v1", 1);
    b.arc("e2", "v1", "v2");
    b.arc("e3", "v1", "v2");
    b.arc("e4", "v1", "h1");
    b.arc("e5", "v2", "h2");
    b.faces.push_back({"f1", {{"e2", 1}, {"e3", -1}}});
    return b.finish(spec);
}

PeriodicGraph agnr3(const ModelSpec& spec) {
    Builder b;
    for (int i = 1; i <= 6; ++i) b.vertex("v" + std::to_string(i));
    b.arc("e1", "v1", "v4", 1);
    Face hexagon{"f1", {}};
    for (int i = 1; i <= 6; ++i) {
        const std::string id = "e" + std::to_string(i + 1);
        b.arc(id, "v" + std::to_string(i), "v" + std::to_string(i % 6 + 1));
        hexagon.steps.push_back({id, 1});
    }
    b.faces.push_back(hexagon);
    return b.finish(spec);
}

// Armchair: N sites across (x), two rows per cell (y). Rungs at even x stay in the cell,
// rungs at odd x climb into the next one.
PeriodicGraph agnr(const ModelSpec& spec) {
    const int n = spec.size;
    if (n < 2) throw InvalidInput("invalid_model", "agnr needs width N >= 2");
    if (n == 3) return agnr3(spec);
    Builder b;
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < n; ++x) b.vertex(site(x, y));
    auto across = [](int x, int y) { return "h" + std::to_string(x) + "_" + std::to_string(y); };
    auto rung = [](int x) { return "r" + std::to_string(x); };
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x + 1 < n; ++x) b.arc(across(x, y), site(x, y), site(x + 1, y));
    for (int x = 0; x < n; ++x) {
        if (x % 2 == 0) {
            b.arc(rung(x), site(x, 0), site(x, 1));
        } else {
            b.arc(rung(x), site(x, 1), site(x, 0), 1);
        }
    }
    for (int x = 0; x + 2 < n; ++x) {
        const int bottom = x % 2 == 0 ? 0 : 1;
        const int top = 1 - bottom;
        b.faces.push_back({"f" + std::to_string(x),
                           {{across(x, bottom), 1},
                            {across(x + 1, bottom), 1},
                            {rung(x + 2), 1},
                            {across(x + 1, top), -1},
                            {across(x, top), -1},
                            {rung(x), -1}}});
    }
    return b.finish(spec);
}

// Zigzag: N rows (y) of two sites (x). Row bonds alternate between in-cell and index 1;
// the rung between rows y and y + 1 sits at x = y mod 2.
PeriodicGraph zgnr(const ModelSpec& spec) {
    const int n = spec.size;
    if (n < 1) throw InvalidInput("invalid_model", "zgnr needs width N >= 1");
    Builder b;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < 2; ++x) b.vertex(site(x, y));
    auto bond = [](int y, int k) { return "h" + std::to_string(y) + "_" + std::to_string(k); };
    auto rung = [](int y) { return "r" + std::to_string(y); };
    for (int y = 0; y < n; ++y) {
        b.arc(bond(y, 0), site(0, y), site(1, y));
        b.arc(bond(y, 1), site(1, y), site(0, y), 1);
    }
    for (int y = 0; y + 1 < n; ++y) b.arc(rung(y), site(y % 2, y), site(y % 2, y + 1));
    for (int y = 0; y + 1 < n; ++y) {
        // From the rung's foot one period to the right along row y, up, and back along row y + 1.
        const int first = y % 2 == 0 ? 0 : 1;
        const int second = 1 - first;
        b.faces.push_back({"f" + std::to_string(y),
                           {{bond(y, first), 1},
                            {bond(y, second), 1},
                            {rung(y), 1},
                            {bond(y + 1, second), -1},
                            {bond(y + 1, first), -1},
                            {rung(y), -1}}});
    }
    return b.finish(spec);
}

PeriodicGraph z_lattice(const ModelSpec& spec) {
    Builder b;
    b.vertex("v1");
    b.arc("e1", "v1", "v1", 1);
    return b.finish(spec);
}

}  // namespace

ModelKind parse_model_kind(const std::string& name) {
    static const std::map<std::string, ModelKind> kinds = {{"polyacetylene", ModelKind::polyacetylene},
                                                           {"agnr", ModelKind::agnr},
                                                           {"zgnr", ModelKind::zgnr},
                                                           {"cycle", ModelKind::cycle},
                                                           {"z_lattice", ModelKind::z_lattice}};
    const auto it = kinds.find(name);
    if (it == kinds.end()) throw InvalidInput("unknown_model", "unknown model '" + name + "'");
    return it->second;
}

std::string model_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::polyacetylene: return "polyacetylene";
        case ModelKind::agnr: return "agnr";
        case ModelKind::zgnr: return "zgnr";
        case ModelKind::cycle: return "cycle";
        case ModelKind::z_lattice: return "z_lattice";
    }
    return "unknown";
}

bool is_periodic(ModelKind kind) { return kind != ModelKind::cycle; }

PeriodicGraph build(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::polyacetylene: return polyacetylene(spec);
        case ModelKind::agnr: return agnr(spec);
        case ModelKind::zgnr: return zgnr(spec);
        case ModelKind::z_lattice: return z_lattice(spec);
        case ModelKind::cycle: break;
    }
    throw InvalidInput("not_periodic", "model '" + model_name(spec.kind) + "' is a finite graph");
}

MwGraph build_graph(const ModelSpec& spec) {
    if (is_periodic(spec.kind)) return build(spec).quotient();
    const int n = spec.size;
    if (n < 3) throw InvalidInput("invalid_model", "cycle needs n >= 3");
    std::vector<Vertex> vertices;
    std::vector<ArcSpec> arcs;
    for (int i = 1; i <= n; ++i) vertices.push_back({"v" + std::to_string(i), 1.0});
    for (int i = 1; i <= n; ++i)
        arcs.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i % n + 1), 1.0,
                        i == 1 ? spec.flux : 0.0});
    return apply_weights(MwGraph(std::move(vertices), arcs), spec.weights);
}

PeriodicGraph constant_flux_potential(const PeriodicGraph& p, double s) {
    if (!p.faces()) throw InvalidInput("missing_faces", "periodic graph carries no face metadata");
    const MwGraph& q = p.quotient();
    const std::vector<Face>& faces = *p.faces();

    // Net coefficient of every arc in every face.
    std::vector<std::map<std::string, int>> coefficient(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (const FaceStep& step : faces[f].steps) coefficient[f][step.arc] += step.sign;

    std::vector<std::size_t> order;
    std::vector<std::string> designated(faces.size());
    std::vector<bool> remaining(faces.size(), true);
    std::vector<std::size_t> by_id(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f) by_id[f] = f;
    std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) { return faces[a].id < faces[b].id; });

    while (order.size() < faces.size()) {
        bool found = false;
        for (std::size_t f : by_id) {
            if (!remaining[f]) continue;
            for (const auto& [arc, c] : coefficient[f]) {
                if (c == 0 || !p.index(q.arc_index(arc)).isZero()) continue;
                bool shared = false;
                for (std::size_t other = 0; other < faces.size() && !shared; ++other)
                    if (other != f && remaining[other] && coefficient[other].contains(arc)) shared = true;
                if (shared) continue;
                designated[f] = arc;
                found = true;
                break;
            }
            if (found) {
                remaining[f] = false;
                order.push_back(f);
                break;
            }
        }
        if (!found) throw InvalidInput("unsolvable_faces", "faces admit no constant-flux potential by peeling");
    }

    Eigen::VectorXd beta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(q.arc_count()));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t f = *it;
        double rest = 0.0;
        for (const auto& [arc, c] : coefficient[f])
            if (arc != designated[f]) rest += c * beta[static_cast<Eigen::Index>(q.arc_index(arc))];
        const int c = coefficient[f].at(designated[f]);
        beta[static_cast<Eigen::Index>(q.arc_index(designated[f]))] = reduce_angle((s - rest) / c);
    }
    return p.with_potential(beta);
}

}  // namespace maglap
