// SPDX-License-Identifier: Apache-2.0
//
// maglap: spectra, bracketings, band structures and flux diagrams of discrete magnetic
// Laplacians from the command line.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maglap/angle.hpp"
#include "maglap/bracketing.hpp"
#include "maglap/error.hpp"
#include "maglap/io.hpp"
#include "maglap/models.hpp"
#include "maglap/periodic.hpp"
#include "maglap/svg.hpp"

namespace {

using namespace maglap;
using io::Json;

struct Options {
    // source
    std::string model;
    std::string graph_path;
    int n = 0;
    int width = 0;
    std::string weights;
    std::optional<double> flux;
    std::optional<double> flux_turns;

    // verb specific
    std::vector<double> theta;
    std::size_t grid = 64;
    std::optional<double> refine;
    std::size_t s_grid = 64;
    std::size_t theta_grid = 64;
    std::string out;
    std::string svg;
    std::optional<std::vector<std::string>> virtualize_arcs;
    std::optional<std::vector<std::string>> virtualize_vertices;
    bool kappa = false;
    std::string vertex;
    std::optional<std::vector<std::string>> arcs;
    std::string variant = "general";
    std::string in;
    std::optional<double> lambda_max;
};

// The graph an invocation works on, with the flux family when one exists.
struct Source {
    MwGraph graph;
    std::optional<PeriodicGraph> periodic;
    std::optional<ModelSpec> model;
};

void add_source(CLI::App* cmd, Options& o) {
    cmd->add_option("--model", o.model, "Built-in model: polyacetylene, agnr, zgnr, cycle, z_lattice");
    cmd->add_option("--graph", o.graph_path, "Graph JSON file");
    cmd->add_option("--n", o.n, "Cycle length (cycle)");
    cmd->add_option("--width", o.width, "Ribbon width N (agnr, zgnr)");
    cmd->add_option("--weights", o.weights, "standard or combinatorial");
    cmd->add_option("--flux", o.flux, "Constant flux s in radians");
    cmd->add_option("--flux-turns", o.flux_turns, "Constant flux as a fraction of 2*pi");
}

std::optional<double> flux_of(const Options& o) {
    if (o.flux && o.flux_turns) throw InvalidInput("usage", "give --flux or --flux-turns, not both");
    if (o.flux) return reduce_angle(*o.flux);
    if (o.flux_turns) return reduce_angle(kTwoPi * *o.flux_turns);
    return std::nullopt;
}

std::optional<WeightScheme> weights_of(const Options& o) {
    if (o.weights.empty()) return std::nullopt;
    if (o.weights == "standard") return WeightScheme::standard;
    if (o.weights == "combinatorial") return WeightScheme::combinatorial;
    throw InvalidInput("usage", "unknown weight scheme '" + o.weights + "'");
}

Source load_source(const Options& o) {
    if (o.model.empty() == o.graph_path.empty()) throw InvalidInput("usage", "give exactly one of --model and --graph");
    const std::optional<double> flux = flux_of(o);
    const std::optional<WeightScheme> weights = weights_of(o);

    if (!o.model.empty()) {
        ModelSpec spec;
        spec.kind = parse_model_kind(o.model);
        spec.weights = weights.value_or(WeightScheme::standard);
        spec.flux = flux.value_or(0.0);
        if (spec.kind == ModelKind::cycle) {
            if (o.n == 0) throw InvalidInput("usage", "cycle needs --n");
            spec.size = o.n;
        } else if (spec.kind == ModelKind::agnr || spec.kind == ModelKind::zgnr) {
            if (o.width == 0) throw InvalidInput("usage", model_name(spec.kind) + " needs --width");
            spec.size = o.width;
        }
        if (!is_periodic(spec.kind)) return {build_graph(spec), std::nullopt, spec};
        PeriodicGraph p = build(spec);
        return {p.quotient(), p, spec};
    }

    io::GraphDocument doc = io::parse_graph(io::read_file(o.graph_path));
    if (weights) {
        doc.graph = apply_weights(doc.graph, *weights);
        if (doc.periodic) doc.periodic = PeriodicGraph(doc.graph, doc.periodic->index(), doc.periodic->faces());
    }
    if (flux) {
        if (!doc.periodic) throw InvalidInput("usage", "--flux needs a periodic graph with faces");
        doc.periodic = constant_flux_potential(*doc.periodic, *flux);
        doc.graph = doc.periodic->quotient();
    }
    return {doc.graph, doc.periodic, std::nullopt};
}

const PeriodicGraph& require_periodic(const Source& src, const char* verb) {
    if (!src.periodic) throw InvalidInput("not_periodic", std::string(verb) + " needs a periodic graph");
    return *src.periodic;
}

IdSet to_set(const std::vector<std::string>& v) { return IdSet(v.begin(), v.end()); }

void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        io::write_file(path, text);
    }
}

void print(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void run_spectrum(const Options& o) {
    const Source src = load_source(o);
    if (src.periodic) {
        Eigen::VectorXd theta = Eigen::VectorXd::Zero(src.periodic->rank());
        if (!o.theta.empty()) theta = Eigen::Map<const Eigen::VectorXd>(o.theta.data(), static_cast<Eigen::Index>(o.theta.size()));
        print(io::spectrum_to_json(fiber_spectrum(*src.periodic, theta)));
    } else {
        if (!o.theta.empty()) throw InvalidInput("usage", "--theta needs a periodic graph");
        print(io::spectrum_to_json(spectrum_of(src.graph)));
    }
}

void run_bands(const Options& o) {
    const Source src = load_source(o);
    BandOptions options;
    options.refine_tol = o.refine;
    const BandStructure bs = band_structure(require_periodic(src, "bands"), o.grid, options);
    emit(o.out, io::band_structure_csv(bs));
    if (!o.out.empty()) {
        print({{"grid", bs.grid},
               {"band_intervals", io::intervals_to_json(bs.band_intervals)},
               {"union", io::intervals_to_json(bs.covered)},
               {"gaps", io::intervals_to_json(bs.gaps)},
               {"resolution_bound", io::round12(bs.resolution_bound)}});
    }
}

FluxFamily family_of(const Source& src) {
    if (src.model) {
        ModelSpec spec = *src.model;
        if (!is_periodic(spec.kind)) throw InvalidInput("not_periodic", "sweep needs a periodic model");
        return [spec](double s) mutable {
            spec.flux = s;
            return build(spec);
        };
    }
    const PeriodicGraph p = require_periodic(src, "sweep");
    if (!p.faces()) throw InvalidInput("missing_faces", "sweep over a graph file needs face metadata");
    return [p](double s) { return constant_flux_potential(p, s); };
}

void run_sweep(const Options& o) {
    const Source src = load_source(o);
    if (o.s_grid < 1 || o.theta_grid < 2) throw InvalidInput("usage", "--s-grid >= 1 and --theta-grid >= 2 required");
    const FluxDiagram d = flux_sweep(family_of(src), o.s_grid, o.theta_grid);
    emit(o.out, io::flux_diagram_csv(d));
    if (!o.svg.empty()) {
        SvgStyle style;
        style.lambda_max = o.lambda_max;
        io::write_file(o.svg, render_svg(d, style));
    }
}

void run_bracket(const Options& o) {
    const Source src = load_source(o);
    std::optional<IdSet> e0;
    std::optional<IdSet> v0;
    if (o.virtualize_arcs) e0 = to_set(*o.virtualize_arcs);
    if (o.virtualize_vertices) v0 = to_set(*o.virtualize_vertices);
    Bracketing b;
    if (src.periodic) {
        b = covering_bracketing(*src.periodic, v0, e0);
    } else {
        const IdSet arcs = e0.value_or(IdSet{});
        b = bracketing(src.graph, arcs, v0 ? *v0 : minimal_neighborhood(src.graph, arcs));
    }
    if (o.kappa) b = kappa_refine(b);
    print(io::bracketing_to_json(b));
}

DeltaVariant variant_of(const std::string& name) {
    if (name == "general") return DeltaVariant::general;
    if (name == "standard") return DeltaVariant::standard;
    if (name == "combinatorial") return DeltaVariant::combinatorial;
    throw InvalidInput("usage", "unknown delta variant '" + name + "'");
}

void run_delta(const Options& o) {
    const Source src = load_source(o);
    if (o.vertex.empty()) throw InvalidInput("usage", "delta needs --vertex");
    IdSet b;
    if (o.arcs) {
        b = to_set(*o.arcs);
    } else if (src.periodic) {
        const std::size_t v = src.graph.vertex_index(o.vertex);
        for (const std::string& id : connecting_arc_classes(*src.periodic)) {
            const Arc& a = src.graph.arc(src.graph.arc_index(id));
            if (a.tail == v || a.head == v) b.insert(id);
        }
    }
    const DeltaResult r = delta_criterion(src.graph, o.vertex, b, variant_of(o.variant));
    const double discrepancy = trace_identity_check(src.graph, o.vertex, b);
    print({{"vertex", o.vertex},
           {"arcs", std::vector<std::string>(b.begin(), b.end())},
           {"variant", o.variant},
           {"delta", io::round12(r.delta)},
           {"lambda_1", io::round12(r.lambda_1)},
           {"trace_discrepancy", io::round12(discrepancy)},
           {"verdict", r.certified() ? "gap certified" : "not certified"}});
}

void run_render(const Options& o) {
    if (o.in.empty()) throw InvalidInput("usage", "render needs --in");
    const FluxDiagram d = io::parse_flux_diagram_csv(io::read_file(o.in), o.lambda_max);
    SvgStyle style;
    style.lambda_max = o.lambda_max;
    emit(o.out, render_svg(d, style));
}

void run_export(const Options& o) {
    const Source src = load_source(o);
    print(src.periodic ? io::graph_to_json(*src.periodic) : io::graph_to_json(src.graph));
}

int fail(const std::string& kind, const std::string& message, int code) {
    std::cerr << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Spectra and spectral gaps of discrete magnetic Laplacians"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "Spectrum JSON of a finite graph or a fiber");
    add_source(spectrum, o);
    spectrum->add_option("--theta", o.theta, "Fiber character angles, comma separated")->delimiter(',');

    auto* bands = app.add_subcommand("bands", "Band structure CSV");
    add_source(bands, o);
    bands->add_option("--grid", o.grid, "Points per dimension");
    bands->add_option("--refine", o.refine, "Double the grid until band ends move less than this");
    bands->add_option("--out", o.out, "CSV path (stdout when absent)");

    auto* sweep = app.add_subcommand("sweep", "Flux diagram CSV and optional SVG");
    add_source(sweep, o);
    sweep->add_option("--s-grid", o.s_grid, "Number of flux values");
    sweep->add_option("--theta-grid", o.theta_grid, "Character grid points per dimension");
    sweep->add_option("--out", o.out, "CSV path (stdout when absent)");
    sweep->add_option("--svg", o.svg, "SVG path");
    sweep->add_option("--lambda-max", o.lambda_max, "Top of the SVG lambda axis");

    auto* bracket = app.add_subcommand("bracket", "Bracketing JSON");
    add_source(bracket, o);
    bracket->add_option("--virtualize-arcs", o.virtualize_arcs, "E0, comma separated")->delimiter(',');
    bracket->add_option("--virtualize-vertices", o.virtualize_vertices, "V0, comma separated")->delimiter(',');
    bracket->add_flag("--kappa", o.kappa, "Apply the kappa refinement");

    auto* delta = app.add_subcommand("delta", "Delta gap certificate");
    add_source(delta, o);
    delta->add_option("--vertex", o.vertex, "v0");
    delta->add_option("--arcs", o.arcs, "B, comma separated (default: connecting arcs at v0)")->delimiter(',');
    delta->add_option("--variant", o.variant, "general, standard or combinatorial");

    auto* render = app.add_subcommand("render", "Flux diagram CSV to SVG");
    render->add_option("--in", o.in, "Flux diagram CSV");
    render->add_option("--out", o.out, "SVG path (stdout when absent)");
    render->add_option("--lambda-max", o.lambda_max, "Top of the lambda axis");

    auto* exporter = app.add_subcommand("export", "Graph JSON of a model or graph file");
    add_source(exporter, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 1);
    }

    try {
        if (*spectrum) run_spectrum(o);
        else if (*bands) run_bands(o);
        else if (*sweep) run_sweep(o);
        else if (*bracket) run_bracket(o);
        else if (*delta) run_delta(o);
        else if (*render) run_render(o);
        else if (*exporter) run_export(o);
    } catch (const CostGuardExceeded& e) {
        return fail(e.kind(), e.what(), 2);
    } catch (const NumericalFailure& e) {
        return fail(e.kind(), e.what(), 3);
    } catch (const Error& e) {
        return fail(e.kind(), e.what(), 1);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 3);
    }
    return 0;
}
