// SPDX-License-Identifier: Apache-2.0
#include "maglap/bracketing.hpp"

#include <cmath>
#include <numbers>

#include "maglap/angle.hpp"
#include "maglap/cost_guard.hpp"
#include "maglap/error.hpp"
#include "parallel.hpp"

namespace maglap {

namespace {

void finish(Bracketing& b) {
    b.gaps = complement(b.covered, 0.0, b.ambient_max);
    b.isolated_points = isolated_points(b.covered);
}

struct ConnectingArcs {
    std::size_t v0 = 0;
    std::vector<std::size_t> arcs;
};

ConnectingArcs validate_connecting(const MwGraph& g, const std::string& v0, const IdSet& b) {
    ConnectingArcs out{g.vertex_index(v0), {}};
    for (const std::string& id : b) {
        const std::size_t ai = g.arc_index(id);
        const Arc& a = g.arc(ai);
        if (a.is_loop()) throw InvalidInput("loop_in_connecting_set", "arc '" + id + "' is a loop");
        if (a.tail != out.v0 && a.head != out.v0)
            throw InvalidInput("arc_not_incident", "arc '" + id + "' is not incident to '" + v0 + "'");
        out.arcs.push_back(ai);
    }
    return out;
}

double general_delta_weight_term(const MwGraph& g, const ConnectingArcs& c) {
    const double m_v0 = g.vertex(c.v0).weight;
    double total = relative_weight(g, c.v0);
    for (std::size_t ai : c.arcs) {
        const Arc& a = g.arc(ai);
        const std::size_t other = a.tail == c.v0 ? a.head : a.tail;
        total -= a.weight / g.vertex(other).weight;
        total -= a.weight / m_v0;
    }
    return total;
}

}  // namespace

Bracketing bracketing(const MwGraph& g, const IdSet& e0, const IdSet& v0) {
    if (!is_neighborhood(g, e0, v0))
        throw InvalidInput("neighborhood_violation", "virtualized vertices do not cover every virtualized arc");
    Bracketing b;
    b.ambient_max = 2.0 * rho_infinity(g);
    b.lower = spectrum_of(virtualize_arcs(g, e0));
    b.lower.ambient_max = b.ambient_max;
    if (v0.empty()) {
        b.upper = spectrum_of(g);
    } else if (v0.size() == g.vertex_count()) {
        b.upper.values.resize(0);  // nothing active: Δ⁺ is all padding
        b.upper.ambient_max = b.ambient_max;
    } else {
        b.upper = eigenvalues(assemble_dirichlet_dml(virtualize_vertices(g, v0)));
    }
    b.padded_from = static_cast<std::size_t>(b.upper.size());

    if (!spectrally_leq(b.lower, b.upper, b.ambient_max, 1e-12 * std::max(1.0, b.ambient_max)))
        throw NumericalFailure("bracketing violated the spectral order W- <= W+");

    const Eigen::VectorXd hi = padded(b.upper, b.lower.size(), b.ambient_max);
    for (Eigen::Index k = 0; k < b.lower.size(); ++k) b.intervals.push_back({b.lower[k], std::max(b.lower[k], hi[k])});
    b.covered = merge_intervals(b.intervals);
    b.kappa_eligible = has_weight_scheme(g, WeightScheme::standard) && is_bipartite(g).has_value();
    finish(b);
    return b;
}

Bracketing kappa_refine(const Bracketing& b) {
    if (!b.kappa_eligible)
        throw InvalidInput("kappa_ineligible", "kappa refinement needs a bipartite graph with standard weights");
    Bracketing out = b;
    out.covered = intersect(b.covered, reflect(b.covered, b.ambient_max));
    out.kappa_refined = true;
    finish(out);
    return out;
}

double arc_coupling(const MwGraph& g, const Arc& a) {
    if (a.is_loop()) return 2.0 * a.weight / g.vertex(a.tail).weight;
    return a.weight / std::sqrt(g.vertex(a.tail).weight * g.vertex(a.head).weight);
}

IntervalList magnetic_gap_set(const MwGraph& g, std::size_t grid) {
    if (grid == 0) throw InvalidInput("grid must be positive");
    const GaugeResult gauge = gauge_reduce(g);
    std::vector<std::size_t> chords;
    for (const std::string& id : gauge.support) chords.push_back(g.arc_index(id));
    if (chords.size() > 4)
        throw CostGuardExceeded("magnetic gap set over " + std::to_string(chords.size()) + " cycles (at most 4)");

    const double n = static_cast<double>(g.vertex_count());
    const double points = std::pow(static_cast<double>(grid), static_cast<double>(chords.size()));
    check_cost(points * n * n * n, "magnetic_gap_set");

    const auto count = static_cast<std::size_t>(points);
    const auto nv = static_cast<Eigen::Index>(g.vertex_count());
    std::vector<Eigen::VectorXd> spectra(count);
    detail::parallel_for(count, [&](std::size_t p) {
        Eigen::VectorXd alpha = gauge.graph.alpha();
        std::size_t rest = p;
        for (std::size_t c : chords) {
            alpha[static_cast<Eigen::Index>(c)] = kTwoPi * static_cast<double>(rest % grid) / static_cast<double>(grid);
            rest /= grid;
        }
        spectra[p] = spectrum_of(gauge.graph.with_alpha(alpha)).values;
    });

    IntervalList bands;
    for (Eigen::Index k = 0; k < nv; ++k) {
        Interval band{spectra[0][k], spectra[0][k]};
        for (const Eigen::VectorXd& s : spectra) {
            band.lo = std::min(band.lo, s[k]);
            band.hi = std::max(band.hi, s[k]);
        }
        bands.push_back(band);
    }
    double resolution = 0.0;
    for (std::size_t c : chords) resolution += arc_coupling(g, g.arc(c)) * std::numbers::pi / static_cast<double>(grid);
    return complement(merge_intervals(std::move(bands)), 0.0, 2.0 * rho_infinity(g),
                      std::max(kMergeTolerance, 2.0 * resolution));
}

DeltaResult delta_criterion(const MwGraph& g, const std::string& v0, const IdSet& b, DeltaVariant variant) {
    const ConnectingArcs c = validate_connecting(g, v0, b);
    DeltaResult r;
    r.lambda_1 = spectrum_of(virtualize_arcs(g, b))[0];
    const auto size_b = static_cast<double>(c.arcs.size());
    switch (variant) {
        case DeltaVariant::general:
            r.delta = general_delta_weight_term(g, c) - r.lambda_1;
            break;
        case DeltaVariant::standard: {
            if (!has_weight_scheme(g, WeightScheme::standard))
                throw InvalidInput("weight_mismatch", "standard delta variant needs standard weights");
            double term = 1.0 - size_b / static_cast<double>(degree(g, c.v0));
            for (std::size_t ai : c.arcs) {
                const Arc& a = g.arc(ai);
                term -= 1.0 / static_cast<double>(degree(g, a.tail == c.v0 ? a.head : a.tail));
            }
            r.delta = term - r.lambda_1;
            break;
        }
        case DeltaVariant::combinatorial:
            if (!has_weight_scheme(g, WeightScheme::combinatorial))
                throw InvalidInput("weight_mismatch", "combinatorial delta variant needs combinatorial weights");
            r.delta = static_cast<double>(degree(g, c.v0)) - 2.0 * size_b - r.lambda_1;
            break;
    }
    return r;
}

double trace_identity_check(const MwGraph& g, const std::string& v0, const IdSet& b) {
    const ConnectingArcs c = validate_connecting(g, v0, b);
    const Spectrum lower = spectrum_of(virtualize_arcs(g, b));
    double upper_trace = 0.0;
    if (g.vertex_count() > 1)
        upper_trace = eigenvalues(assemble_dirichlet_dml(virtualize_vertices(g, {v0}))).values.sum();
    const double via_traces = lower.values.sum() - upper_trace - lower[0];
    // A loop at v0 adds −2 m_e cos α_e / m(v0) to its diagonal entry.
    double loop_term = 0.0;
    for (std::size_t ai : g.incident(c.v0)) {
        const Arc& a = g.arc(ai);
        if (a.is_loop()) loop_term -= 2.0 * a.weight * std::cos(a.alpha) / g.vertex(c.v0).weight;
    }
    const double closed_form = general_delta_weight_term(g, c) + loop_term - lower[0];
    const double discrepancy = std::abs(via_traces - closed_form);

    double scale = 1.0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) scale += relative_weight(g, v);
    if (discrepancy > 1e-9 * scale)
        throw NumericalFailure("trace identity violated by " + std::to_string(discrepancy));
    return discrepancy;
}

}  // namespace maglap
