// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "maglap/angle.hpp"
#include "maglap/error.hpp"
#include "maglap/graph.hpp"
#include "maglap/models.hpp"
#include "maglap/spectrum.hpp"
#include "support/random_graph.hpp"

using namespace maglap;

namespace {

MwGraph path(int n, double alpha = 0.0) {
    std::vector<Vertex> v;
    std::vector<ArcSpec> a;
    for (int i = 1; i <= n; ++i) v.push_back({"v" + std::to_string(i), 1.0});
    for (int i = 1; i < n; ++i)
        a.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1), 1.0, alpha});
    return MwGraph(v, a);
}

MwGraph cycle(int n, const std::vector<double>& alpha) {
    std::vector<Vertex> v;
    std::vector<ArcSpec> a;
    for (int i = 1; i <= n; ++i) v.push_back({"v" + std::to_string(i), 1.0});
    for (int i = 1; i <= n; ++i)
        a.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i % n + 1), 1.0,
                     alpha[static_cast<std::size_t>(i - 1)]});
    return MwGraph(v, a);
}

MwGraph loop_graph(double alpha = 0.0) { return MwGraph({{"v", 1.0}}, {{"l", "v", "v", 1.0, alpha}}); }

MwGraph polyacetylene_quotient() { return build_graph({ModelKind::polyacetylene, 0, WeightScheme::standard, 0.0}); }

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("construction validates ids, endpoints and weights") {
    CHECK_THROWS_AS(MwGraph({{"a", 1.0}, {"a", 1.0}}, {}), InvalidInput);
    CHECK_THROWS_AS(MwGraph({{"a", 0.0}}, {}), InvalidInput);
    CHECK_THROWS_AS(MwGraph({{"a", 1.0}}, {{"e", "a", "b", 1.0, 0.0}}), InvalidInput);
    CHECK_THROWS_AS(MwGraph({{"a", 1.0}}, {{"e", "a", "a", -1.0, 0.0}}), InvalidInput);
    CHECK_THROWS_AS(MwGraph({{"a", 1.0}}, {{"e", "a", "a", 1.0, 0.0}, {"e", "a", "a", 1.0, 0.0}}), InvalidInput);
    CHECK_THROWS_AS(MwGraph({{"a", 1.0}}, {{"e", "a", "a", 1.0, std::nan("")}}), InvalidInput);
}

TEST_CASE("alpha is reduced into [0, 2pi)") {
    const MwGraph g({{"a", 1.0}, {"b", 1.0}}, {{"e", "a", "b", 1.0, -std::numbers::pi / 2}, {"f", "a", "b", 1.0, 5 * kTwoPi}});
    CHECK(g.arc(0).alpha == doctest::Approx(3 * std::numbers::pi / 2));
    CHECK(g.arc(1).alpha == 0.0);
}

TEST_CASE("degree") {
    const MwGraph edge({{"v1", 1.0}, {"v2", 1.0}}, {{"e", "v1", "v2", 1.0, 0.0}});
    CHECK(degree(edge, "v1") == 1);
    CHECK(degree(edge, "v2") == 1);
    CHECK(degree(loop_graph(), "v") == 2);
    CHECK(degree(polyacetylene_quotient(), "v1") == 4);
    CHECK_THROWS_AS(degree(edge, "nope"), InvalidInput);
}

TEST_CASE("relative weight and rho_infinity") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        const MwGraph g = apply_weights(testing::random_graph(rng), WeightScheme::standard);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (degree(g, v) > 0) CHECK(relative_weight(g, v) == doctest::Approx(1.0));
        }
    }
    const MwGraph star = apply_weights(
        MwGraph({{"c", 1.0}, {"a", 1.0}, {"b", 1.0}, {"d", 1.0}},
                {{"e1", "c", "a", 1.0, 0.0}, {"e2", "c", "b", 1.0, 0.0}, {"e3", "c", "d", 1.0, 0.0}}),
        WeightScheme::combinatorial);
    CHECK(relative_weight(star, "c") == 3.0);
    CHECK(rho_infinity(star) == 3.0);
    CHECK(relative_weight(apply_weights(loop_graph(), WeightScheme::combinatorial), "v") == 2.0);
    CHECK(rho_infinity(polyacetylene_quotient()) == doctest::Approx(1.0));
    CHECK_THROWS_AS(rho_infinity(MwGraph()), InvalidInput);
}

TEST_CASE("relative weight times vertex weight is the incident arc weight") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const MwGraph g = testing::random_graph(rng);
        std::vector<double> incident(g.vertex_count(), 0.0);
        for (const Arc& a : g.arcs()) {
            incident[a.tail] += a.weight;
            incident[a.head] += a.weight;
        }
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const double lhs = relative_weight(g, v) * g.vertex(v).weight;
            CHECK(std::abs(lhs - incident[v]) <= 1e-12 * std::max(1.0, incident[v]));
        }
    }
}

TEST_CASE("betti") {
    CHECK(betti(path(5)) == 0);
    CHECK(betti(polyacetylene_quotient()) == 2);
    CHECK(betti(build_graph({ModelKind::agnr, 3, WeightScheme::standard, 0.0})) == 2);
    const MwGraph split({{"a", 1.0}, {"b", 1.0}}, {});
    CHECK_THROWS_AS(betti(split), InvalidInput);
}

TEST_CASE("is_bipartite") {
    const auto even = is_bipartite(cycle(6, std::vector<double>(6, 0.0)));
    REQUIRE(even.has_value());
    CHECK(even->first.size() == 3);
    CHECK_FALSE(is_bipartite(cycle(5, std::vector<double>(5, 0.0))).has_value());
    CHECK_FALSE(is_bipartite(loop_graph()).has_value());
    const MwGraph pa = polyacetylene_quotient();
    const auto parts = is_bipartite(pa);
    REQUIRE(parts.has_value());
    for (const Arc& a : pa.arcs())
        CHECK(parts->first.contains(pa.vertex(a.tail).id) != parts->first.contains(pa.vertex(a.head).id));
}

TEST_CASE("gauge_reduce examples") {
    const MwGraph tree = path(6, 1.3);
    const GaugeResult t = gauge_reduce(tree);
    for (const auto& [id, value] : t.reduced_alpha) CHECK(angles_equal(value, 0.0));
    CHECK(t.support.empty());

    const double s = 0.9;
    const GaugeResult c = gauge_reduce(cycle(5, {0.0, 0.0, s, 0.0, 0.0}));
    CHECK(c.support == IdSet{"e3"});
    CHECK(angles_equal(c.reduced_alpha.at("e3"), s));

    const MwGraph spread = cycle(3, {s / 3, s / 3, s / 3});
    const GaugeResult r = gauge_reduce(spread);
    REQUIRE(r.support.size() == 1);
    double total = 0.0;
    for (const auto& [id, value] : r.reduced_alpha) {
        if (!r.support.contains(id)) CHECK(angles_equal(value, 0.0));
        total += value;
    }
    CHECK(angles_equal(total, s));
    const Eigen::VectorXd before = testing::oracle_eigenvalues(testing::reference_dml(spread));
    const Eigen::VectorXd after = testing::oracle_eigenvalues(testing::reference_dml(r.graph));
    CHECK((before - after).cwiseAbs().maxCoeff() < 1e-9);
    CHECK_THROWS_AS(gauge_reduce(MwGraph({{"a", 1.0}, {"b", 1.0}}, {})), InvalidInput);
}

TEST_CASE("cycle_fluxes") {
    for (const auto& [id, f] : cycle_fluxes(polyacetylene_quotient())) CHECK(angles_equal(f, 0.0));
    const double s = 2.2;
    const auto fluxes = cycle_fluxes(build_graph({ModelKind::polyacetylene, 0, WeightScheme::standard, s}));
    REQUIRE(fluxes.size() == 2);
    // Tree in arc order: e1, e4, e5. Chord e2 closes the digon through e1 with flux s.
    CHECK(angles_equal(fluxes.at("e2"), s));
    CHECK(angles_equal(fluxes.at("e3"), 0.0));
}

TEST_CASE("gauge_reduce preserves cycle fluxes and spectra") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const MwGraph g = testing::random_graph(rng);
        const GaugeResult r = gauge_reduce(g);
        CHECK(r.support.size() <= betti(g));
        const auto before = cycle_fluxes(g);
        const auto after = cycle_fluxes(r.graph);
        for (const auto& [id, f] : before) CHECK(angles_equal(f, after.at(id)));
        for (const Arc& a : g.arcs()) {
            const double dphi = r.phi.at(g.vertex(a.head).id) - r.phi.at(g.vertex(a.tail).id);
            CHECK(angles_equal(r.reduced_alpha.at(a.id), a.alpha + dphi, 1e-10));
            if (!r.support.contains(a.id)) CHECK(angles_equal(r.reduced_alpha.at(a.id), 0.0, 1e-10));
        }
        const Eigen::VectorXd x = spectrum_of(g).values;
        const Eigen::VectorXd y = spectrum_of(r.graph).values;
        CHECK((x - y).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("virtualize_arcs") {
    const MwGraph pa = polyacetylene_quotient();
    CHECK(virtualize_arcs(pa, {}) == pa);
    const MwGraph minus = virtualize_arcs(pa, {"e1"});
    CHECK(minus.vertex_count() == 4);
    CHECK(minus.arc_count() == 4);
    CHECK_FALSE(minus.has_arc("e1"));
    CHECK(relative_weight(minus, "v1") == doctest::Approx(0.75));
    CHECK_THROWS_AS(virtualize_arcs(pa, {"zz"}), InvalidInput);
}

TEST_CASE("virtualize_arcs commutes for disjoint sets") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 50; ++t) {
        const MwGraph g = testing::random_graph(rng);
        IdSet a, b;
        for (const Arc& arc : g.arcs()) {
            const int pick = testing::uniform_int(rng, 0, 2);
            if (pick == 0) a.insert(arc.id);
            if (pick == 1) b.insert(arc.id);
        }
        CHECK(virtualize_arcs(virtualize_arcs(g, a), b) == virtualize_arcs(virtualize_arcs(g, b), a));
    }
}

TEST_CASE("virtualize_vertices") {
    const MwGraph pa = polyacetylene_quotient();
    const DirichletGraph dg = virtualize_vertices(pa, {"v1"});
    CHECK(dg.active().size() == 3);
    CHECK(dg.base().arc_count() == 5);
    CHECK(dg.excluded() == IdSet{"v1"});
    CHECK_THROWS_AS(virtualize_vertices(pa, {"v1", "v2", "h1", "h2"}), InvalidInput);
    CHECK_THROWS_AS(virtualize_vertices(pa, {"nope"}), InvalidInput);

    const MwGraph looped({{"a", 1.0}, {"b", 1.0}}, {{"l", "a", "a", 1.0, 0.3}, {"e", "a", "b", 1.0, 0.0}});
    const DirichletGraph dl = virtualize_vertices(looped, {"a"});
    CHECK_FALSE(dl.base().has_arc("l"));
    CHECK(dl.base().has_arc("e"));
    CHECK(virtualize_vertices(pa, {}).active().size() == 4);
}

TEST_CASE("is_neighborhood and minimal_neighborhood") {
    const MwGraph pa = polyacetylene_quotient();
    CHECK(is_neighborhood(pa, {}, {}));
    CHECK(is_neighborhood(pa, {"e1"}, {"v1"}));
    CHECK_FALSE(is_neighborhood(pa, {"e1"}, {"h1"}));
    CHECK_THROWS_AS(is_neighborhood(pa, {"nope"}, {}), InvalidInput);

    CHECK(minimal_neighborhood(pa, {}).empty());
    const MwGraph edge({{"v2", 1.0}, {"v1", 1.0}}, {{"e1", "v2", "v1", 1.0, 0.0}});
    CHECK(minimal_neighborhood(edge, {"e1"}) == IdSet{"v1"});
    const MwGraph star({{"a", 1.0}, {"b", 1.0}, {"c", 1.0}, {"d", 1.0}},
                       {{"x", "a", "c", 1.0, 0.0}, {"y", "c", "b", 1.0, 0.0}, {"z", "d", "c", 1.0, 0.0}});
    CHECK(minimal_neighborhood(star, {"x", "y", "z"}) == IdSet{"c"});

    std::mt19937_64 rng(15);
    for (int t = 0; t < 100; ++t) {
        const MwGraph g = testing::random_graph(rng);
        const IdSet e0 = testing::random_arc_subset(rng, g, 0.4);
        CHECK(is_neighborhood(g, e0, minimal_neighborhood(g, e0)));
    }
}

TEST_CASE("apply_weights and has_weight_scheme") {
    const MwGraph pa = polyacetylene_quotient();
    CHECK(has_weight_scheme(pa, WeightScheme::standard));
    CHECK_FALSE(has_weight_scheme(pa, WeightScheme::combinatorial));
    CHECK(pa.vertex(pa.vertex_index("v1")).weight == 4.0);
    CHECK(pa.vertex(pa.vertex_index("h1")).weight == 1.0);
    const MwGraph isolated = apply_weights(MwGraph({{"a", 3.0}}, {}), WeightScheme::standard);
    CHECK(isolated.vertex(0).weight == 1.0);
}

}  // TEST_SUITE
