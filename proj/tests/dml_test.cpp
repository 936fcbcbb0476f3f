// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "maglap/dml.hpp"
#include "maglap/error.hpp"
#include "maglap/models.hpp"
#include "maglap/spectrum.hpp"
#include "support/random_graph.hpp"

using namespace maglap;

namespace {

constexpr double pi = std::numbers::pi;

MwGraph edge(double alpha, WeightScheme w = WeightScheme::standard) {
    return apply_weights(MwGraph({{"v1", 1.0}, {"v2", 1.0}}, {{"e", "v1", "v2", 1.0, alpha}}), w);
}

}  // namespace

TEST_SUITE("dml") {

TEST_CASE("twisted derivative rows") {
    const TwistedDerivative d0 = assemble_twisted_derivative(edge(0.0));
    CHECK(std::abs(d0.matrix(0, 0) - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(d0.matrix(0, 1) - Complex(1, 0)) < 1e-15);

    const TwistedDerivative dpi = assemble_twisted_derivative(edge(pi));
    CHECK(std::abs(dpi.matrix(0, 0) - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(dpi.matrix(0, 1) - Complex(0, 1)) < 1e-15);

    const MwGraph loop({{"v", 1.0}}, {{"l", "v", "v", 1.0, 0.0}});
    CHECK(std::abs(assemble_twisted_derivative(loop).matrix(0, 0)) < 1e-15);
}

TEST_CASE("assemble_dml examples") {
    const HermitianMatrix h = assemble_dml(edge(0.0));
    Eigen::MatrixXcd expected(2, 2);
    expected << 1.0, -1.0, -1.0, 1.0;
    CHECK((h.entries() - expected).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(h.ambient_max() == 2.0);
    const Spectrum s = eigenvalues(h);
    CHECK(std::abs(s[0]) < 1e-12);
    CHECK(std::abs(s[1] - 2.0) < 1e-12);

    for (double a : {0.0, 0.4, pi, 5.0}) {
        const MwGraph loop({{"v", 1.0}}, {{"l", "v", "v", 1.0, a}});
        const HermitianMatrix hl = assemble_dml(loop);
        CHECK(std::abs(hl.entries()(0, 0) - Complex(2.0 - 2.0 * std::cos(a), 0.0)) < 1e-12);
    }

    const HermitianMatrix pa = assemble_dml(build_graph({ModelKind::polyacetylene, 0, WeightScheme::standard, 1.1}));
    for (Eigen::Index i = 0; i < 4; ++i) CHECK(std::abs(pa.entries()(i, i) - 1.0) < 1e-15);
}

TEST_CASE("assembly matches an entry-wise reference") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const MwGraph g = testing::random_graph(rng, {.max_vertices = 12, .max_arcs = 20});
        CHECK((assemble_dml(g).entries() - testing::reference_dml(g)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("factorization through the twisted derivative") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 100; ++t) {
        const MwGraph g = testing::random_graph(rng, {.max_vertices = 12, .max_arcs = 20, .connected = false});
        const TwistedDerivative d = assemble_twisted_derivative(g);
        const Eigen::MatrixXcd me = d.arc_weights.cast<Complex>().asDiagonal();
        const Eigen::MatrixXcd laplacian =
            d.vertex_weights.cwiseInverse().cast<Complex>().asDiagonal() * (d.matrix.adjoint() * me * d.matrix);
        const Eigen::MatrixXcd unsym = weighted_operator(assemble_dml(g), d.vertex_weights);
        const double scale = std::max(1.0, laplacian.cwiseAbs().maxCoeff());
        CHECK((laplacian - unsym).cwiseAbs().maxCoeff() <= 1e-12 * scale);
    }
}

TEST_CASE("spectra are nonnegative and bounded by 2 rho_infinity") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 200; ++t) {
        const MwGraph g = testing::random_graph(rng);
        const Spectrum s = spectrum_of(g);
        CHECK(s.values.minCoeff() >= -1e-9);
        CHECK(s.values.maxCoeff() <= 2.0 * rho_infinity(g) + 1e-9);
        CHECK((s.values - testing::oracle_eigenvalues(testing::reference_dml(g))).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("trace equals the sum of relative weights") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 50; ++t) {
        const MwGraph g = testing::random_graph(rng);
        double rho = 0.0;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) rho += relative_weight(g, v);
        double loops = 0.0;
        for (const Arc& a : g.arcs())
            if (a.is_loop()) loops += 2.0 * a.weight * std::cos(a.alpha) / g.vertex(a.tail).weight;
        CHECK(std::abs(assemble_dml(g).entries().trace().real() - (rho - loops)) < 1e-9 * std::max(1.0, rho));
        if (loops == 0.0) CHECK(std::abs(spectrum_of(g).values.sum() - rho) < 1e-9 * std::max(1.0, rho));
    }
}

TEST_CASE("Dirichlet assembly is the principal submatrix") {
    const MwGraph p3 = apply_weights(
        MwGraph({{"v1", 1.0}, {"v2", 1.0}, {"v3", 1.0}}, {{"a", "v1", "v2", 1.0, 0.0}, {"b", "v2", "v3", 1.0, 0.0}}),
        WeightScheme::standard);
    const HermitianMatrix h = assemble_dirichlet_dml(virtualize_vertices(p3, {"v2"}));
    CHECK(h.dimension() == 2);
    CHECK((h.entries() - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(h.ambient_max() == 2.0);

    const MwGraph pa = build_graph({ModelKind::polyacetylene, 0, WeightScheme::standard, 0.7});
    CHECK((assemble_dirichlet_dml(virtualize_vertices(pa, {})).entries() - assemble_dml(pa).entries())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    const Spectrum plus = eigenvalues(assemble_dirichlet_dml(virtualize_vertices(pa, {"v1"})));
    REQUIRE(plus.size() == 3);
    CHECK(std::abs(plus[0] - 0.5) < 1e-12);
    CHECK(std::abs(plus[1] - 1.0) < 1e-12);
    CHECK(std::abs(plus[2] - 1.5) < 1e-12);
}

TEST_CASE("HermitianMatrix rejects non-Hermitian entries") {
    Eigen::MatrixXcd m(2, 2);
    m << 1.0, Complex(0, 1), Complex(0, 1), 1.0;
    CHECK_THROWS_AS(HermitianMatrix{m}, InvalidInput);
}

}  // TEST_SUITE
