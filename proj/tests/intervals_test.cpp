// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "maglap/intervals.hpp"
#include "support/random_graph.hpp"

using namespace maglap;

TEST_SUITE("intervals") {

TEST_CASE("merge") {
    const IntervalList m = merge_intervals({{2, 3}, {0, 1}, {0.5, 1.5}, {3 + 1e-10, 4}});
    REQUIRE(m.size() == 2);
    CHECK(m[0] == Interval{0, 1.5});
    CHECK(m[1] == Interval{2, 4});
    CHECK(merge_intervals({}).empty());
}

TEST_CASE("intersect keeps touching ends as points") {
    const IntervalList a = {{0, 1}, {2, 3}};
    const IntervalList b = {{1, 2}};
    const IntervalList x = intersect(a, b);
    REQUIRE(x.size() == 2);
    CHECK(x[0] == Interval{1, 1});
    CHECK(x[1] == Interval{2, 2});
    const IntervalList near = intersect({{0, 1}}, {{1 + 5e-10, 2}});
    REQUIRE(near.size() == 1);
    CHECK(near[0].length() == 0.0);
    CHECK(intersect({{0, 1}}, {{1.1, 2}}).empty());
}

TEST_CASE("reflect") {
    const IntervalList r = reflect({{0, 0.5}, {1.2, 2}}, 2.0);
    REQUIRE(r.size() == 2);
    CHECK(r[0].lo == doctest::Approx(0.0));
    CHECK(r[0].hi == doctest::Approx(0.8));
    CHECK(r[1] == Interval{1.5, 2.0});
}

TEST_CASE("complement") {
    const IntervalList g = complement({{0, 0}, {2, 2}}, 0, 2);
    REQUIRE(g.size() == 1);
    CHECK(g[0] == Interval{0, 2});
    CHECK(complement({{0, 2}}, 0, 2).empty());
    const IntervalList h = complement({{0.5, 1}}, 0, 2, 0.6);
    REQUIRE(h.size() == 1);
    CHECK(h[0] == Interval{1, 2});
    CHECK(complement({{0, 1}, {1 + 1e-10, 2}}, 0, 2).empty());
}

TEST_CASE("isolated points, distance, subset") {
    const IntervalList a = {{0, 1}, {1.5, 1.5}, {2, 3}};
    CHECK(isolated_points(a) == IntervalList{{1.5, 1.5}});
    CHECK(distance_to(a, 1.2) == doctest::Approx(0.2));
    CHECK(distance_to(a, 2.5) == 0.0);
    CHECK(covers(a, 1.5));
    CHECK_FALSE(covers(a, 1.7));
    CHECK(is_subset({{0.2, 0.4}, {2.5, 3}}, a));
    CHECK_FALSE(is_subset({{0.5, 2}}, a));
}

TEST_CASE("union and complement partition the ambient interval") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        IntervalList raw;
        const int k = testing::uniform_int(rng, 0, 8);
        for (int i = 0; i < k; ++i) {
            const double lo = testing::uniform(rng, 0, 2);
            raw.push_back({lo, std::min(2.0, lo + testing::uniform(rng, 0, 0.5))});
        }
        const IntervalList u = merge_intervals(raw);
        const IntervalList g = complement(u, 0, 2, 0.0);
        double total = 0.0;
        for (const Interval& i : u) total += i.length();
        for (const Interval& i : g) total += i.length();
        CHECK(total == doctest::Approx(2.0).epsilon(1e-12));
        for (std::size_t i = 1; i < u.size(); ++i) CHECK(u[i].lo > u[i - 1].hi);
        // κ-symmetry of the intersection with its own mirror.
        const IntervalList sym = intersect(u, reflect(u, 2.0));
        const IntervalList mirrored = reflect(sym, 2.0);
        REQUIRE(mirrored.size() == sym.size());
        for (std::size_t i = 0; i < sym.size(); ++i) {
            CHECK(mirrored[i].lo == doctest::Approx(sym[i].lo).epsilon(1e-12));
            CHECK(mirrored[i].hi == doctest::Approx(sym[i].hi).epsilon(1e-12));
        }
    }
}

}  // TEST_SUITE
