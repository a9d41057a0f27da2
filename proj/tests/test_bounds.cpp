#include <doctest.h>

#include <stdexcept>

#include "edgeband/bounds.hpp"
#include "edgeband/graph.hpp"

using namespace edgeband;

TEST_CASE("degree bound") {
    CHECK(degree_bound(generate(FamilySpec::star(5))).value == 4);
    CHECK(degree_bound(generate(FamilySpec::theta({1, 3, 3, 3}))).value == 3);
    CHECK(degree_bound(generate(FamilySpec::path(5))).value == 1);
    CHECK(degree_bound(Graph{3, {}}).value == 0);
}

TEST_CASE("star bound") {
    CHECK(star_bound(generate(FamilySpec::complete(4))).value == 4);
    CHECK(star_bound(generate(FamilySpec::double_star(3))).value == 3);
    CHECK(star_bound(generate(FamilySpec::cycle(5))).value == 2);
    CHECK(star_bound(generate(FamilySpec::cycle(17))).value == 2);
    CHECK_THROWS_AS(star_bound(Graph{2, {}}), std::invalid_argument);
}

TEST_CASE("density bound candidates") {
    CHECK(density_bound(generate(FamilySpec::path(4))).value == 1);

    // whole graph candidate for theta(1,3,3,3): 10 edges, line diameter 3
    Graph theta = generate(FamilySpec::theta({1, 3, 3, 3}));
    CHECK(diameter(line_graph(theta).graph) == 3);
    CHECK(density_bound(theta).value >= 3);

    // whole-tree candidate for a caterpillar: ceil((n-1)/diam)
    Graph ds = generate(FamilySpec::double_star(3));
    CHECK(diameter(ds) == 3);
    CHECK(density_bound(ds).value >= (8 - 1 + 2) / 3);

    CHECK_THROWS_AS(density_bound(make_graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("boundary bound by exhaustive enumeration") {
    CHECK(boundary_bound(make_graph(2, {{0, 1}})).value == 0);

    // C_4: every k in 1..3 has min boundary 2, 2, 1
    BoundaryBound c4 = boundary_bound(generate(FamilySpec::cycle(4)));
    CHECK(c4.value == 2);

    // theta(1,3,3,3): enumeration settles the best value at exactly 4
    BoundaryBound theta = boundary_bound(generate(FamilySpec::theta({1, 3, 3, 3})));
    CHECK(theta.value == 4);
    CHECK(theta.value <= 4);

    BoundaryBound big = boundary_bound(generate(FamilySpec::complete(7)), 16);
    CHECK(big.skipped);  // 21 edges over the budget
}

TEST_CASE("boundary certificate matches its value") {
    Graph g = generate(FamilySpec::theta({1, 3, 3}));
    BoundaryBound b = boundary_bound(g);
    REQUIRE_FALSE(b.skipped);
    REQUIRE(static_cast<int>(b.subset.size()) == b.k);
    std::vector<bool> in_f(g.edge_count(), false);
    for (int e : b.subset) in_f[e] = true;
    int boundary = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_f[e]) continue;
        auto [a, bb] = g.edges[e];
        for (int e2 : b.subset) {
            auto [c, d] = g.edges[e2];
            if (a == c || a == d || bb == c || bb == d) {
                ++boundary;
                break;
            }
        }
    }
    CHECK(boundary == b.value);
}

TEST_CASE("aggregate report") {
    BoundReport k5 = lower_bound_report(generate(FamilySpec::complete(5)));
    CHECK(k5.star.value == 6);
    CHECK(k5.overall >= 6);

    BoundReport empty = lower_bound_report(Graph{4, {}});
    CHECK(empty.overall == 0);
    CHECK(empty.star_skipped);

    // the famous gap: every bound stays at 4 while the true value is 5
    BoundReport theta = lower_bound_report(generate(FamilySpec::theta({1, 3, 3, 3})));
    CHECK(theta.overall == 4);

    // disconnected graphs take the max over components
    Graph two = make_graph(9, {{0, 1}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}});
    BoundReport rep = lower_bound_report(two);
    CHECK(rep.degree.value == 5);
    CHECK(rep.degree.vertex == 2);
    CHECK(rep.overall >= 5);
}

TEST_CASE("report flags an oversized boundary enumeration instead of lying") {
    BoundReport rep = lower_bound_report(generate(FamilySpec::complete(7)), BoundBudgets{12, 16});
    CHECK(rep.boundary.skipped);
    CHECK(rep.overall >= rep.star.value);
}
