#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "edgeband/graph.hpp"

using namespace edgeband;

TEST_CASE("make_graph accepts simple, cyclic and multigraph input") {
    Graph single = make_graph(2, {{0, 1}});
    CHECK(single.edge_count() == 1);

    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edge_count() == 4);
    CHECK(c4.degree(0) == 2);

    Graph parallel = make_graph(3, {{0, 1}, {0, 1}});
    CHECK(parallel.edge_count() == 2);
    CHECK_FALSE(is_simple(parallel));
}

TEST_CASE("make_graph rejects out-of-range endpoints and names the edge") {
    try {
        make_graph(3, {{0, 1}, {1, 5}});
        FAIL("expected an exception");
    } catch (const std::invalid_argument& err) {
        CHECK(std::string(err.what()).find("edge 1") != std::string::npos);
    }
}

TEST_CASE("degree counts loops twice") {
    Graph g = make_graph(2, {{0, 0}, {0, 1}});
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 1);
}

TEST_CASE("generators produce the documented families") {
    CHECK(generate(FamilySpec::complete(4)).edge_count() == 6);
    CHECK(generate(FamilySpec::complete(7)).edge_count() == 21);
    CHECK(generate(FamilySpec::complete_bipartite(3, 3)).edge_count() == 9);

    Graph theta = generate(FamilySpec::theta({1, 3, 3}));
    CHECK(theta.edge_count() == 7);
    CHECK(theta.vertex_count == 6);

    Graph ds = generate(FamilySpec::double_star(3));
    CHECK(ds.edge_count() == 7);
    CHECK(ds.vertex_count == 8);
    CHECK(ds.degree(0) == 4);
    CHECK(ds.degree(1) == 4);
    int leaves = 0;
    for (int v = 0; v < ds.vertex_count; ++v)
        if (ds.degree(v) == 1) ++leaves;
    CHECK(leaves == 6);

    // caterpillar edge order walks the spine: pendants of v_i, then v_i v_{i+1}
    Graph cat = generate(FamilySpec::caterpillar({2, 1, 2}));
    CHECK(cat.vertex_count == 8);
    CHECK(cat.edge_count() == 7);
    CHECK(cat.edges[2] == std::pair<int, int>{0, 1});
    CHECK(cat.edges[4] == std::pair<int, int>{1, 2});
}

TEST_CASE("generator rejects bad parameters") {
    CHECK_THROWS_AS(generate(FamilySpec::theta({1, 1, 3})), std::invalid_argument);
    CHECK_NOTHROW(generate(FamilySpec::theta({1, 1, 3}, true)));
    CHECK_THROWS_AS(generate(FamilySpec::theta({0, 3})), std::invalid_argument);
    CHECK_THROWS_AS(generate(FamilySpec::caterpillar({})), std::invalid_argument);
    CHECK_THROWS_AS(generate(FamilySpec::star(0)), std::invalid_argument);
}

TEST_CASE("line graph of paths, triangles and K4") {
    Graph p4 = generate(FamilySpec::path(4));
    auto lp4 = line_graph(p4);
    CHECK(lp4.graph == generate(FamilySpec::path(3)));

    Graph k3 = generate(FamilySpec::complete(3));
    CHECK(line_graph(k3).graph == generate(FamilySpec::complete(3)));

    auto lk4 = line_graph(generate(FamilySpec::complete(4)));
    CHECK(lk4.graph.vertex_count == 6);
    CHECK(lk4.graph.edge_count() == 12);
    for (int v = 0; v < 6; ++v) CHECK(lk4.graph.degree(v) == 4);
}

TEST_CASE("line graph handles loops and parallel edges") {
    // parallel pair: adjacent once, output stays simple
    auto lp = line_graph(make_graph(2, {{0, 1}, {0, 1}}));
    CHECK(lp.graph == make_graph(2, {{0, 1}}));

    // a loop is incident to every other edge at its vertex, not to itself
    auto ll = line_graph(make_graph(2, {{0, 0}, {0, 1}}));
    CHECK(ll.graph == make_graph(2, {{0, 1}}));

    // two loops at one vertex are incident to each other
    auto l2 = line_graph(make_graph(1, {{0, 0}, {0, 0}}));
    CHECK(l2.graph == make_graph(2, {{0, 1}}));
}

TEST_CASE("diameter, components, max_degree") {
    CHECK(diameter(generate(FamilySpec::path(4))) == 3);
    CHECK(diameter(line_graph(generate(FamilySpec::theta({1, 3, 3}))).graph) == 3);
    CHECK(max_degree(generate(FamilySpec::double_star(3))) == 4);

    Graph two = make_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(diameter(two), std::invalid_argument);
    auto comps = components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});
}

TEST_CASE("peeling trees consumes everything") {
    Graph p4 = generate(FamilySpec::path(4));
    PeelResult peel = peel_degree_one(p4);
    CHECK(peel.core.vertex_count == 0);
    CHECK(peel.order.size() == 4);
    // the final edge attaches both of its endpoints
    CHECK(peel.order[2].edge == peel.order[3].edge);
}

TEST_CASE("peeling keeps 2-cores intact") {
    // C_5 with one pendant vertex
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {2, 5}});
    PeelResult peel = peel_degree_one(g);
    CHECK(peel.core.vertex_count == 5);
    CHECK(peel.core.edge_count() == 5);
    REQUIRE(peel.order.size() == 1);
    CHECK(peel.order[0].vertex == 5);
    CHECK(peel.order[0].edge == 5);

    Graph theta = generate(FamilySpec::theta({1, 3, 3}));
    PeelResult none = peel_degree_one(theta);
    CHECK(none.order.empty());
    CHECK(none.core.edge_count() == theta.edge_count());
}
