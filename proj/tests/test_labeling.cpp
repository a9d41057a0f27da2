#include <doctest.h>

#include <stdexcept>

#include "edgeband/graph.hpp"
#include "edgeband/labeling.hpp"

using namespace edgeband;

TEST_CASE("edge stretch over incident pairs") {
    Graph p3 = generate(FamilySpec::path(3));
    CHECK(edge_stretch(p3, EdgeLabeling{{1, 2}}) == 1);

    // single edge: no incident pair at all
    Graph single = make_graph(2, {{0, 1}});
    CHECK(edge_stretch(single, EdgeLabeling{{7}}) == 0);
}

TEST_CASE("the split ordering of theta(1,3,3,3) evaluates to 5") {
    // generator layout: path 1 is the unit edge e; each length-3 path i has
    // edges a_i, b_i, c_i in order.  Ordering: a1 a2 a3 b1 e b2 b3 c1 c2 c3.
    Graph g = generate(FamilySpec::theta({1, 3, 3, 3}));
    EdgeLabeling f{{5,             // e
                    1, 4, 8,       // a1 b1 c1
                    2, 6, 9,       // a2 b2 c2
                    3, 7, 10}};    // a3 b3 c3
    CHECK(edge_stretch(g, f) == 5);
}

TEST_CASE("vertex stretch") {
    Graph p3 = generate(FamilySpec::path(3));
    CHECK(vertex_stretch(p3, VertexLabeling{{1, 2, 3}}) == 1);

    Graph k3 = generate(FamilySpec::complete(3));
    CHECK(vertex_stretch(k3, VertexLabeling{{2, 1, 3}}) == 2);

    Graph c4 = generate(FamilySpec::cycle(4));
    CHECK(vertex_stretch(c4, VertexLabeling{{1, 2, 4, 3}}) == 2);

    // loops contribute nothing
    Graph loop = make_graph(2, {{0, 0}, {0, 1}});
    CHECK(vertex_stretch(loop, VertexLabeling{{5, 6}}) == 1);

    Graph edgeless{3, {}};
    CHECK(vertex_stretch(edgeless, VertexLabeling{{3, 1, 2}}) == 0);
}

TEST_CASE("evaluators validate their input") {
    Graph p3 = generate(FamilySpec::path(3));
    CHECK_THROWS_AS(edge_stretch(p3, EdgeLabeling{{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(edge_stretch(p3, EdgeLabeling{{1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(vertex_stretch(p3, VertexLabeling{{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(vertex_stretch(p3, VertexLabeling{{1, 2, 2}}), std::invalid_argument);
}

TEST_CASE("canonicalize is a rank map") {
    EdgeLabeling f{{10, 3, 7}};
    CHECK(canonicalize(f).labels == std::vector<std::int64_t>{3, 1, 2});

    EdgeLabeling ident{{1, 2, 3}};
    CHECK(canonicalize(ident) == ident);

    // labels {0, 1, 2, 4}: gap closes, order preserved
    EdgeLabeling gap{{0, 1, 2, 4}};
    CHECK(canonicalize(gap).labels == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(canonicalize(canonicalize(gap)) == canonicalize(gap));

    CHECK_THROWS_AS(canonicalize(EdgeLabeling{{2, 2}}), std::invalid_argument);
}

TEST_CASE("canonicalize never increases stretch") {
    Graph c4 = generate(FamilySpec::cycle(4));
    EdgeLabeling sparse{{100, 7, 23, 5}};
    CHECK(edge_stretch(c4, canonicalize(sparse)) <= edge_stretch(c4, sparse));
}

TEST_CASE("labels text round trip") {
    std::vector<std::int64_t> labels{4, 1, 3, 2};
    CHECK(parse_labels(write_labels(labels)) == labels);
    CHECK(parse_labels("0 4\n# comment\n1 1\n2 3\n3 2\n") == labels);
    CHECK_THROWS_AS(parse_labels("0 1\n0 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_labels("0 1\n7 2\n"), std::invalid_argument);
}
