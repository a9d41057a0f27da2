#include <doctest.h>

#include <stdexcept>

#include "edgeband/constructions.hpp"
#include "edgeband/solver.hpp"
#include "edgeband/transforms.hpp"

using namespace edgeband;

TEST_CASE("phase walk on cycles") {
    Graph c3 = generate(FamilySpec::complete(3));
    VertexLabeling g3 = edge_to_vertex_mindeg2(c3, EdgeLabeling{{1, 2, 3}});
    std::vector<std::int64_t> sorted = g3.labels;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::int64_t>{1, 2, 3});
    CHECK(vertex_stretch(c3, g3) == 2);

    Graph c4 = generate(FamilySpec::cycle(4));
    VertexLabeling g4 = edge_to_vertex_mindeg2(c4, EdgeLabeling{{1, 2, 3, 4}});
    CHECK(vertex_stretch(c4, g4) <= 3);

    Graph c5 = generate(FamilySpec::cycle(5));
    auto best = exact_edge_bandwidth(c5);
    REQUIRE(best.value == 2);
    VertexLabeling g5 = edge_to_vertex_mindeg2(c5, best.labeling);
    CHECK(vertex_stretch(c5, g5) <= 2);
    // every output label is one of the input edge labels
    for (auto l : g5.labels)
        CHECK(std::count(best.labeling.labels.begin(), best.labeling.labels.end(), l) == 1);

    CHECK_THROWS_AS(edge_to_vertex_mindeg2(generate(FamilySpec::path(3)), EdgeLabeling{{1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("tree conversion zeroes the endpoint away from the big labels") {
    Graph p3 = generate(FamilySpec::path(3));
    VertexLabeling g3 = edge_to_vertex_tree(p3, EdgeLabeling{{1, 2}});
    CHECK(vertex_stretch(p3, g3) <= 1);

    // star 1..4: every high label sits at the center, so the leaf of the
    // root edge takes 0 and the spread stays at 3
    Graph star = generate(FamilySpec::star(4));
    VertexLabeling gs = edge_to_vertex_tree(star, EdgeLabeling{{1, 2, 3, 4}});
    CHECK(gs.labels[1] == 0);  // leaf of the minimum-label edge
    CHECK(gs.labels[0] == 1);  // center keeps the root label
    CHECK(vertex_stretch(star, gs) == 3);

    Graph ds = generate(FamilySpec::double_star(2));
    ConstructionResult order = caterpillar_labeling(FamilySpec::double_star(2));
    VertexLabeling gds = edge_to_vertex_tree(ds, order.labeling);
    CHECK(vertex_stretch(ds, gds) <= 2);
    // output labels are exactly the edge labels plus a fresh 0
    std::vector<std::int64_t> expect = order.labeling.labels;
    expect.push_back(0);
    std::sort(expect.begin(), expect.end());
    std::vector<std::int64_t> got = gds.labels;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);

    CHECK_THROWS_AS(edge_to_vertex_tree(generate(FamilySpec::cycle(3)), EdgeLabeling{{1, 2, 3}}),
                    std::invalid_argument);
}

TEST_CASE("tree conversion accepts non-canonical labels by canonicalizing") {
    Graph p3 = generate(FamilySpec::path(3));
    VertexLabeling g3 = edge_to_vertex_tree(p3, EdgeLabeling{{10, 20}});
    CHECK(vertex_stretch(p3, g3) <= 1);
}

TEST_CASE("single edge tree is the one degenerate case") {
    Graph p2 = generate(FamilySpec::path(2));
    VertexLabeling g2 = edge_to_vertex_tree(p2, EdgeLabeling{{1}});
    CHECK(vertex_stretch(p2, g2) == 1);  // bandwidth 1 against edge-bandwidth 0
}

TEST_CASE("full conversion routes trees, cores and pendants") {
    Graph tree = generate(FamilySpec::caterpillar({2, 1, 2}));
    EdgeLabeling f = caterpillar_labeling(FamilySpec::caterpillar({2, 1, 2})).labeling;
    CHECK(edge_to_vertex(tree, f) == edge_to_vertex_tree(tree, f));

    // triangle with a pendant: the pendant inherits its attachment label
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    EdgeLabeling fg{{1, 2, 3, 4}};
    VertexLabeling gl = edge_to_vertex(g, fg);
    CHECK(gl.labels[3] == 4);
    CHECK(vertex_stretch(g, gl) <= edge_stretch(g, fg));

    Graph theta = generate(FamilySpec::theta({1, 3, 3}));
    auto best = exact_edge_bandwidth(theta);
    REQUIRE(best.value == 3);
    CHECK(vertex_stretch(theta, edge_to_vertex(theta, best.labeling)) <= 3);

    CHECK_THROWS_AS(edge_to_vertex(make_graph(4, {{0, 1}, {2, 3}}), EdgeLabeling{{1, 2}}),
                    std::invalid_argument);
}

TEST_CASE("forest layering keeps incident labels close") {
    // forests use a single layer: f(e) = g(child) + 1
    Graph p4 = generate(FamilySpec::path(4));
    auto out = vertex_to_edge_forests(p4, VertexLabeling{{1, 2, 3, 4}});
    CHECK(out.forest_count == 1);
    CHECK(out.guaranteed_bound == 2);
    CHECK(edge_stretch(p4, out.labeling) <= 2);

    // star with an optimal order: B = k, the conversion stays within 2k
    Graph star = generate(FamilySpec::star(6));
    auto b = exact_bandwidth(star);
    REQUIRE(b.value == 3);
    auto conv = vertex_to_edge_forests(star, b.labeling);
    CHECK(conv.forest_count == 1);
    CHECK(edge_stretch(star, conv.labeling) <= 6);
    CHECK(exact_edge_bandwidth(star).value == 5);  // 2B - 1: the bound is near-sharp

    // greedy peeling of K4: a spanning tree, then a two-edge forest, then
    // the leftover edge (maximal forests cannot do better than 3 layers)
    Graph k4 = generate(FamilySpec::complete(4));
    auto bk = exact_bandwidth(k4);
    auto convk = vertex_to_edge_forests(k4, bk.labeling);
    CHECK(convk.forest_count == 3);
    CHECK(convk.guaranteed_bound == 6 * bk.value + 2);
    CHECK(edge_stretch(k4, convk.labeling) <= convk.guaranteed_bound);

    // loops ride in their own layers
    Graph loops = make_graph(2, {{0, 0}, {0, 0}, {0, 1}});
    auto convl = vertex_to_edge_forests(loops, VertexLabeling{{1, 2}});
    CHECK(edge_stretch(loops, convl.labeling) <= convl.guaranteed_bound);
}

TEST_CASE("edge addition: pendant and isolated cases") {
    Graph p3 = generate(FamilySpec::path(3));
    // new vertex hanging off the path
    Graph p3x = make_graph(4, {{0, 1}, {1, 2}});
    TransformOutcome pend = add_edge_fold(p3x, EdgeLabeling{{1, 2}}, {2, 3});
    CHECK(pend.guaranteed_bound == 2);
    CHECK(pend.achieved <= 2);

    Graph far = make_graph(4, {{0, 1}});
    TransformOutcome iso = add_edge_fold(far, EdgeLabeling{{1}}, {2, 3});
    CHECK(iso.achieved == 0);
    CHECK(iso.guaranteed_bound == 0);

    CHECK_THROWS_AS(add_edge_fold(p3, EdgeLabeling{{1, 2}}, {0, 1}), std::invalid_argument);
    CHECK_NOTHROW(add_edge_fold(p3, EdgeLabeling{{1, 2}}, {0, 1}, true));
}

TEST_CASE("edge addition: the fold, checked against a hand computation") {
    // path 0-1-2-3-4-5 labeled along, chord (0,5): p=1, q=5, r=3; the fold
    // sends labels 1..5 to 6,3,1,2,5 and the chord lands at q-p=4
    Graph p6 = generate(FamilySpec::path(6));
    TransformOutcome out = add_edge_fold(p6, EdgeLabeling{{1, 2, 3, 4, 5}}, {0, 5});
    CHECK(out.raw_labeling.labels == std::vector<std::int64_t>{6, 3, 1, 2, 5, 4});
    CHECK(out.achieved == 3);
    CHECK(out.guaranteed_bound == 3);  // 2*stretch + 1
    CHECK(out.graph.edge_count() == 6);
}

TEST_CASE("subdivision lifts labels by one slot") {
    Graph p2 = generate(FamilySpec::path(2));
    TransformOutcome out = subdivide_lift(p2, EdgeLabeling{{1}}, 0);
    CHECK(out.graph.vertex_count == 3);
    CHECK(out.labeling.labels == std::vector<std::int64_t>{1, 2});
    CHECK(out.achieved == 1);

    Graph p6 = generate(FamilySpec::path(6));
    TransformOutcome mid = subdivide_lift(p6, EdgeLabeling{{1, 2, 3, 4, 5}}, 2);
    CHECK(mid.achieved == 1);
    CHECK(mid.guaranteed_bound == 2);
}

TEST_CASE("subdivision collapse merges at the midpoint") {
    // collapsing a freshly subdivided edge undoes the subdivision exactly
    Graph p5 = generate(FamilySpec::path(5));
    EdgeLabeling f{{2, 1, 3, 4}};
    TransformOutcome lifted = subdivide_lift(p5, f, 1);
    TransformOutcome back = subdivision_collapse(lifted.graph, lifted.labeling, 1,
                                                 lifted.graph.edge_count() - 1);
    CHECK(back.graph == p5);
    CHECK(back.labeling == f);

    // adjacent labels collapse by pure deletion
    Graph p4 = generate(FamilySpec::path(4));
    TransformOutcome del = subdivision_collapse(p4, EdgeLabeling{{1, 2, 3}}, 0, 1);
    CHECK(del.achieved == 1);

    // K_3 is a subdivision of the two-edge multigraph: collapsing is legal
    TransformOutcome digon =
        subdivision_collapse(generate(FamilySpec::complete(3)), EdgeLabeling{{1, 2, 3}}, 0, 1);
    CHECK(digon.graph.vertex_count == 2);
    CHECK(digon.graph.edge_count() == 2);

    // edges meeting at a high-degree vertex are not a subdivision pair
    CHECK_THROWS_AS(
        subdivision_collapse(generate(FamilySpec::complete(4)),
                             EdgeLabeling{{1, 2, 3, 4, 5, 6}}, 0, 1),
        std::invalid_argument);
}

TEST_CASE("collapse returns the long theta to the short one within the bound") {
    Graph h = generate(FamilySpec::theta({2, 3, 3}));
    ConstructionResult ch = theta_labeling(FamilySpec::theta({2, 3, 3}));
    // the length-2 path holds edges 0 and 1 by the generator's layout
    TransformOutcome out = subdivision_collapse(h, ch.labeling, 0, 1);
    CHECK(out.guaranteed_bound == 3 * 3 / 2);
    CHECK(out.achieved <= out.guaranteed_bound);
    CHECK(exact_edge_bandwidth(out.graph).value == 3);
}

TEST_CASE("subdividing the short theta into the long one raises the value stepwise") {
    // theta(1,2,2,2) -> theta(1,3,3,3) by subdividing the far edge of each
    // length-2 path; each step moves the exact value by at most one, and
    // the chain ends at ceil((3*4-3)/2) = 5
    Graph g = generate(FamilySpec::theta({1, 2, 2, 2}));
    std::int64_t prev = exact_edge_bandwidth(g).value;
    CHECK(prev <= 4);
    for (int e : {2, 4, 6}) {
        g = subdivide(g, e);
        std::int64_t cur = exact_edge_bandwidth(g).value;
        CHECK(cur <= prev + 1);
        CHECK(cur >= prev - 1);
        prev = cur;
    }
    CHECK(prev == 5);
    CHECK(g.vertex_count == generate(FamilySpec::theta({1, 3, 3, 3})).vertex_count);
}

TEST_CASE("contraction deletes a label and keeps multiplicities") {
    // contracting inside a path keeps the stretch at 1
    Graph p4 = generate(FamilySpec::path(4));
    TransformOutcome out = contract_delete(p4, EdgeLabeling{{1, 2, 3}}, 0);
    CHECK(out.achieved == 1);
    CHECK(out.graph == generate(FamilySpec::path(3)));

    // contracting a triangle edge leaves a parallel pair
    Graph k3 = generate(FamilySpec::complete(3));
    TransformOutcome tri = contract_delete(k3, EdgeLabeling{{1, 2, 3}}, 0);
    CHECK(tri.graph.vertex_count == 2);
    CHECK(tri.graph.edge_count() == 2);
    CHECK_FALSE(is_simple(tri.graph));
    CHECK(tri.achieved <= 3);

    // loops survive contraction of an incident edge
    Graph lg = make_graph(3, {{0, 1}, {1, 1}, {1, 2}});
    TransformOutcome keep = contract_delete(lg, EdgeLabeling{{1, 2, 3}}, 0);
    CHECK(keep.graph.edge_count() == 2);
    CHECK(keep.graph.is_loop(0));
}

TEST_CASE("contract and re-insert sandwiches the original") {
    // double star -> star, then back
    Graph ds = generate(FamilySpec::double_star(3));
    EdgeLabeling f = caterpillar_labeling(FamilySpec::double_star(3)).labeling;
    int center = 3;  // the spine edge by the generator's layout
    REQUIRE(ds.edges[center] == std::pair<int, int>{0, 1});
    TransformOutcome star = contract_delete(ds, f, center);
    CHECK(max_degree(star.graph) == 6);

    TransformOutcome back = contract_insert(ds, center, star.labeling);
    CHECK(back.graph == ds);
    CHECK(back.achieved <= back.guaranteed_bound);
    CHECK(back.guaranteed_bound == star.achieved + 1);

    // isolated merged vertex: the re-inserted edge takes the top label
    Graph lone = make_graph(2, {{0, 1}});
    TransformOutcome h = contract_delete(lone, EdgeLabeling{{1}}, 0);
    CHECK(h.graph.edge_count() == 0);
    TransformOutcome expanded = contract_insert(lone, 0, h.labeling);
    CHECK(expanded.labeling.labels == std::vector<std::int64_t>{1});
}

TEST_CASE("labeled operations insist on canonical input") {
    Graph p3 = generate(FamilySpec::path(3));
    CHECK_THROWS_AS(subdivide_lift(p3, EdgeLabeling{{3, 7}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(contract_delete(p3, EdgeLabeling{{0, 1}}, 0), std::invalid_argument);
}
