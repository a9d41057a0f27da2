#include <doctest.h>

#include <stdexcept>

#include "edgeband/constructions.hpp"
#include "edgeband/solver.hpp"

using namespace edgeband;

TEST_CASE("caterpillar labelings hit max degree minus one") {
    CHECK(caterpillar_labeling(FamilySpec::star(5)).claimed_value == 4);
    CHECK(caterpillar_labeling(FamilySpec::double_star(3)).claimed_value == 3);
    CHECK(caterpillar_labeling(FamilySpec::path(6)).claimed_value == 1);
    CHECK(caterpillar_labeling(FamilySpec::caterpillar({3, 2, 3})).claimed_value == 3);
    CHECK_THROWS_AS(caterpillar_labeling(FamilySpec::theta({1, 3, 3})), std::invalid_argument);
}

TEST_CASE("clique labeling matches the closed form and the reference order for K8") {
    CHECK(clique_labeling(3).claimed_value == 2);
    CHECK(clique_labeling(4).claimed_value == 4);
    CHECK_THROWS_AS(clique_labeling(1), std::invalid_argument);

    ConstructionResult k8 = clique_labeling(8);
    CHECK(k8.claimed_value == 18);
    Graph g = generate(FamilySpec::complete(8));
    // expected label order as (u,v) pairs, 1-based
    const std::pair<int, int> want[28] = {
        {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {1, 6},
        {2, 6}, {1, 7}, {1, 8}, {2, 7}, {2, 8}, {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 6},
        {4, 7}, {4, 8}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}};
    std::vector<std::pair<int, int>> got(28);
    for (int e = 0; e < 28; ++e) got[k8.labeling.labels[e] - 1] = g.edges[e];
    for (int t = 0; t < 28; ++t) {
        CHECK(got[t].first == want[t].first - 1);
        CHECK(got[t].second == want[t].second - 1);
    }
}

TEST_CASE("clique labeling agrees with the exact solver on small n") {
    for (int n : {3, 4, 5})
        CHECK(exact_edge_bandwidth(generate(FamilySpec::complete(n))).value ==
              clique_labeling(n).claimed_value);
}

TEST_CASE("biclique labeling matches the closed form and the reference prefix") {
    CHECK(biclique_labeling(1).claimed_value == 0);
    CHECK(biclique_labeling(2).claimed_value == 2);

    ConstructionResult b6 = biclique_labeling(6);
    CHECK(b6.claimed_value == 20);
    Graph g = generate(FamilySpec::complete_bipartite(6, 6));
    // first nine edges in label order, as (x_i, y_j) with 1-based indices
    const std::pair<int, int> want[9] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1},
                                         {3, 2}, {1, 3}, {2, 3}, {3, 3}};
    for (int t = 0; t < 9; ++t) {
        int found = -1;
        for (int e = 0; e < g.edge_count(); ++e)
            if (b6.labeling.labels[e] == t + 1) found = e;
        REQUIRE(found >= 0);
        CHECK(g.edges[found].first == want[t].first - 1);
        CHECK(g.edges[found].second - 6 == want[t].second - 1);
    }
}

TEST_CASE("biclique labeling agrees with the exact solver on small n") {
    for (int n : {2, 3})
        CHECK(exact_edge_bandwidth(generate(FamilySpec::complete_bipartite(n, n))).value ==
              biclique_labeling(n).claimed_value);
}

TEST_CASE("theta labelings") {
    ConstructionResult t4 = theta_labeling(FamilySpec::theta({1, 3, 3, 3}));
    CHECK(t4.claimed_value == 5);
    CHECK_FALSE(t4.upper_bound_only);

    ConstructionResult t3 = theta_labeling(FamilySpec::theta({1, 3, 3}));
    CHECK(t3.claimed_value == 3);
    CHECK(exact_edge_bandwidth(generate(FamilySpec::theta({1, 3, 3}))).value == 3);

    ConstructionResult u = theta_labeling(FamilySpec::theta({2, 3, 3}));
    CHECK(u.claimed_value == 3);
    CHECK(u.upper_bound_only);

    ConstructionResult v = theta_labeling(FamilySpec::theta({1, 2, 2}));
    CHECK(v.claimed_value == 3);
    CHECK(v.upper_bound_only);

    // the short path may sit anywhere in the length list
    CHECK(theta_labeling(FamilySpec::theta({3, 1, 3})).claimed_value == 3);

    CHECK_THROWS_AS(theta_labeling(FamilySpec::theta({2, 2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(theta_labeling(FamilySpec::theta({1, 3, 4})), std::invalid_argument);
    CHECK_THROWS_AS(theta_labeling(FamilySpec::star(3)), std::invalid_argument);
}

TEST_CASE("theta exactness against the solver for m in {3,4}") {
    CHECK(exact_edge_bandwidth(generate(FamilySpec::theta({1, 3, 3}))).value == 3);
    CHECK(exact_edge_bandwidth(generate(FamilySpec::theta({1, 3, 3, 3}))).value == 5);
}

TEST_CASE("family recognition transfers labelings onto foreign edge ids") {
    // K_4 with scrambled edge order
    Graph k4 = make_graph(4, {{2, 3}, {0, 1}, {1, 3}, {0, 2}, {1, 2}, {0, 3}});
    auto rec = recognized_family_labeling(k4);
    REQUIRE(rec.has_value());
    CHECK(rec->claimed_value == 4);
    CHECK(edge_stretch(k4, rec->labeling) == 4);

    // a caterpillar presented leaf-first
    Graph cat = make_graph(6, {{4, 5}, {1, 0}, {3, 1}, {1, 5}, {2, 5}});
    auto rec_cat = recognized_family_labeling(cat);
    REQUIRE(rec_cat.has_value());
    CHECK(rec_cat->claimed_value == max_degree(cat) - 1);

    // theta(1,3,3) with hubs renamed
    Graph theta = make_graph(6, {{5, 2}, {5, 0}, {0, 1}, {1, 2}, {5, 3}, {3, 4}, {4, 2}});
    auto rec_theta = recognized_family_labeling(theta);
    REQUIRE(rec_theta.has_value());
    CHECK(rec_theta->claimed_value == 3);

    // C_5 is none of the families
    CHECK_FALSE(recognized_family_labeling(generate(FamilySpec::cycle(5))).has_value());
}

TEST_CASE("construction scale sweep") {
    for (int n = 2; n <= 60; ++n) {
        CHECK(clique_labeling(n).claimed_value ==
              static_cast<std::int64_t>(n) * n / 4 + (n + 1) / 2 - 2);
        CHECK(biclique_labeling(n).claimed_value == static_cast<std::int64_t>(n) * (n + 1) / 2 - 1);
    }
}
