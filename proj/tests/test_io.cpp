#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "edgeband/io.hpp"
#include "edgeband/solver.hpp"

using namespace edgeband;

TEST_CASE("edge list round trip") {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 0}});
    CHECK(parse_edge_list(write_edge_list(g)) == g);

    std::string canonical = write_edge_list(g);
    CHECK(write_edge_list(parse_edge_list(canonical)) == canonical);

    CHECK(parse_edge_list("p 2 1\ne 0 1\n") == make_graph(2, {{0, 1}}));
    CHECK(parse_edge_list("# a comment\np 2 1\n# another\ne 0 1 # trailing\n") ==
          make_graph(2, {{0, 1}}));
}

TEST_CASE("edge list parse errors carry line numbers") {
    try {
        parse_edge_list("p 3 1\ne 0 5\n");
        FAIL("expected an exception");
    } catch (const std::invalid_argument& err) {
        CHECK(std::string(err.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_edge_list("e 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("p 2 2\ne 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("p 2 1\nq 0 1\n"), std::invalid_argument);
}

TEST_CASE("matrix market pattern parsing") {
    std::string p3 =
        "%%MatrixMarket matrix coordinate pattern symmetric\n"
        "3 3 2\n"
        "2 1\n"
        "3 2\n";
    auto parsed = parse_matrix_pattern(p3);
    CHECK(parsed.graph == make_graph(3, {{1, 0}, {2, 1}}));
    CHECK(parsed.dropped_diagonal == 0);

    std::string diag =
        "%%MatrixMarket matrix coordinate pattern symmetric\n"
        "2 2 2\n"
        "2 1\n"
        "2 2\n";
    auto dropped = parse_matrix_pattern(diag);
    CHECK(dropped.graph.edge_count() == 1);
    CHECK(dropped.dropped_diagonal == 1);
    auto kept = parse_matrix_pattern(diag, {true, false});
    CHECK(kept.graph.edge_count() == 2);
    CHECK(kept.graph.is_loop(1));

    std::string dup =
        "%%MatrixMarket matrix coordinate pattern symmetric\n"
        "3 3 3\n"
        "2 1\n"
        "2 1\n"
        "3 1\n";
    auto simple = parse_matrix_pattern(dup);
    CHECK(simple.graph.edge_count() == 2);
    CHECK(simple.duplicate_entries == 1);
    auto multi = parse_matrix_pattern(dup, {false, true});
    CHECK(multi.graph.edge_count() == 3);
}

TEST_CASE("matrix market header and shape validation") {
    CHECK_THROWS_AS(parse_matrix_pattern("%%MatrixMarket matrix coordinate real symmetric\n1 1 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_pattern("%%MatrixMarket matrix coordinate pattern general\n1 1 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_pattern("%%MatrixMarket matrix coordinate pattern symmetric\n2 3 0\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_pattern("%%MatrixMarket matrix coordinate pattern symmetric\n2 2 5\n2 1\n"),
                    std::invalid_argument);
}

TEST_CASE("matrix market round trip") {
    Graph g = make_graph(4, {{1, 0}, {2, 0}, {3, 2}, {1, 1}});
    auto back = parse_matrix_pattern(write_matrix_pattern(g), {true, true});
    CHECK(back.graph == g);
}

TEST_CASE("permutation profile") {
    Graph p4 = generate(FamilySpec::path(4));
    auto identity = permute_matrix(p4, identity_vertex_labeling(4));
    CHECK(identity.band == 1);
    CHECK(identity.permutation == std::vector<int>{0, 1, 2, 3});

    // a shuffled path put back in order
    Graph shuffled = make_graph(4, {{2, 0}, {0, 3}, {3, 1}});
    auto profile = permute_matrix(shuffled, VertexLabeling{{2, 4, 1, 3}});
    CHECK(profile.band == 1);
    CHECK(profile.permutation == std::vector<int>{2, 0, 3, 1});

    CHECK_THROWS_AS(permute_matrix(p4, VertexLabeling{{0, 1, 2, 3}}), std::invalid_argument);

    Graph c4 = generate(FamilySpec::cycle(4));
    auto best = exact_bandwidth(c4);
    CHECK(permute_matrix(c4, best.labeling).band == 2);
}

TEST_CASE("json payloads re-validate") {
    using nlohmann::json;
    Graph g = generate(FamilySpec::cycle(4));
    EdgeLabeling f{{1, 3, 2, 4}};
    json payload = json::parse(labeling_json(g, f));
    CHECK(payload["kind"] == "edge");
    EdgeLabeling round{payload["labels"].get<std::vector<std::int64_t>>()};
    CHECK(edge_stretch(g, round) == payload["stretch"].get<std::int64_t>());

    json report = json::parse(bound_report_json(lower_bound_report(g)));
    CHECK(report["overall"].get<int>() >= report["degree"].get<int>());
    CHECK(report["certificates"].contains("boundary"));
}
