#pragma once

#include <string>
#include <vector>

#include "edgeband/bounds.hpp"
#include "edgeband/graph.hpp"
#include "edgeband/labeling.hpp"
#include "edgeband/solver.hpp"
#include "edgeband/transforms.hpp"

namespace edgeband {

// Edge-list text format: header "p <vertex_count> <edge_count>", then one
// "e <u> <v>" line per edge, 0-indexed.  '#' starts a comment.  Writing is
// canonical, so parse(write(g)) == g byte for byte on re-emission.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

// MatrixMarket coordinate pattern, symmetric.  One edge per off-diagonal
// entry; diagonal entries become loops only when keep_loops is set and are
// otherwise dropped with a warning count.  Duplicate entries collapse to a
// single edge in simple mode (counted), or stay as parallel edges in
// multigraph mode.
struct MatrixPatternOptions {
    bool keep_loops = false;
    bool multigraph = false;
};
struct MatrixPatternResult {
    Graph graph;
    int dropped_diagonal = 0;
    int duplicate_entries = 0;
};
MatrixPatternResult parse_matrix_pattern(const std::string& text,
                                         const MatrixPatternOptions& options = {});
std::string write_matrix_pattern(const Graph& g);

// Row/column order induced by a canonical vertex labeling, plus the band of
// the permuted pattern (the labeling's stretch).
struct PermutationProfile {
    std::vector<int> permutation;  // position -> vertex
    std::int64_t band = 0;
};
PermutationProfile permute_matrix(const Graph& g, const VertexLabeling& gl);

// JSON emission.  Every payload that carries a labeling embeds the
// re-evaluated stretch so consumers can re-validate.
std::string graph_json(const Graph& g);
std::string labeling_json(const Graph& g, const EdgeLabeling& f);
std::string labeling_json(const Graph& g, const VertexLabeling& gl);
std::string bound_report_json(const BoundReport& report);
std::string transform_outcome_json(const TransformOutcome& outcome);
std::string forest_labeling_json(const Graph& g, const ForestEdgeLabeling& out);
std::string solver_result_json(const Graph& g, const EdgeBandwidthResult& result);
std::string solver_result_json(const Graph& g, const BandwidthResult& result);

}  // namespace edgeband
