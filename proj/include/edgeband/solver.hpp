#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "edgeband/graph.hpp"
#include "edgeband/labeling.hpp"

namespace edgeband {

struct SolverConfig {
    // Largest graph (vertices for bandwidth, edges for edge-bandwidth) the
    // branch-and-bound will accept; above it an unsolved result with cheap
    // bounds comes back instead.  Hard cap 30 (bitmask width).
    int vertex_budget = 16;

    // Wall-clock cap; unset means unlimited.
    std::optional<double> time_budget_seconds;

    // Optional starting upper bound.  Values are probed, never trusted: a
    // seed below the true optimum just costs one refuted probe.
    std::optional<std::int64_t> seed_upper_bound;

    // Optional incumbent labeling, e.g. from a closed-form construction.
    std::optional<VertexLabeling> seed_labeling;
};

struct BandwidthResult {
    bool solved = false;
    std::int64_t value = 0;  // optimum when solved, else best known upper bound
    VertexLabeling labeling;
    std::int64_t lower_bound = 0;
    std::int64_t upper_bound = 0;
    long long nodes = 0;
};

struct EdgeBandwidthResult {
    bool solved = false;
    std::int64_t value = 0;
    EdgeLabeling labeling;
    std::int64_t lower_bound = 0;
    std::int64_t upper_bound = 0;
    long long nodes = 0;
};

// Exact minimum of vertex_stretch over all n! bijections, with the
// lexicographically least optimal labeling.  Enforces n <= 9.
std::pair<std::int64_t, VertexLabeling> brute_force_bandwidth(const Graph& g);

// Exact bandwidth by branch-and-bound over left-to-right placements.
// Candidate bounds are probed by binary descent from the initial upper
// bound; a partial placement is cut when the vertices some placed vertex
// still needs cannot all fit within the current bound.  The certificate is
// the lexicographically least optimal labeling.
BandwidthResult exact_bandwidth(const Graph& g, const SolverConfig& cfg = {});

// Exact edge-bandwidth: bandwidth of the line graph, pulled back through
// the edge -> line-vertex mapping.  Seeds the search with a closed-form
// construction when the input is a recognized family.
EdgeBandwidthResult exact_edge_bandwidth(const Graph& g, const SolverConfig& cfg = {});

}  // namespace edgeband
