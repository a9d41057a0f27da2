#pragma once

#include <cstdint>
#include <utility>

#include "edgeband/graph.hpp"
#include "edgeband/labeling.hpp"

namespace edgeband {

// Result of a labeled edge operation.  `guaranteed_bound` is the bound the
// construction promises on the output stretch, instantiated from the input
// labeling's stretch; every constructor verifies achieved <= bound before
// returning.  `raw_labeling` keeps the pre-canonical labels for audit.
struct TransformOutcome {
    Graph graph;
    EdgeLabeling labeling;  // canonical
    EdgeLabeling raw_labeling;
    std::int64_t guaranteed_bound = 0;
    std::int64_t achieved = 0;  // evaluated stretch of `labeling`
};

// ---------------------------------------------------------------------------
// Edge labels to vertex labels.
// ---------------------------------------------------------------------------

// Phase walk for graphs of minimum degree >= 2: each phase starts at the
// least unlabeled vertex, repeatedly takes the unused incident edge of
// smallest label, hands that label to the active vertex and moves across.
// Output labels are distinct f-labels and adjacent vertices differ by at
// most edge_stretch(g, f).
VertexLabeling edge_to_vertex_mindeg2(const Graph& g, const EdgeLabeling& f);

// Tree version: root at the minimum-label edge uv, label every other vertex
// with the edge toward the root, then zero out whichever of u, v does not
// see the largest label incident to uv (ties resolve as if it were on v's
// side).  Adjacent differences stay within max(edge_stretch(t, f), 1); the
// max kicks in only for the single-edge tree, whose two endpoints must
// differ while no two edges are incident.
VertexLabeling edge_to_vertex_tree(const Graph& t, const EdgeLabeling& f);

// Driver for any connected graph with an edge: trees go to the tree rule;
// otherwise the degree-1 peel runs the phase walk on the core and re-adds
// each peeled vertex with its attachment edge's label.  Witnesses that the
// bandwidth never exceeds max(edge-bandwidth, 1).
VertexLabeling edge_to_vertex(const Graph& g, const EdgeLabeling& f);

// ---------------------------------------------------------------------------
// Vertex labels to edge labels via forest layers.
// ---------------------------------------------------------------------------

struct ForestEdgeLabeling {
    EdgeLabeling labeling;      // canonical
    EdgeLabeling raw_labeling;  // t*g(v(e)) + layer
    int forest_count = 0;       // achieved number of layers t
    std::int64_t guaranteed_bound = 0;  // 2*t*vertex_stretch + t - 1
};

// Greedy forest peeling (repeatedly extract a maximal spanning forest),
// each forest rooted at its least vertex; edge e is labeled through the
// endpoint whose path to the root starts with e.  Loops cannot join any
// forest and go into extra layers of their own, at most one per vertex per
// layer, which keeps the same distance-2 argument valid.
ForestEdgeLabeling vertex_to_edge_forests(const Graph& g, const VertexLabeling& gl);

// ---------------------------------------------------------------------------
// Labeled edge operations.  All take a canonical labeling (bijection onto
// 1..m) and reject anything else.
// ---------------------------------------------------------------------------

// Adds an edge.  Isolated edge: top label, bound = stretch.  One incident
// endpoint: inserted just above the least label there, bound = stretch + 1.
// Both endpoints incident: the ordering folds at the midpoint of the labels
// incident to the new edge, which lands at label q - p; old incident pairs
// can stretch to 2s+1 and label-free degenerates to 2, so the bound is
// max(2*stretch + 1, 2).
TransformOutcome add_edge_fold(const Graph& g, const EdgeLabeling& f,
                               std::pair<int, int> new_edge, bool allow_existing = false);

// Subdivides an edge; the two replacement edges take labels f(e), f(e)+1
// and everything above shifts up.  Bound: stretch + 1.
TransformOutcome subdivide_lift(const Graph& g, const EdgeLabeling& f, int edge);

// Undoes a subdivision at a degree-2 vertex shared by e1, e2: the merged
// edge lands at the midpoint of their labels.  Bound: floor(3*stretch/2).
TransformOutcome subdivision_collapse(const Graph& h, const EdgeLabeling& f, int e1, int e2);

// Contracts an edge, keeping all loops and parallel edges that arise; the
// contracted label is deleted, higher labels close the gap.  Bound:
// max(2*stretch - 1, 0).
TransformOutcome contract_delete(const Graph& g, const EdgeLabeling& f, int edge);

// Inverse direction: given g, the edge that was contracted, and a canonical
// labeling of the contracted graph h, re-inserts the edge just above the
// least label incident to the merged vertex (top label if the merged vertex
// is isolated).  Bound: stretch + 1.
TransformOutcome contract_insert(const Graph& g, int contracted_edge, const EdgeLabeling& f_on_h);

// ---------------------------------------------------------------------------
// Unlabeled graph surgery with the same id conventions as the labeled ops
// (exact-value sweeps compare solver results across these).
// ---------------------------------------------------------------------------

Graph add_edge(const Graph& g, std::pair<int, int> e);
Graph subdivide(const Graph& g, int edge);
Graph contract(const Graph& g, int edge);

}  // namespace edgeband
