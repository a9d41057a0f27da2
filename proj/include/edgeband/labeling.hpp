#pragma once

#include <cstdint>
#include <vector>

#include "edgeband/graph.hpp"

namespace edgeband {

// Distinct integer labels on the edges of an associated graph, indexed by
// edge id.  Canonical form is a bijection onto 1..m, but evaluators accept
// any pairwise distinct integers (several constructions hand out labels
// like 0 or t*g(v)+i before canonicalizing).
struct EdgeLabeling {
    std::vector<std::int64_t> labels;

    bool operator==(const EdgeLabeling&) const = default;
};

// Distinct integer labels on vertices, indexed by vertex id.  Canonical
// form bijects onto 1..n.
struct VertexLabeling {
    std::vector<std::int64_t> labels;

    bool operator==(const VertexLabeling&) const = default;
};

// Maximum |f(e) - f(e')| over pairs of edges sharing an endpoint; 0 when no
// two edges are incident (single-edge and edgeless graphs included).
// Throws if the labeling misses an edge or repeats a label.
std::int64_t edge_stretch(const Graph& g, const EdgeLabeling& f);

// Maximum |g(u) - g(v)| over edges uv; loops contribute 0, as does an
// edgeless graph.  Throws on size mismatch or duplicate labels.
std::int64_t vertex_stretch(const Graph& g, const VertexLabeling& gl);

// Order-isomorphic relabeling onto 1..k (rank map).  Idempotent; never
// increases stretch.
EdgeLabeling canonicalize(const EdgeLabeling& f);
VertexLabeling canonicalize(const VertexLabeling& gl);

// Identity labeling 1..k in index order.
EdgeLabeling identity_edge_labeling(int edge_count);
VertexLabeling identity_vertex_labeling(int vertex_count);

bool labels_distinct(const std::vector<std::int64_t>& labels);

// Text serialization: one "<index> <label>" line per item.
std::string write_labels(const std::vector<std::int64_t>& labels);
std::vector<std::int64_t> parse_labels(const std::string& text);

}  // namespace edgeband
