#pragma once

#include <string>
#include <utility>
#include <vector>

namespace edgeband {

// Undirected multigraph.  Loops (a == b) and parallel edges are permitted.
// The identity of an edge is its position in `edges`; nothing in this
// library reorders the edge list of an existing graph, so edge ids are
// stable across all read-only queries.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_loop(int e) const { return edges[e].first == edges[e].second; }

    // Loops count twice, as usual for multigraphs.
    int degree(int v) const;

    bool operator==(const Graph&) const = default;
};

// Validating constructor: every endpoint must be < vertex_count.
Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edge_pairs);

// Edge ids incident to each vertex.  A loop appears once in the list of its
// vertex; use Graph::degree for degree (which counts loops twice).
std::vector<std::vector<int>> incidence_lists(const Graph& g);

// ---------------------------------------------------------------------------
// Parametric graph families.
//
// Generated vertex/edge orderings are deterministic and documented per
// factory below; several labeling constructions rely on them.
// ---------------------------------------------------------------------------

struct FamilySpec {
    enum class Kind {
        path,                // n vertices 0..n-1, edges (i, i+1)
        cycle,               // n vertices, edges (i, (i+1) mod n)
        star,                // center 0, leaves 1..k, edges (0, i)
        complete,            // edges (i, j) for i < j, i-major order
        complete_bipartite,  // X = 0..a-1, Y = a..a+b-1, edges x-major
        caterpillar,         // see below
        theta,               // see below
        double_star,         // caterpillar with spine 2, pendants {k, k}
    };

    Kind kind = Kind::path;
    int n = 0;                        // path/cycle/star/complete/double_star
    int a = 0, b = 0;                 // complete_bipartite sides
    std::vector<int> pendant_counts;  // caterpillar: pendants per spine vertex
    std::vector<int> lengths;         // theta: path lengths
    bool allow_multigraph = false;    // permits theta with two unit lengths

    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec star(int k);
    static FamilySpec complete(int n);
    static FamilySpec complete_bipartite(int a, int b);
    // Spine vertices 0..s-1 where s = pendant_counts.size().  Edge order
    // walks the spine: pendants of v0, edge v0v1, pendants of v1, edge
    // v1v2, ...  Pendant vertices are numbered s, s+1, ... in edge order.
    static FamilySpec caterpillar(std::vector<int> pendant_counts);
    // Hub vertices u = 0 and v = 1.  Path i's edges appear consecutively
    // from u to v, paths in input order; internal vertices numbered in the
    // same order starting at 2.  At most one length may be 1 unless
    // allow_multigraph is set.
    static FamilySpec theta(std::vector<int> lengths, bool allow_multigraph = false);
    static FamilySpec double_star(int k);

    std::string to_string() const;
};

Graph generate(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Structural queries.
// ---------------------------------------------------------------------------

// One line-graph vertex per edge of g; two line vertices are adjacent iff
// the underlying edges share at least one endpoint.  The result is simple
// even when g has parallel edges, and a loop's line vertex is adjacent to
// every other edge at its vertex but never to itself.
struct LineGraphResult {
    Graph graph;
    std::vector<int> edge_to_vertex;  // edge id of g -> line vertex id
};
LineGraphResult line_graph(const Graph& g);

// Throws on a disconnected (or empty) graph; callers split with components().
int diameter(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by least
// vertex.  Isolated vertices form their own components.
std::vector<std::vector<int>> components(const Graph& g);

int max_degree(const Graph& g);

bool is_connected(const Graph& g);
bool is_simple(const Graph& g);  // no loops and no parallel edges
bool is_tree(const Graph& g);    // connected and acyclic (loops are cycles)

// ---------------------------------------------------------------------------
// Degree-1 peeling.
//
// Iteratively removes the least-indexed vertex of degree exactly 1 together
// with its attaching edge.  The remainder (every vertex of degree >= 2,
// plus any vertices that started isolated) is returned compacted, with
// translation tables back to the input ids.
//
// Convention for trees with at least one edge: the loop ends with a single
// surviving vertex whose last incident edge was already consumed; that
// vertex is appended to the peel order carrying the same final edge, and
// the core comes back empty.  Hence a tree peels completely and the final
// edge appears as the attachment of both of its endpoints.
// ---------------------------------------------------------------------------

struct PeelStep {
    int vertex;  // original vertex id
    int edge;    // original id of the edge that attached it
};

struct PeelResult {
    Graph core;
    std::vector<int> core_vertices;  // core vertex id -> original vertex id
    std::vector<int> core_edges;     // core edge id -> original edge id
    std::vector<PeelStep> order;     // in removal order
};

PeelResult peel_degree_one(const Graph& g);

}  // namespace edgeband
