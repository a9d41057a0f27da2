#pragma once

#include <cstdint>
#include <vector>

#include "edgeband/graph.hpp"

namespace edgeband {

// Budgets for the exhaustive pieces of the lower-bound report.  Every bound
// in the report is a genuine lower bound on the edge-bandwidth; the budgets
// only control how much of the subgraph/subset space gets searched, never
// the soundness of what is reported.
struct BoundBudgets {
    int density_edges = 12;   // exhaustive connected edge subsets up to here
    int boundary_edges = 16;  // exhaustive boundary enumeration up to here
};

// Max degree minus one (the edges at one vertex are mutually incident),
// clamped at 0.  Certificate: a vertex of maximum degree.
struct DegreeBound {
    std::int64_t value = 0;
    int vertex = -1;
};
DegreeBound degree_bound(const Graph& g);

// Minimum over edges of the number of other edges incident to it.  On a
// simple graph this is min over uv of d(u)+d(v)-2.  Throws on an edgeless
// graph.  Certificate: a minimizing edge.
struct StarBound {
    std::int64_t value = 0;
    int edge = -1;
};
StarBound star_bound(const Graph& g);

// Density bound: max over a searched family of connected subgraphs H of
// ceil((e(H)-1)/diam(L(H))).  The searched family always contains the whole
// graph, every single-vertex star, and every edge neighborhood; when
// e(g) <= budget it covers all connected edge subsets.  Requires a
// connected input.  Certificate: the edge set of a maximizing H.
struct DensityBound {
    std::int64_t value = 0;
    std::vector<int> subgraph_edges;
};
DensityBound density_bound(const Graph& g, int subgraph_budget = BoundBudgets{}.density_edges);

// Boundary bound: max over k of min over edge sets F with |F| = k of
// |boundary(F)|, where boundary(F) is the set of edges outside F incident
// to F.  Exhaustive; `skipped` is set instead of a value when e(g) exceeds
// the budget.  Certificate: the optimal k and one minimizing F.
struct BoundaryBound {
    std::int64_t value = 0;
    bool skipped = false;
    int k = 0;
    std::vector<int> subset;
};
BoundaryBound boundary_bound(const Graph& g, int size_budget = BoundBudgets{}.boundary_edges);

// All bounds, run per component, overall = max over components (a labeling
// of a disconnected graph concatenates labelings of the components).
struct BoundReport {
    DegreeBound degree;
    StarBound star;
    bool star_skipped = false;  // edgeless graph
    DensityBound density;
    BoundaryBound boundary;
    std::int64_t overall = 0;
};
BoundReport lower_bound_report(const Graph& g, const BoundBudgets& budgets = {});

}  // namespace edgeband
