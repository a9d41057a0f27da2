#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "edgeband/graph.hpp"
#include "edgeband/labeling.hpp"

namespace edgeband {

// A closed-form edge labeling together with the value it promises.  Every
// constructor re-evaluates its own output and refuses to return a labeling
// that misses the claim (== for exact formulas, <= when upper_bound_only).
struct ConstructionResult {
    EdgeLabeling labeling;  // bijection onto 1..m over the family's edge ids
    std::int64_t claimed_value = 0;
    std::string formula_name;
    bool upper_bound_only = false;
};

// Spine-walk ordering for caterpillars (pendants of v0, edge v0v1, pendants
// of v1, ...).  Exact: max degree minus one.  Accepts caterpillar, star,
// double_star and path specs.
ConstructionResult caterpillar_labeling(const FamilySpec& spec);

// Split ordering for K_n: low labels fill one half in colex order, high
// labels the other half mirrored, and the cross edges finish vertex by
// vertex alternating between the two ends of the remaining gap.  Exact:
// floor(n^2/4) + ceil(n/2) - 2.
ConstructionResult clique_labeling(int n);

// Alternating-finish ordering for K_{n,n} over the interleaved vertex list
// x1,y1,...,xn,yn.  Exact: C(n+1,2) - 1.
ConstructionResult biclique_labeling(int n);

// Theta graphs.  For lengths {1,3,...,3} the ordering walks the long paths
// in parallel with the short edge inserted at the middle; exact value
// ceil((3m-3)/2).  For {1,2,...,2} and {2,3,...,3} the analogous orderings
// certify only the upper bound m (flagged upper_bound_only).  Other length
// lists are rejected.
ConstructionResult theta_labeling(const FamilySpec& spec);

// If g is one of the families above (complete, balanced complete bipartite,
// caterpillar, supported theta), returns the corresponding construction
// transferred onto g's own edge ids; otherwise nullopt.  Used to seed the
// exact solver with a strong incumbent.
std::optional<ConstructionResult> recognized_family_labeling(const Graph& g);

}  // namespace edgeband
