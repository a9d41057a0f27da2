#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "edgeband/graph.hpp"

namespace edgeband {

// All connected simple graphs on exactly n labeled vertices, enumerated as
// edge subsets in increasing mask order (deterministic).
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

struct PropertyResult {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::string first_counterexample;
};

struct SweepOptions {
    int max_vertices = 5;      // exhaustive sweep cap (hard limit 6)
    std::uint64_t seed = 1;    // randomized labelings and transform inputs
    int random_cases = 10000;  // randomized transform bound checks
};

struct SweepReport {
    std::vector<PropertyResult> properties;
    bool all_passed() const;
    const PropertyResult* find(const std::string& name) const;
};

// Runs every cross-module invariant: exhaustive checks over all connected
// simple graphs up to max_vertices (exact solver values on both sides of
// the edge-operation inequalities) plus randomized guaranteed-bound checks
// for the labeled transforms.  Deterministic for a fixed seed, and the
// exhaustive properties do not depend on the seed at all.
SweepReport verify_sweep(const SweepOptions& options = {});

std::string format_report(const SweepReport& report);

}  // namespace edgeband
