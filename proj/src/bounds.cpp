#include "edgeband/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace edgeband {

DegreeBound degree_bound(const Graph& g) {
    DegreeBound out;
    for (int v = 0; v < g.vertex_count; ++v) {
        int d = g.degree(v);
        if (d - 1 > out.value) {
            out.value = d - 1;
            out.vertex = v;
        }
    }
    if (out.vertex < 0 && g.vertex_count > 0) out.vertex = 0;
    return out;
}

StarBound star_bound(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("star_bound: edgeless graph");
    auto at = incidence_lists(g);
    StarBound out;
    out.value = std::numeric_limits<std::int64_t>::max();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        std::set<int> incident(at[u].begin(), at[u].end());
        incident.insert(at[v].begin(), at[v].end());
        std::int64_t others = static_cast<std::int64_t>(incident.size()) - 1;
        if (others < out.value) {
            out.value = others;
            out.edge = e;
        }
    }
    return out;
}

namespace {

// Diameter of the line graph of the subgraph picked out by `subset` (edge
// ids of g).  Returns -1 if that line graph is disconnected or empty.
int line_subgraph_diameter(const Graph& g, const std::vector<int>& subset) {
    int k = static_cast<int>(subset.size());
    if (k == 0) return -1;
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto [a1, b1] = g.edges[subset[i]];
            auto [a2, b2] = g.edges[subset[j]];
            if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    int diam = 0;
    for (int s = 0; s < k; ++s) {
        std::vector<int> dist(k, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (int d : dist) {
            if (d < 0) return -1;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

std::int64_t density_value(const Graph& g, const std::vector<int>& subset) {
    if (subset.size() < 2) return 0;
    int diam = line_subgraph_diameter(g, subset);
    if (diam <= 0) return diam == 0 ? 0 : -1;  // -1: disconnected subgraph
    std::int64_t e = static_cast<std::int64_t>(subset.size());
    return (e - 1 + diam - 1) / diam;
}

}  // namespace

DensityBound density_bound(const Graph& g, int subgraph_budget) {
    if (!is_connected(g)) throw std::invalid_argument("density_bound: graph must be connected");
    DensityBound out;
    auto consider = [&](const std::vector<int>& subset) {
        std::int64_t v = density_value(g, subset);
        if (v > out.value) {
            out.value = v;
            out.subgraph_edges = subset;
        }
    };

    int m = g.edge_count();
    std::vector<int> whole(m);
    for (int e = 0; e < m; ++e) whole[e] = e;
    consider(whole);

    auto at = incidence_lists(g);
    for (int v = 0; v < g.vertex_count; ++v) consider(at[v]);

    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        std::set<int> nbhd(at[u].begin(), at[u].end());
        nbhd.insert(at[v].begin(), at[v].end());
        consider(std::vector<int>(nbhd.begin(), nbhd.end()));
    }

    if (m >= 2 && m <= subgraph_budget && m < 25) {
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<int> subset;
            for (int e = 0; e < m; ++e)
                if (mask & (1u << e)) subset.push_back(e);
            consider(subset);
        }
    }
    return out;
}

BoundaryBound boundary_bound(const Graph& g, int size_budget) {
    BoundaryBound out;
    int m = g.edge_count();
    if (m == 0) return out;
    if (m > size_budget || m > 24) {
        out.skipped = true;
        return out;
    }

    std::vector<std::uint64_t> inc(m, 0);
    auto at = incidence_lists(g);
    for (const auto& list : at)
        for (int a : list)
            for (int b : list)
                if (a != b) inc[a] |= 1ull << b;

    const std::uint64_t full = (m == 64) ? ~0ull : ((1ull << m) - 1);
    std::vector<std::int64_t> best(m + 1, std::numeric_limits<std::int64_t>::max());
    std::vector<std::uint64_t> witness(m + 1, 0);
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        int k = std::popcount(mask);
        std::uint64_t nbhd = 0;
        std::uint64_t bits = mask;
        while (bits) {
            int e = std::countr_zero(bits);
            bits &= bits - 1;
            nbhd |= inc[e];
        }
        std::int64_t boundary = std::popcount(nbhd & ~mask);
        if (boundary < best[k]) {
            best[k] = boundary;
            witness[k] = mask;
        }
    }
    for (int k = 1; k <= m; ++k) {
        if (best[k] > out.value) {
            out.value = best[k];
            out.k = k;
            out.subset.clear();
            for (int e = 0; e < m; ++e)
                if (witness[k] & (1ull << e)) out.subset.push_back(e);
        }
    }
    if (out.k == 0) {
        // All minima are 0 (e.g. a single edge); certify with k = 1.
        out.k = 1;
        out.subset = {0};
    }
    return out;
}

namespace {

struct SubgraphView {
    Graph graph;
    std::vector<int> vertex_ids;  // new -> original
    std::vector<int> edge_ids;    // new -> original
};

SubgraphView induced(const Graph& g, const std::vector<int>& vertices) {
    SubgraphView view;
    view.vertex_ids = vertices;
    std::vector<int> new_id(g.vertex_count, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) new_id[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        if (new_id[a] >= 0 && new_id[b] >= 0) {
            edges.emplace_back(new_id[a], new_id[b]);
            view.edge_ids.push_back(e);
        }
    }
    view.graph = Graph{static_cast<int>(vertices.size()), std::move(edges)};
    return view;
}

}  // namespace

BoundReport lower_bound_report(const Graph& g, const BoundBudgets& budgets) {
    BoundReport report;
    report.star.value = 0;
    report.star_skipped = g.edge_count() == 0;

    bool have_star = false;
    for (const auto& comp : components(g)) {
        SubgraphView view = induced(g, comp);
        const Graph& h = view.graph;

        DegreeBound deg = degree_bound(h);
        if (deg.vertex >= 0 && (report.degree.vertex < 0 || deg.value > report.degree.value))
            report.degree = DegreeBound{deg.value, view.vertex_ids[deg.vertex]};

        if (h.edge_count() > 0) {
            StarBound star = star_bound(h);
            if (!have_star || star.value > report.star.value) {
                report.star = StarBound{star.value, view.edge_ids[star.edge]};
                have_star = true;
            }

            DensityBound dens = density_bound(h, budgets.density_edges);
            if (dens.value > report.density.value) {
                report.density.value = dens.value;
                report.density.subgraph_edges.clear();
                for (int e : dens.subgraph_edges)
                    report.density.subgraph_edges.push_back(view.edge_ids[e]);
            }

            BoundaryBound bdry = boundary_bound(h, budgets.boundary_edges);
            if (bdry.skipped) {
                report.boundary.skipped = true;
            } else if (bdry.value > report.boundary.value || report.boundary.k == 0) {
                report.boundary.value = std::max(report.boundary.value, bdry.value);
                report.boundary.k = bdry.k;
                report.boundary.subset.clear();
                for (int e : bdry.subset) report.boundary.subset.push_back(view.edge_ids[e]);
            }
        }
    }

    report.overall = std::max({std::int64_t{0}, report.degree.value, report.star.value,
                               report.density.value,
                               report.boundary.skipped ? 0 : report.boundary.value});
    return report;
}

}  // namespace edgeband
