#include "edgeband/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace edgeband {

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edge_pairs) {
    if (vertex_count < 0) throw std::invalid_argument("make_graph: negative vertex count");
    for (std::size_t i = 0; i < edge_pairs.size(); ++i) {
        const auto& [a, b] = edge_pairs[i];
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count) {
            std::ostringstream msg;
            msg << "make_graph: edge " << i << " = (" << a << "," << b
                << ") has an endpoint outside 0.." << vertex_count - 1;
            throw std::invalid_argument(msg.str());
        }
    }
    return Graph{vertex_count, std::move(edge_pairs)};
}

std::vector<std::vector<int>> incidence_lists(const Graph& g) {
    std::vector<std::vector<int>> at(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.edges[e];
        at[a].push_back(e);
        if (b != a) at[b].push_back(e);
    }
    return at;
}

// --- family factories ------------------------------------------------------

FamilySpec FamilySpec::path(int n) {
    FamilySpec s;
    s.kind = Kind::path;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::cycle(int n) {
    FamilySpec s;
    s.kind = Kind::cycle;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::star(int k) {
    FamilySpec s;
    s.kind = Kind::star;
    s.n = k;
    return s;
}

FamilySpec FamilySpec::complete(int n) {
    FamilySpec s;
    s.kind = Kind::complete;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::complete_bipartite(int a, int b) {
    FamilySpec s;
    s.kind = Kind::complete_bipartite;
    s.a = a;
    s.b = b;
    return s;
}

FamilySpec FamilySpec::caterpillar(std::vector<int> pendant_counts) {
    FamilySpec s;
    s.kind = Kind::caterpillar;
    s.pendant_counts = std::move(pendant_counts);
    return s;
}

FamilySpec FamilySpec::theta(std::vector<int> lengths, bool allow_multigraph) {
    FamilySpec s;
    s.kind = Kind::theta;
    s.lengths = std::move(lengths);
    s.allow_multigraph = allow_multigraph;
    return s;
}

FamilySpec FamilySpec::double_star(int k) {
    FamilySpec s;
    s.kind = Kind::double_star;
    s.n = k;
    return s;
}

std::string FamilySpec::to_string() const {
    std::ostringstream out;
    auto join = [&](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    };
    switch (kind) {
        case Kind::path: out << "path:" << n; break;
        case Kind::cycle: out << "cycle:" << n; break;
        case Kind::star: out << "star:" << n; break;
        case Kind::complete: out << "complete:" << n; break;
        case Kind::complete_bipartite: out << "complete_bipartite:" << a << "," << b; break;
        case Kind::caterpillar:
            out << "caterpillar:";
            join(pendant_counts);
            break;
        case Kind::theta:
            out << "theta:";
            join(lengths);
            break;
        case Kind::double_star: out << "double_star:" << n; break;
    }
    return out.str();
}

Graph generate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case Kind::path: {
            if (spec.n < 1) throw std::invalid_argument("generate: path needs n >= 1");
            for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
            return Graph{spec.n, std::move(edges)};
        }
        case Kind::cycle: {
            int min_n = spec.allow_multigraph ? 1 : 3;
            if (spec.n < min_n) throw std::invalid_argument("generate: cycle needs n >= 3 (or multigraph flag)");
            for (int i = 0; i < spec.n; ++i) edges.emplace_back(i, (i + 1) % spec.n);
            return Graph{spec.n, std::move(edges)};
        }
        case Kind::star: {
            if (spec.n < 1) throw std::invalid_argument("generate: star needs k >= 1");
            for (int i = 1; i <= spec.n; ++i) edges.emplace_back(0, i);
            return Graph{spec.n + 1, std::move(edges)};
        }
        case Kind::complete: {
            if (spec.n < 1) throw std::invalid_argument("generate: complete needs n >= 1");
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(i, j);
            return Graph{spec.n, std::move(edges)};
        }
        case Kind::complete_bipartite: {
            if (spec.a < 1 || spec.b < 1)
                throw std::invalid_argument("generate: complete_bipartite needs sides >= 1");
            for (int x = 0; x < spec.a; ++x)
                for (int y = 0; y < spec.b; ++y) edges.emplace_back(x, spec.a + y);
            return Graph{spec.a + spec.b, std::move(edges)};
        }
        case Kind::caterpillar: {
            const auto& pend = spec.pendant_counts;
            if (pend.empty()) throw std::invalid_argument("generate: caterpillar needs a nonempty spine");
            for (int p : pend)
                if (p < 0) throw std::invalid_argument("generate: negative pendant count");
            int spine = static_cast<int>(pend.size());
            int next = spine;
            for (int i = 0; i < spine; ++i) {
                for (int p = 0; p < pend[i]; ++p) edges.emplace_back(i, next++);
                if (i + 1 < spine) edges.emplace_back(i, i + 1);
            }
            return Graph{next, std::move(edges)};
        }
        case Kind::theta: {
            const auto& len = spec.lengths;
            if (len.empty()) throw std::invalid_argument("generate: theta needs at least one path");
            int ones = 0;
            for (int l : len) {
                if (l < 1) throw std::invalid_argument("generate: theta lengths must be >= 1");
                if (l == 1) ++ones;
            }
            if (ones > 1 && !spec.allow_multigraph)
                throw std::invalid_argument(
                    "generate: theta with two unit paths is a multigraph; set the multigraph flag");
            int next = 2;
            for (int l : len) {
                int prev = 0;
                for (int step = 0; step + 1 < l; ++step) {
                    edges.emplace_back(prev, next);
                    prev = next++;
                }
                edges.emplace_back(prev, 1);
            }
            return Graph{next, std::move(edges)};
        }
        case Kind::double_star: {
            if (spec.n < 1) throw std::invalid_argument("generate: double_star needs k >= 1");
            return generate(FamilySpec::caterpillar({spec.n, spec.n}));
        }
    }
    throw std::logic_error("generate: unknown family kind");
}

// --- structural queries -----------------------------------------------------

LineGraphResult line_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<int> mapping(m);
    for (int e = 0; e < m; ++e) mapping[e] = e;

    std::set<std::pair<int, int>> adj;
    auto at = incidence_lists(g);
    for (const auto& list : at) {
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                int a = list[i], b = list[j];
                adj.emplace(std::min(a, b), std::max(a, b));
            }
    }
    Graph lg{m, std::vector<std::pair<int, int>>(adj.begin(), adj.end())};
    return LineGraphResult{std::move(lg), std::move(mapping)};
}

namespace {

// Breadth-first distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, const std::vector<std::vector<int>>& at, int src) {
    std::vector<int> dist(g.vertex_count, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : at[v]) {
            int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

int diameter(const Graph& g) {
    if (g.vertex_count == 0) throw std::invalid_argument("diameter: empty graph");
    auto at = incidence_lists(g);
    int best = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        auto dist = bfs_distances(g, at, v);
        for (int d : dist) {
            if (d < 0) throw std::invalid_argument("diameter: graph is disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<std::vector<int>> components(const Graph& g) {
    auto at = incidence_lists(g);
    std::vector<bool> seen(g.vertex_count, false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.vertex_count; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = true;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int e : at[v]) {
                int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count; ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_simple(const Graph& g) {
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : g.edges) {
        if (a == b) return false;
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        if (!seen.insert(key).second) return false;
    }
    return true;
}

bool is_tree(const Graph& g) {
    return g.vertex_count >= 1 && g.edge_count() == g.vertex_count - 1 && is_connected(g);
}

PeelResult peel_degree_one(const Graph& g) {
    int n = g.vertex_count, m = g.edge_count();
    std::vector<bool> vertex_alive(n, true), edge_alive(m, true);
    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : g.edges) {
        deg[a]++;
        deg[b]++;
    }
    auto at = incidence_lists(g);

    PeelResult result;
    int alive_edges = m;
    while (true) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (vertex_alive[v] && deg[v] == 1) {
                pick = v;
                break;
            }
        if (pick < 0) break;
        int attach = -1;
        for (int e : at[pick])
            if (edge_alive[e]) {
                attach = e;
                break;
            }
        vertex_alive[pick] = false;
        edge_alive[attach] = false;
        --alive_edges;
        int other = g.edges[attach].first == pick ? g.edges[attach].second : g.edges[attach].first;
        deg[pick] -= 1;
        deg[other] -= 1;
        result.order.push_back(PeelStep{pick, attach});
    }

    // Tree convention: a survivor whose incident edges were all consumed is
    // carried out with the last of them, so a tree peels completely and the
    // final edge appears as the attachment of both endpoints.
    (void)alive_edges;
    std::vector<int> consumed_at(m, -1);
    for (std::size_t i = 0; i < result.order.size(); ++i) consumed_at[result.order[i].edge] = static_cast<int>(i);
    for (int v = 0; v < n; ++v) {
        if (!vertex_alive[v] || at[v].empty() || deg[v] != 0) continue;
        int attach = -1, latest = -1;
        for (int e : at[v])
            if (consumed_at[e] > latest) {
                latest = consumed_at[e];
                attach = e;
            }
        vertex_alive[v] = false;
        result.order.push_back(PeelStep{v, attach});
    }

    std::vector<int> new_id(n, -1);
    for (int v = 0; v < n; ++v)
        if (vertex_alive[v]) {
            new_id[v] = static_cast<int>(result.core_vertices.size());
            result.core_vertices.push_back(v);
        }
    std::vector<std::pair<int, int>> core_edges;
    for (int e = 0; e < m; ++e)
        if (edge_alive[e]) {
            core_edges.emplace_back(new_id[g.edges[e].first], new_id[g.edges[e].second]);
            result.core_edges.push_back(e);
        }
    result.core = Graph{static_cast<int>(result.core_vertices.size()), std::move(core_edges)};
    return result;
}

}  // namespace edgeband
