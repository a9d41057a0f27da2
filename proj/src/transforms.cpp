#include "edgeband/transforms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace edgeband {

namespace {

void require_labeling(const Graph& g, const EdgeLabeling& f, const char* what) {
    if (f.labels.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument(std::string(what) + ": labeling size does not match edge count");
    if (!labels_distinct(f.labels))
        throw std::invalid_argument(std::string(what) + ": duplicate labels");
}

void require_canonical(const Graph& g, const EdgeLabeling& f, const char* what) {
    require_labeling(g, f, what);
    for (std::int64_t l : f.labels)
        if (l < 1 || l > g.edge_count())
            throw std::invalid_argument(std::string(what) + ": labeling must be a bijection onto 1..m");
}

int other_endpoint(const Graph& g, int e, int v) {
    return g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
}

TransformOutcome finish_outcome(Graph graph, EdgeLabeling raw, std::int64_t bound, const char* what) {
    TransformOutcome out;
    out.graph = std::move(graph);
    out.raw_labeling = std::move(raw);
    std::int64_t raw_stretch = edge_stretch(out.graph, out.raw_labeling);
    out.labeling = canonicalize(out.raw_labeling);
    out.achieved = edge_stretch(out.graph, out.labeling);
    out.guaranteed_bound = bound;
    if (raw_stretch > bound || out.achieved > bound) {
        std::ostringstream msg;
        msg << what << ": construction exceeded its guaranteed bound (" << raw_stretch << " vs "
            << bound << ")";
        throw std::logic_error(msg.str());
    }
    return out;
}

}  // namespace

// --- edge labels -> vertex labels -------------------------------------------

VertexLabeling edge_to_vertex_mindeg2(const Graph& g, const EdgeLabeling& f) {
    require_labeling(g, f, "edge_to_vertex_mindeg2");
    for (int v = 0; v < g.vertex_count; ++v)
        if (g.degree(v) < 2)
            throw std::invalid_argument("edge_to_vertex_mindeg2: vertex of degree < 2");

    auto at = incidence_lists(g);
    int n = g.vertex_count;
    std::vector<bool> used(g.edge_count(), false), labeled(n, false);
    std::vector<std::int64_t> labels(n, 0);

    for (int start = 0; start < n; ++start) {
        if (labeled[start]) continue;
        int active = start;
        while (true) {
            int pick = -1;
            for (int e : at[active])
                if (!used[e] && (pick < 0 || f.labels[e] < f.labels[pick])) pick = e;
            if (pick < 0) throw std::logic_error("edge_to_vertex_mindeg2: stuck phase");
            labels[active] = f.labels[pick];
            labeled[active] = true;
            used[pick] = true;
            active = other_endpoint(g, pick, active);
            if (labeled[active]) break;
        }
    }

    VertexLabeling out{std::move(labels)};
    std::int64_t s = edge_stretch(g, f);
    if (vertex_stretch(g, out) > s)
        throw std::logic_error("edge_to_vertex_mindeg2: output exceeds the input stretch");
    return out;
}

VertexLabeling edge_to_vertex_tree(const Graph& t, const EdgeLabeling& f_in) {
    require_labeling(t, f_in, "edge_to_vertex_tree");
    if (!is_tree(t) || t.edge_count() < 1)
        throw std::invalid_argument("edge_to_vertex_tree: input must be a tree with an edge");

    EdgeLabeling f = f_in;
    std::int64_t min_label = *std::min_element(f.labels.begin(), f.labels.end());
    if (min_label != 1) f = canonicalize(f);

    int root_edge = static_cast<int>(std::min_element(f.labels.begin(), f.labels.end()) -
                                     f.labels.begin());
    auto [u, v] = t.edges[root_edge];

    auto at = incidence_lists(t);
    int n = t.vertex_count;
    std::vector<std::int64_t> labels(n, 0);
    std::vector<bool> seen(n, false);
    seen[u] = seen[v] = true;
    std::queue<int> q;
    q.push(u);
    q.push(v);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int e : at[x]) {
            int w = other_endpoint(t, e, x);
            if (seen[w]) continue;
            seen[w] = true;
            labels[w] = f.labels[e];  // edge from w toward the root
            q.push(w);
        }
    }

    // Largest label incident to the root edge decides which endpoint keeps
    // the root label; the other drops to 0.
    int max_edge = root_edge;
    for (int e : at[u])
        if (f.labels[e] > f.labels[max_edge]) max_edge = e;
    for (int e : at[v])
        if (f.labels[e] > f.labels[max_edge]) max_edge = e;
    bool max_on_v = max_edge == root_edge ||
                    t.edges[max_edge].first == v || t.edges[max_edge].second == v;
    if (max_on_v) {
        labels[u] = 0;
        labels[v] = f.labels[root_edge];
    } else {
        labels[v] = 0;
        labels[u] = f.labels[root_edge];
    }

    VertexLabeling out{std::move(labels)};
    std::int64_t s = edge_stretch(t, f);
    if (vertex_stretch(t, out) > std::max<std::int64_t>(s, 1))
        throw std::logic_error("edge_to_vertex_tree: output exceeds the input stretch");
    return out;
}

VertexLabeling edge_to_vertex(const Graph& g, const EdgeLabeling& f) {
    require_labeling(g, f, "edge_to_vertex");
    if (g.edge_count() < 1) throw std::invalid_argument("edge_to_vertex: graph has no edges");
    if (!is_connected(g))
        throw std::invalid_argument("edge_to_vertex: graph must be connected; split by components first");
    if (is_tree(g)) return edge_to_vertex_tree(g, f);

    PeelResult peel = peel_degree_one(g);
    EdgeLabeling core_f;
    core_f.labels.reserve(peel.core_edges.size());
    for (int e : peel.core_edges) core_f.labels.push_back(f.labels[e]);
    VertexLabeling core_g = edge_to_vertex_mindeg2(peel.core, core_f);

    std::vector<std::int64_t> labels(g.vertex_count, 0);
    for (std::size_t i = 0; i < peel.core_vertices.size(); ++i)
        labels[peel.core_vertices[i]] = core_g.labels[i];
    for (auto it = peel.order.rbegin(); it != peel.order.rend(); ++it)
        labels[it->vertex] = f.labels[it->edge];

    VertexLabeling out{std::move(labels)};
    std::int64_t s = edge_stretch(g, f);
    if (vertex_stretch(g, out) > std::max<std::int64_t>(s, 1))
        throw std::logic_error("edge_to_vertex: output exceeds the input stretch");
    return out;
}

// --- vertex labels -> edge labels --------------------------------------------

ForestEdgeLabeling vertex_to_edge_forests(const Graph& g, const VertexLabeling& gl) {
    if (gl.labels.size() != static_cast<std::size_t>(g.vertex_count))
        throw std::invalid_argument("vertex_to_edge_forests: labeling size mismatch");
    if (!labels_distinct(gl.labels))
        throw std::invalid_argument("vertex_to_edge_forests: duplicate labels");

    int n = g.vertex_count, m = g.edge_count();
    std::vector<std::vector<int>> layers;
    std::vector<bool> taken(m, false);

    // Maximal spanning forests, greedily, edges scanned in id order.
    while (true) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<int> layer;
        for (int e = 0; e < m; ++e) {
            if (taken[e] || g.is_loop(e)) continue;
            int ra = find(g.edges[e].first), rb = find(g.edges[e].second);
            if (ra == rb) continue;
            parent[ra] = rb;
            taken[e] = true;
            layer.push_back(e);
        }
        if (layer.empty()) break;
        layers.push_back(std::move(layer));
    }
    // Loops go into extra layers, at most one loop per vertex per layer.
    std::vector<std::vector<int>> loop_layers;
    std::vector<std::vector<bool>> vertex_in_layer;
    for (int e = 0; e < m; ++e) {
        if (!g.is_loop(e)) continue;
        int v = g.edges[e].first;
        std::size_t slot = 0;
        while (slot < loop_layers.size() && vertex_in_layer[slot][v]) ++slot;
        if (slot == loop_layers.size()) {
            loop_layers.emplace_back();
            vertex_in_layer.emplace_back(n, false);
        }
        loop_layers[slot].push_back(e);
        vertex_in_layer[slot][v] = true;
    }
    for (auto& l : loop_layers) layers.push_back(std::move(l));

    int t = std::max<int>(1, static_cast<int>(layers.size()));
    std::vector<std::int64_t> raw(m, 0);
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const auto& layer = layers[i];
        // Orient: root each component at its least vertex, v(e) = the child.
        std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge, other)
        std::vector<bool> in_layer_vertex(n, false);
        for (int e : layer) {
            auto [a, b] = g.edges[e];
            in_layer_vertex[a] = in_layer_vertex[b] = true;
            if (a != b) {
                adj[a].emplace_back(e, b);
                adj[b].emplace_back(e, a);
            } else {
                raw[e] = static_cast<std::int64_t>(t) * gl.labels[a] + static_cast<std::int64_t>(i) + 1;
            }
        }
        std::vector<bool> seen(n, false);
        for (int root = 0; root < n; ++root) {
            if (!in_layer_vertex[root] || seen[root]) continue;
            seen[root] = true;
            std::queue<int> q;
            q.push(root);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (auto [e, w] : adj[x]) {
                    if (seen[w]) continue;
                    seen[w] = true;
                    raw[e] = static_cast<std::int64_t>(t) * gl.labels[w] +
                             static_cast<std::int64_t>(i) + 1;  // w is the child of e
                    q.push(w);
                }
            }
        }
    }

    ForestEdgeLabeling out;
    out.forest_count = t;
    out.raw_labeling = EdgeLabeling{std::move(raw)};
    std::int64_t b = vertex_stretch(g, gl);
    out.guaranteed_bound = 2 * static_cast<std::int64_t>(t) * b + t - 1;
    if (m > 0) {
        std::int64_t raw_stretch = edge_stretch(g, out.raw_labeling);
        out.labeling = canonicalize(out.raw_labeling);
        if (raw_stretch > out.guaranteed_bound)
            throw std::logic_error("vertex_to_edge_forests: output exceeds the guaranteed bound");
    }
    return out;
}

// --- unlabeled surgery --------------------------------------------------------

Graph add_edge(const Graph& g, std::pair<int, int> e) {
    if (e.first < 0 || e.first >= g.vertex_count || e.second < 0 || e.second >= g.vertex_count)
        throw std::invalid_argument("add_edge: endpoint out of range");
    Graph h = g;
    h.edges.push_back(e);
    return h;
}

Graph subdivide(const Graph& g, int edge) {
    if (edge < 0 || edge >= g.edge_count()) throw std::invalid_argument("subdivide: bad edge id");
    Graph h = g;
    int w = h.vertex_count++;
    auto [a, b] = h.edges[edge];
    h.edges[edge] = {a, w};
    h.edges.emplace_back(w, b);
    return h;
}

Graph contract(const Graph& g, int edge) {
    if (edge < 0 || edge >= g.edge_count()) throw std::invalid_argument("contract: bad edge id");
    auto [u, v] = g.edges[edge];
    Graph h;
    if (u == v) {
        // Contracting a loop just deletes it.
        h.vertex_count = g.vertex_count;
        for (int e = 0; e < g.edge_count(); ++e)
            if (e != edge) h.edges.push_back(g.edges[e]);
        return h;
    }
    int keep = std::min(u, v), gone = std::max(u, v);
    auto remap = [&](int x) {
        if (x == gone) x = keep;
        return x > gone ? x - 1 : x;
    };
    h.vertex_count = g.vertex_count - 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == edge) continue;
        h.edges.emplace_back(remap(g.edges[e].first), remap(g.edges[e].second));
    }
    return h;
}

// --- labeled edge operations ---------------------------------------------------

TransformOutcome add_edge_fold(const Graph& g, const EdgeLabeling& f, std::pair<int, int> new_edge,
                               bool allow_existing) {
    require_canonical(g, f, "add_edge_fold");
    auto [x, y] = new_edge;
    if (x < 0 || x >= g.vertex_count || y < 0 || y >= g.vertex_count)
        throw std::invalid_argument("add_edge_fold: endpoint out of range");
    if (!allow_existing)
        for (const auto& [a, b] : g.edges)
            if ((a == x && b == y) || (a == y && b == x))
                throw std::invalid_argument(
                    "add_edge_fold: edge already present (pass allow_existing for multigraphs)");

    int m = g.edge_count();
    std::int64_t s = edge_stretch(g, f);
    Graph h = add_edge(g, new_edge);

    std::int64_t p = std::numeric_limits<std::int64_t>::max(), q = 0;
    bool at_x = false, at_y = false;
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.edges[e];
        bool touches_x = a == x || b == x;
        bool touches_y = a == y || b == y;
        if (!touches_x && !touches_y) continue;
        at_x |= touches_x;
        at_y |= touches_y;
        p = std::min(p, f.labels[e]);
        q = std::max(q, f.labels[e]);
    }

    EdgeLabeling raw;
    raw.labels.resize(m + 1);
    std::int64_t bound;
    if (!at_x && !at_y) {
        // No incidences: append on top, nothing stretches.
        for (int e = 0; e < m; ++e) raw.labels[e] = f.labels[e];
        raw.labels[m] = m + 1;
        bound = s;
    } else if (!(at_x && at_y)) {
        // One touched endpoint: insert just above its least incident label.
        std::int64_t pivot = p;
        for (int e = 0; e < m; ++e)
            raw.labels[e] = f.labels[e] + (f.labels[e] > pivot ? 1 : 0);
        raw.labels[m] = pivot + 1;
        bound = s + 1;
    } else {
        // Fold the ordering at the midpoint of [p, q]; the new edge lands
        // just below both folded ends, at q - p.
        std::int64_t r = (p + q) / 2;
        for (int e = 0; e < m; ++e) {
            std::int64_t j = f.labels[e];
            if (r < j && j < q) raw.labels[e] = 2 * (j - r);
            else if (j >= q) raw.labels[e] = 2 * (j - r) + 1;
            else if (p < j && j <= r) raw.labels[e] = 2 * (r - j) + 1;
            else raw.labels[e] = 2 * (r - j) + 2;
        }
        raw.labels[m] = q - p;
        bound = std::max<std::int64_t>(2 * s + 1, 2);
    }
    return finish_outcome(std::move(h), std::move(raw), bound, "add_edge_fold");
}

TransformOutcome subdivide_lift(const Graph& g, const EdgeLabeling& f, int edge) {
    require_canonical(g, f, "subdivide_lift");
    if (edge < 0 || edge >= g.edge_count())
        throw std::invalid_argument("subdivide_lift: bad edge id");
    int m = g.edge_count();
    std::int64_t s = edge_stretch(g, f);
    std::int64_t pivot = f.labels[edge];

    Graph h = subdivide(g, edge);
    EdgeLabeling raw;
    raw.labels.resize(m + 1);
    for (int e = 0; e < m; ++e) raw.labels[e] = f.labels[e] + (f.labels[e] > pivot ? 1 : 0);
    raw.labels[edge] = pivot;      // replacement edge at the first endpoint
    raw.labels[m] = pivot + 1;     // replacement edge at the second endpoint
    return finish_outcome(std::move(h), std::move(raw), s + 1, "subdivide_lift");
}

TransformOutcome subdivision_collapse(const Graph& h, const EdgeLabeling& f, int e1, int e2) {
    require_canonical(h, f, "subdivision_collapse");
    int m = h.edge_count();
    if (e1 < 0 || e1 >= m || e2 < 0 || e2 >= m || e1 == e2)
        throw std::invalid_argument("subdivision_collapse: need two distinct edge ids");
    if (h.is_loop(e1) || h.is_loop(e2))
        throw std::invalid_argument("subdivision_collapse: loops cannot form a subdivision pair");

    auto [a1, b1] = h.edges[e1];
    auto [a2, b2] = h.edges[e2];
    int w = -1;
    for (int cand : {a1, b1}) {
        if ((cand == a2 || cand == b2) && h.degree(cand) == 2) w = std::max(w, cand);
    }
    if (w < 0)
        throw std::invalid_argument(
            "subdivision_collapse: edges must share a degree-2 vertex created by subdivision");

    std::int64_t s = edge_stretch(h, f);
    std::int64_t p = std::min(f.labels[e1], f.labels[e2]);
    std::int64_t q = std::max(f.labels[e1], f.labels[e2]);
    std::int64_t r = (p + q) / 2;

    int lo_edge = std::min(e1, e2), hi_edge = std::max(e1, e2);
    int end_a = other_endpoint(h, lo_edge, w), end_b = other_endpoint(h, hi_edge, w);
    auto remap_vertex = [&](int v) { return v > w ? v - 1 : v; };

    Graph g;
    g.vertex_count = h.vertex_count - 1;
    EdgeLabeling raw;
    for (int e = 0; e < m; ++e) {
        if (e == hi_edge) continue;
        if (e == lo_edge) {
            g.edges.emplace_back(remap_vertex(end_a), remap_vertex(end_b));
            raw.labels.push_back(r);
            continue;
        }
        auto [a, b] = h.edges[e];
        g.edges.emplace_back(remap_vertex(a), remap_vertex(b));
        std::int64_t j = f.labels[e];
        if (j < p || (r < j && j < q)) raw.labels.push_back(j);
        else raw.labels.push_back(j - 1);
    }
    return finish_outcome(std::move(g), std::move(raw), 3 * s / 2, "subdivision_collapse");
}

TransformOutcome contract_delete(const Graph& g, const EdgeLabeling& f, int edge) {
    require_canonical(g, f, "contract_delete");
    if (edge < 0 || edge >= g.edge_count())
        throw std::invalid_argument("contract_delete: bad edge id");
    std::int64_t s = edge_stretch(g, f);
    std::int64_t pivot = f.labels[edge];

    Graph h = contract(g, edge);
    EdgeLabeling raw;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == edge) continue;
        raw.labels.push_back(f.labels[e] - (f.labels[e] > pivot ? 1 : 0));
    }
    return finish_outcome(std::move(h), std::move(raw), std::max<std::int64_t>(2 * s - 1, 0),
                          "contract_delete");
}

TransformOutcome contract_insert(const Graph& g, int contracted_edge, const EdgeLabeling& f_on_h) {
    if (contracted_edge < 0 || contracted_edge >= g.edge_count())
        throw std::invalid_argument("contract_insert: bad edge id");
    Graph h = contract(g, contracted_edge);
    require_canonical(h, f_on_h, "contract_insert");
    std::int64_t s = edge_stretch(h, f_on_h);

    auto [u, v] = g.edges[contracted_edge];
    int w = std::min(u, v);  // merged vertex id in h (loop contraction keeps u)

    // h edge i corresponds to g edge (i < contracted_edge ? i : i + 1).
    std::int64_t pivot = -1;
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [a, b] = h.edges[e];
        if (a == w || b == w) pivot = pivot < 0 ? f_on_h.labels[e] : std::min(pivot, f_on_h.labels[e]);
    }

    EdgeLabeling raw;
    raw.labels.resize(g.edge_count());
    std::int64_t inserted = pivot < 0 ? h.edge_count() + 1 : pivot + 1;
    for (int e = 0; e < h.edge_count(); ++e) {
        int g_edge = e < contracted_edge ? e : e + 1;
        std::int64_t j = f_on_h.labels[e];
        raw.labels[g_edge] = pivot >= 0 && j > pivot ? j + 1 : j;
    }
    raw.labels[contracted_edge] = inserted;
    return finish_outcome(Graph(g), std::move(raw), s + 1, "contract_insert");
}

}  // namespace edgeband
