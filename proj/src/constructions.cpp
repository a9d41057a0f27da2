#include "edgeband/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace edgeband {

namespace {

// Turns an ordering of edge ids into labels (position in the order, from 1).
EdgeLabeling labels_from_order(int edge_count, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != edge_count)
        throw std::logic_error("construction ordering does not cover the edge set");
    EdgeLabeling f;
    f.labels.assign(edge_count, 0);
    for (int pos = 0; pos < edge_count; ++pos) f.labels[order[pos]] = pos + 1;
    return f;
}

ConstructionResult finish(const Graph& g, std::vector<int> order, std::int64_t claimed,
                          std::string name, bool upper_only = false) {
    ConstructionResult result;
    result.labeling = labels_from_order(g.edge_count(), order);
    result.claimed_value = claimed;
    result.formula_name = std::move(name);
    result.upper_bound_only = upper_only;
    std::int64_t achieved = edge_stretch(g, result.labeling);
    if (upper_only ? achieved > claimed : achieved != claimed) {
        std::ostringstream msg;
        msg << "construction " << result.formula_name << " self-check failed: achieved "
            << achieved << ", claimed " << claimed;
        throw std::logic_error(msg.str());
    }
    return result;
}

}  // namespace

ConstructionResult caterpillar_labeling(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    FamilySpec normalized = spec;
    switch (spec.kind) {
        case Kind::caterpillar: break;
        case Kind::star: normalized = FamilySpec::caterpillar({spec.n}); break;
        case Kind::double_star: normalized = FamilySpec::caterpillar({spec.n, spec.n}); break;
        case Kind::path:
            if (spec.n < 1) throw std::invalid_argument("caterpillar_labeling: path needs n >= 1");
            normalized = FamilySpec::caterpillar(std::vector<int>(spec.n, 0));
            break;
        default:
            throw std::invalid_argument("caterpillar_labeling: " + spec.to_string() +
                                        " is not a caterpillar family");
    }
    Graph g = generate(normalized);
    // The generator already walks the spine in labeling order.
    std::vector<int> order(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
    std::int64_t claimed = std::max(0, max_degree(g) - 1);
    return finish(g, std::move(order), claimed, "caterpillar:max_degree_minus_one");
}

ConstructionResult clique_labeling(int n) {
    if (n < 2) throw std::invalid_argument("clique_labeling: n must be >= 2");
    int h = (n + 1) / 2;  // size of the low half X = {1..h}; Y = {h+1..n}

    // Sequence of vertex pairs (1-based) in label order.
    std::vector<std::pair<int, int>> low, top_desc;
    std::vector<std::vector<bool>> placed(n + 1, std::vector<bool>(n + 1, false));
    auto place = [&](std::vector<std::pair<int, int>>& list, int a, int b) {
        placed[a][b] = placed[b][a] = true;
        list.emplace_back(std::min(a, b), std::max(a, b));
    };

    for (int b = 2; b <= h; ++b)
        for (int a = 1; a < b; ++a) place(low, a, b);
    for (int b = 2; b <= n - h; ++b)
        for (int a = 1; a < b; ++a) place(top_desc, n + 1 - a, n + 1 - b);

    // Cross edges: finish vertex h at the top of the gap, h+1 at the bottom,
    // then h-1 at the top, h+2 at the bottom, and so on inward.
    for (int step = 0;; ++step) {
        int x = h - step, y = h + 1 + step;
        bool any = false;
        if (x >= 1) {
            any = true;
            std::vector<std::pair<int, int>> group;
            for (int yy = h + 1; yy <= n; ++yy)
                if (!placed[x][yy]) group.emplace_back(x, yy);
            for (auto it = group.rbegin(); it != group.rend(); ++it) place(top_desc, it->first, it->second);
        }
        if (y <= n) {
            any = true;
            for (int xx = 1; xx <= h; ++xx)
                if (!placed[xx][y]) place(low, xx, y);
        }
        if (!any) break;
    }

    Graph g = generate(FamilySpec::complete(n));
    std::map<std::pair<int, int>, int> edge_id;
    for (int e = 0; e < g.edge_count(); ++e) edge_id[g.edges[e]] = e;

    std::vector<int> order;
    order.reserve(g.edge_count());
    for (const auto& [a, b] : low) order.push_back(edge_id.at({a - 1, b - 1}));
    for (auto it = top_desc.rbegin(); it != top_desc.rend(); ++it)
        order.push_back(edge_id.at({it->first - 1, it->second - 1}));

    std::int64_t claimed = static_cast<std::int64_t>(n) * n / 4 + (n + 1) / 2 - 2;
    return finish(g, std::move(order), claimed, "clique:n2over4_plus_halfn_minus_2");
}

ConstructionResult biclique_labeling(int n) {
    if (n < 1) throw std::invalid_argument("biclique_labeling: n must be >= 1");
    // Vertices interleaved as x1,y1,x2,y2,...; finishing a vertex from the
    // front places its edges to earlier vertices at the end of the prefix,
    // finishing from the back places its edges to later vertices at the
    // start of the suffix.  No edge is placed twice.
    std::vector<std::vector<bool>> placed(n + 1, std::vector<bool>(n + 1, false));
    std::vector<std::pair<int, int>> low, top_desc;  // (i, j) = edge x_i y_j

    auto front_finish = [&](int lpos) {  // lpos: 0-based position in the list
        bool is_x = lpos % 2 == 0;
        int idx = lpos / 2 + 1;
        if (is_x) {  // x_idx: earlier ys are y_1..y_{idx-1}
            for (int j = 1; j < idx; ++j)
                if (!placed[idx][j]) placed[idx][j] = true, low.emplace_back(idx, j);
        } else {  // y_idx: earlier xs are x_1..x_idx
            for (int i = 1; i <= idx; ++i)
                if (!placed[i][idx]) placed[i][idx] = true, low.emplace_back(i, idx);
        }
    };
    auto back_finish = [&](int lpos) {
        bool is_x = lpos % 2 == 0;
        int idx = lpos / 2 + 1;
        std::vector<std::pair<int, int>> group;
        if (is_x) {  // later ys are y_idx..y_n
            for (int j = idx; j <= n; ++j)
                if (!placed[idx][j]) placed[idx][j] = true, group.emplace_back(idx, j);
        } else {  // later xs are x_{idx+1}..x_n
            for (int i = idx + 1; i <= n; ++i)
                if (!placed[i][idx]) placed[i][idx] = true, group.emplace_back(i, idx);
        }
        for (auto it = group.rbegin(); it != group.rend(); ++it) top_desc.push_back(*it);
    };

    for (int step = 0; step < 2 * n; ++step) {
        front_finish(step);
        back_finish(2 * n - 1 - step);
    }

    Graph g = generate(FamilySpec::complete_bipartite(n, n));
    auto edge_id = [&](int i, int j) { return (i - 1) * n + (j - 1); };
    std::vector<int> order;
    order.reserve(g.edge_count());
    for (const auto& [i, j] : low) order.push_back(edge_id(i, j));
    for (auto it = top_desc.rbegin(); it != top_desc.rend(); ++it) order.push_back(edge_id(it->first, it->second));

    std::int64_t claimed = static_cast<std::int64_t>(n) * (n + 1) / 2 - 1;
    return finish(g, std::move(order), claimed, "biclique:choose_n_plus_1_2_minus_1");
}

namespace {

// Shared theta core.  `paths` lists each hub-to-hub path as its edge ids in
// order from hub u; lengths decide which of the three supported shapes
// applies.  Builds the ordering directly over the owning graph's edge ids.
ConstructionResult theta_order_from_paths(const Graph& g, const std::vector<std::vector<int>>& paths) {
    int m = static_cast<int>(paths.size());
    if (m < 2) throw std::invalid_argument("theta labeling needs at least two paths");

    std::vector<int> longs;  // indices of the length-3 (or length-2) paths
    int special = -1;        // index of the single short path
    int ones = 0, twos = 0, threes = 0;
    for (int i = 0; i < m; ++i) {
        switch (paths[i].size()) {
            case 1: ++ones; break;
            case 2: ++twos; break;
            case 3: ++threes; break;
            default: break;
        }
    }

    std::vector<int> order;
    std::int64_t claimed = 0;
    std::string name;
    bool upper_only = false;

    if (ones == 1 && threes == m - 1) {
        // One unit edge e, long paths (a_i, b_i, c_i).  Order: all a's, the
        // first half of the b's, e, the remaining b's, all c's.
        for (int i = 0; i < m; ++i)
            if (paths[i].size() == 1) special = i; else longs.push_back(i);
        int half = (m + 1) / 2;  // e goes right before b_half
        for (int i : longs) order.push_back(paths[i][0]);
        for (int j = 0; j < m - 1; ++j) {
            if (j == half - 1) order.push_back(paths[special][0]);
            order.push_back(paths[longs[j]][1]);
        }
        for (int i : longs) order.push_back(paths[i][2]);
        claimed = (3 * static_cast<std::int64_t>(m) - 2) / 2;  // ceil((3m-3)/2)
        name = "theta_1_3s:ceil_3m_minus_3_over_2";
    } else if (ones == 1 && twos == m - 1) {
        // One unit edge e, paths (a_i, b_i).  Order: a's, e, b's.
        for (int i = 0; i < m; ++i)
            if (paths[i].size() == 1) special = i; else longs.push_back(i);
        for (int i : longs) order.push_back(paths[i][0]);
        order.push_back(paths[special][0]);
        for (int i : longs) order.push_back(paths[i][1]);
        claimed = m;
        name = "theta_1_2s:upper_m";
        upper_only = true;
    } else if (twos == 1 && threes == m - 1) {
        // One path (d, e) of length 2.  Order: a's, d, b's, e, c's.
        for (int i = 0; i < m; ++i)
            if (paths[i].size() == 2) special = i; else longs.push_back(i);
        for (int i : longs) order.push_back(paths[i][0]);
        order.push_back(paths[special][0]);
        for (int i : longs) order.push_back(paths[i][1]);
        order.push_back(paths[special][1]);
        for (int i : longs) order.push_back(paths[i][2]);
        claimed = m;
        name = "theta_2_3s:upper_m";
        upper_only = true;
    } else {
        throw std::invalid_argument(
            "theta_labeling: only length lists {1,3,...,3}, {1,2,...,2}, {2,3,...,3} are supported");
    }
    return finish(g, std::move(order), claimed, std::move(name), upper_only);
}

}  // namespace

ConstructionResult theta_labeling(const FamilySpec& spec) {
    if (spec.kind != FamilySpec::Kind::theta)
        throw std::invalid_argument("theta_labeling: spec is not a theta family");
    Graph g = generate(spec);
    std::vector<std::vector<int>> paths;
    int next_edge = 0;
    for (int l : spec.lengths) {
        std::vector<int> path(l);
        for (int s = 0; s < l; ++s) path[s] = next_edge++;
        paths.push_back(std::move(path));
    }
    return theta_order_from_paths(g, paths);
}

// --- family recognition ------------------------------------------------------

namespace {

std::optional<ConstructionResult> try_complete(const Graph& g) {
    int n = g.vertex_count;
    long long want = static_cast<long long>(n) * (n - 1) / 2;
    if (n < 2 || g.edge_count() != want || !is_simple(g)) return std::nullopt;
    ConstructionResult base = clique_labeling(n);
    Graph canon = generate(FamilySpec::complete(n));
    std::map<std::pair<int, int>, std::int64_t> label_of;
    for (int e = 0; e < canon.edge_count(); ++e) label_of[canon.edges[e]] = base.labeling.labels[e];
    ConstructionResult out = base;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        out.labeling.labels[e] = label_of.at({std::min(a, b), std::max(a, b)});
    }
    return out;
}

std::optional<ConstructionResult> try_balanced_biclique(const Graph& g) {
    int n2 = g.vertex_count;
    if (n2 < 2 || n2 % 2 != 0 || !is_simple(g) || !is_connected(g)) return std::nullopt;
    int n = n2 / 2;
    if (g.edge_count() != n * n) return std::nullopt;
    // 2-color; any odd cycle disqualifies.
    std::vector<int> color(n2, -1);
    std::vector<int> stack = {0};
    color[0] = 0;
    auto at = incidence_lists(g);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : at[v]) {
            int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                stack.push_back(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;
            }
        }
    }
    std::vector<int> side[2];
    for (int v = 0; v < n2; ++v) side[color[v]].push_back(v);
    if (static_cast<int>(side[0].size()) != n) return std::nullopt;
    // m == n^2 with balanced sides and no parallels forces completeness.
    std::vector<int> index(n2, -1);
    for (int i = 0; i < n; ++i) index[side[0][i]] = i + 1, index[side[1][i]] = i + 1;

    ConstructionResult base = biclique_labeling(n);
    ConstructionResult out = base;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        int i = color[a] == 0 ? index[a] : index[b];
        int j = color[a] == 0 ? index[b] : index[a];
        out.labeling.labels[e] = base.labeling.labels[(i - 1) * n + (j - 1)];
    }
    return out;
}

std::optional<ConstructionResult> try_caterpillar(const Graph& g) {
    if (!is_tree(g) || !is_simple(g)) return std::nullopt;
    int n = g.vertex_count;
    auto at = incidence_lists(g);

    std::vector<int> non_leaves;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 2) non_leaves.push_back(v);

    ConstructionResult out;
    std::vector<int> spine;
    if (non_leaves.empty()) {
        if (n > 2) return std::nullopt;  // cannot happen in a tree
        spine = {0};
    } else {
        // The non-leaves of a caterpillar form a path.
        std::vector<int> inner_deg(n, 0);
        std::vector<bool> is_inner(n, false);
        for (int v : non_leaves) is_inner[v] = true;
        for (const auto& [a, b] : g.edges)
            if (is_inner[a] && is_inner[b]) inner_deg[a]++, inner_deg[b]++;
        int ends = 0, start = -1;
        for (int v : non_leaves) {
            if (inner_deg[v] > 2) return std::nullopt;
            if (inner_deg[v] <= 1 && start < 0) start = v;
            if (inner_deg[v] <= 1) ++ends;
        }
        if (ends > 2) return std::nullopt;
        // Walk the inner path from the lower-id end.
        for (int v : non_leaves)
            if (inner_deg[v] <= 1 && v < start) start = v;
        std::vector<bool> used(n, false);
        int cur = start;
        while (cur >= 0) {
            spine.push_back(cur);
            used[cur] = true;
            int next = -1;
            for (int e : at[cur]) {
                int w = g.edges[e].first == cur ? g.edges[e].second : g.edges[e].first;
                if (is_inner[w] && !used[w]) {
                    next = w;
                    break;
                }
            }
            cur = next;
        }
        if (spine.size() != non_leaves.size()) return std::nullopt;
    }

    std::vector<int> order;
    std::vector<bool> is_spine(n, false);
    for (int v : spine) is_spine[v] = true;
    for (std::size_t i = 0; i < spine.size(); ++i) {
        int v = spine[i];
        for (int e : at[v]) {
            int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
            if (!is_spine[w]) order.push_back(e);
        }
        if (i + 1 < spine.size()) {
            for (int e : at[v]) {
                int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
                if (w == spine[i + 1]) order.push_back(e);
            }
        }
    }
    if (static_cast<int>(order.size()) != g.edge_count()) return std::nullopt;
    std::int64_t claimed = std::max(0, max_degree(g) - 1);
    return finish(g, std::move(order), claimed, "caterpillar:max_degree_minus_one");
}

std::optional<ConstructionResult> try_theta(const Graph& g) {
    if (!is_connected(g) || g.vertex_count < 2) return std::nullopt;
    int hub_a = -1, hub_b = -1;
    for (int v = 0; v < g.vertex_count; ++v) {
        int d = g.degree(v);
        if (d == 2) continue;
        if (d < 2) return std::nullopt;
        if (hub_a < 0) hub_a = v;
        else if (hub_b < 0) hub_b = v;
        else return std::nullopt;
    }
    if (hub_a < 0 || hub_b < 0) return std::nullopt;  // cycles have no hubs
    if (g.degree(hub_a) != g.degree(hub_b)) return std::nullopt;

    auto at = incidence_lists(g);
    std::vector<bool> edge_used(g.edge_count(), false);
    std::vector<std::vector<int>> paths;
    for (int e0 : at[hub_a]) {
        if (edge_used[e0]) continue;
        std::vector<int> path;
        int prev = hub_a, e = e0;
        while (true) {
            if (edge_used[e]) return std::nullopt;
            edge_used[e] = true;
            path.push_back(e);
            int w = g.edges[e].first == prev ? g.edges[e].second : g.edges[e].first;
            if (w == hub_b) break;
            if (w == hub_a || g.degree(w) != 2) return std::nullopt;
            int next = -1;
            for (int e2 : at[w])
                if (e2 != e) next = e2;
            prev = w;
            e = next;
        }
        paths.push_back(std::move(path));
    }
    for (bool used : edge_used)
        if (!used) return std::nullopt;
    try {
        return theta_order_from_paths(g, paths);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<ConstructionResult> recognized_family_labeling(const Graph& g) {
    if (g.edge_count() == 0) return std::nullopt;
    if (auto r = try_complete(g)) return r;
    if (auto r = try_balanced_biclique(g)) return r;
    if (auto r = try_caterpillar(g)) return r;
    if (auto r = try_theta(g)) return r;
    return std::nullopt;
}

}  // namespace edgeband
