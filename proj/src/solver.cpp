#include "edgeband/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "edgeband/bounds.hpp"
#include "edgeband/constructions.hpp"

namespace edgeband {

namespace {

constexpr int kMaskCap = 30;

std::int64_t eval_stretch(const Graph& g, const std::vector<std::int64_t>& labels) {
    std::int64_t best = 0;
    for (const auto& [a, b] : g.edges) {
        std::int64_t d = labels[a] - labels[b];
        best = std::max(best, d < 0 ? -d : d);
    }
    return best;
}

// Decision search: is there a left-to-right placement with stretch <= k that
// respects the preassigned positions (0 = free)?  Placements are explored
// position by position, candidates in ascending vertex order, so the first
// witness found is deterministic.
class PlacementSearch {
  public:
    PlacementSearch(const Graph& g, int k, const std::vector<int>& preassigned,
                    bool symmetry_break, std::chrono::steady_clock::time_point deadline,
                    bool has_deadline)
        : n_(g.vertex_count),
          k_(k),
          pre_(preassigned),
          symmetry_break_(symmetry_break),
          deadline_(deadline),
          has_deadline_(has_deadline) {
        adj_.assign(n_, 0);
        for (const auto& [a, b] : g.edges) {
            if (a == b) continue;
            adj_[a] |= 1u << b;
            adj_[b] |= 1u << a;
        }
        pre_at_.assign(n_ + 1, -1);
        for (int v = 0; v < n_; ++v)
            if (pre_[v] > 0) pre_at_[pre_[v]] = v;
        pos_.assign(n_, 0);
    }

    bool run() { return dfs(1); }

    bool timed_out() const { return timed_out_; }
    long long nodes() const { return nodes_; }
    const std::vector<int>& positions() const { return pos_; }

  private:
    bool dfs(int t) {
        if (t > n_) return true;
        if (((++nodes_) & 0xfff) == 0 && has_deadline_ &&
            std::chrono::steady_clock::now() > deadline_) {
            timed_out_ = true;
            return false;
        }
        if (symmetry_break_ && !(placed_ & 1u) && t > (n_ + 1) / 2) return false;

        int forced = pre_at_[t];
        for (int v = forced >= 0 ? forced : 0; v < n_; ++v) {
            if (forced >= 0 && v != forced) break;
            if (placed_ & (1u << v)) continue;
            if (forced < 0 && pre_[v] > 0) continue;
            if (!admissible(v, t)) continue;

            pos_[v] = t;
            placed_ |= 1u << v;
            if (deadlines_hold(t) && dfs(t + 1)) return true;
            placed_ &= ~(1u << v);
            pos_[v] = 0;
            if (timed_out_) return false;
        }
        return false;
    }

    bool admissible(int v, int t) const {
        std::uint32_t placed_nbrs = adj_[v] & placed_;
        while (placed_nbrs) {
            int u = std::countr_zero(placed_nbrs);
            placed_nbrs &= placed_nbrs - 1;
            if (t - pos_[u] > k_) return false;
        }
        std::uint32_t future_pre = adj_[v] & ~placed_;
        while (future_pre) {
            int w = std::countr_zero(future_pre);
            future_pre &= future_pre - 1;
            if (pre_[w] > 0 && pre_[w] - t > k_) return false;
        }
        return true;
    }

    // Every placed vertex with unplaced neighbors imposes the deadline
    // pos+k on all of them, and an unplaced preassigned vertex must land
    // exactly on its slot.  Positions t+1..D can host at most D-t vertices,
    // so the union of everything due by D must fit.
    bool deadlines_hold(int t) const {
        struct Entry {
            int deadline;
            std::uint32_t need;
        };
        Entry entries[kMaskCap + kMaskCap];
        int count = 0;
        std::uint32_t bits = placed_;
        while (bits) {
            int u = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint32_t unplaced = adj_[u] & ~placed_;
            if (!unplaced) continue;
            int deadline = pos_[u] + k_;
            if (deadline >= n_) continue;
            if (deadline <= t) return false;
            entries[count++] = Entry{deadline, unplaced};
        }
        std::uint32_t free_pre = ~placed_;
        while (free_pre) {
            int w = std::countr_zero(free_pre);
            if (w >= n_) break;
            free_pre &= free_pre - 1;
            if (pre_[w] > 0) entries[count++] = Entry{pre_[w], 1u << w};
        }
        if (count == 0) return true;
        std::sort(entries, entries + count,
                  [](const Entry& a, const Entry& b) { return a.deadline < b.deadline; });
        std::uint32_t cum = 0;
        for (int i = 0; i < count; ++i) {
            cum |= entries[i].need;
            int deadline = entries[i].deadline;
            if (i + 1 < count && entries[i + 1].deadline == deadline) continue;
            if (std::popcount(cum) > deadline - t) return false;
        }
        return true;
    }

    int n_, k_;
    const std::vector<int>& pre_;
    bool symmetry_break_;
    std::chrono::steady_clock::time_point deadline_;
    bool has_deadline_;
    std::vector<std::uint32_t> adj_;
    std::vector<int> pre_at_;
    std::vector<int> pos_;
    std::uint32_t placed_ = 0;
    long long nodes_ = 0;
    bool timed_out_ = false;
};

struct Clock {
    std::chrono::steady_clock::time_point deadline{};
    bool limited = false;

    static Clock start(const SolverConfig& cfg) {
        Clock c;
        if (cfg.time_budget_seconds) {
            c.limited = true;
            c.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(*cfg.time_budget_seconds));
        }
        return c;
    }
    bool expired() const { return limited && std::chrono::steady_clock::now() > deadline; }
};

// Breadth-first ordering from a minimum-degree vertex of each component;
// always a valid labeling, used as the fallback incumbent.
VertexLabeling bfs_labeling(const Graph& g) {
    int n = g.vertex_count;
    auto at = incidence_lists(g);
    std::vector<std::int64_t> labels(n, 0);
    std::vector<bool> seen(n, false);
    std::int64_t next = 1;
    for (const auto& comp : components(g)) {
        int start = comp[0];
        for (int v : comp)
            if (g.degree(v) < g.degree(start)) start = v;
        std::queue<int> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            labels[v] = next++;
            std::vector<int> nbrs;
            for (int e : at[v]) {
                int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
                if (!seen[w]) {
                    seen[w] = true;
                    nbrs.push_back(w);
                }
            }
            std::sort(nbrs.begin(), nbrs.end());
            for (int w : nbrs) q.push(w);
        }
    }
    return VertexLabeling{std::move(labels)};
}

std::int64_t cheap_lower_bound(const Graph& g) {
    std::int64_t lb = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        int cnt = 0;
        std::vector<bool> seen(g.vertex_count, false);
        for (const auto& [a, b] : g.edges) {
            int w = -1;
            if (a == v && b != v) w = b;
            if (b == v && a != v) w = a;
            if (w >= 0 && !seen[w]) {
                seen[w] = true;
                ++cnt;
            }
        }
        lb = std::max(lb, static_cast<std::int64_t>((cnt + 1) / 2));
    }
    for (const auto& comp : components(g)) {
        if (comp.size() < 2) continue;
        // density of the component: (|C|-1)/diam
        std::vector<int> ids = comp;
        std::vector<int> new_id(g.vertex_count, -1);
        for (std::size_t i = 0; i < ids.size(); ++i) new_id[ids[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        for (const auto& [a, b] : g.edges)
            if (new_id[a] >= 0 && new_id[b] >= 0) edges.emplace_back(new_id[a], new_id[b]);
        Graph sub{static_cast<int>(ids.size()), std::move(edges)};
        if (sub.edge_count() == 0) continue;
        int d = diameter(sub);
        if (d > 0)
            lb = std::max(lb, (static_cast<std::int64_t>(ids.size()) - 1 + d - 1) / d);
    }
    return lb;
}

struct ProbeResult {
    bool feasible = false;
    bool timed_out = false;
    VertexLabeling labeling;
    long long nodes = 0;
};

ProbeResult probe(const Graph& g, std::int64_t k, const Clock& clock) {
    std::vector<int> no_pre(g.vertex_count, 0);
    PlacementSearch search(g, static_cast<int>(std::min<std::int64_t>(k, g.vertex_count)), no_pre,
                           true, clock.deadline, clock.limited);
    ProbeResult out;
    out.feasible = search.run();
    out.timed_out = search.timed_out();
    out.nodes = search.nodes();
    if (out.feasible) {
        out.labeling.labels.assign(g.vertex_count, 0);
        for (int v = 0; v < g.vertex_count; ++v) out.labeling.labels[v] = search.positions()[v];
    }
    return out;
}

// Lexicographically least labeling of stretch <= k, fixing labels vertex by
// vertex.  k must be feasible.
struct LexResult {
    bool complete = false;
    VertexLabeling labeling;
    long long nodes = 0;
};

LexResult lex_min_labeling(const Graph& g, std::int64_t k, const Clock& clock) {
    int n = g.vertex_count;
    LexResult out;
    std::vector<int> pre(n, 0);
    std::vector<bool> label_used(n + 1, false);
    for (int v = 0; v < n; ++v) {
        bool fixed = false;
        for (int label = 1; label <= n && !fixed; ++label) {
            if (label_used[label]) continue;
            pre[v] = label;
            PlacementSearch search(g, static_cast<int>(std::min<std::int64_t>(k, n)), pre, false,
                                   clock.deadline, clock.limited);
            bool ok = search.run();
            out.nodes += search.nodes();
            if (search.timed_out()) return out;
            if (ok) {
                label_used[label] = true;
                fixed = true;
            } else {
                pre[v] = 0;
            }
        }
        if (!fixed) throw std::logic_error("lex_min_labeling: no admissible label at a feasible bound");
    }
    out.complete = true;
    out.labeling.labels.assign(pre.begin(), pre.end());
    return out;
}

BandwidthResult exact_bandwidth_impl(const Graph& g, const SolverConfig& cfg,
                                     std::int64_t external_lb,
                                     const std::optional<VertexLabeling>& extra_seed) {
    if (cfg.vertex_budget <= 0 || cfg.vertex_budget > kMaskCap)
        throw std::invalid_argument("exact_bandwidth: vertex_budget must be in 1..30");
    if (cfg.time_budget_seconds && *cfg.time_budget_seconds <= 0)
        throw std::invalid_argument("exact_bandwidth: time budget must be positive");

    int n = g.vertex_count;
    BandwidthResult result;
    if (n == 0) {
        result.solved = true;
        return result;
    }

    std::int64_t lb = std::max(external_lb, cheap_lower_bound(g));
    VertexLabeling incumbent = bfs_labeling(g);
    std::int64_t ub = eval_stretch(g, incumbent.labels);
    for (const auto& seed : {extra_seed, cfg.seed_labeling}) {
        if (!seed) continue;
        if (seed->labels.size() != static_cast<std::size_t>(n) || !labels_distinct(seed->labels))
            continue;
        VertexLabeling canon = canonicalize(*seed);
        std::int64_t s = eval_stretch(g, canon.labels);
        if (s < ub) {
            ub = s;
            incumbent = std::move(canon);
        }
    }

    if (n > cfg.vertex_budget) {
        result.solved = false;
        result.lower_bound = lb;
        result.upper_bound = ub;
        result.value = ub;
        result.labeling = incumbent;
        return result;
    }

    Clock clock = Clock::start(cfg);
    auto give_up = [&](std::int64_t lo, std::int64_t hi) {
        result.solved = false;
        result.lower_bound = lo;
        result.upper_bound = hi;
        result.value = hi;
        result.labeling = incumbent;
        return result;
    };

    std::int64_t lo = lb, hi = ub;
    if (cfg.seed_upper_bound && *cfg.seed_upper_bound >= lo && *cfg.seed_upper_bound < hi) {
        ProbeResult p = probe(g, *cfg.seed_upper_bound, clock);
        result.nodes += p.nodes;
        if (p.timed_out) return give_up(lo, hi);
        if (p.feasible) {
            hi = *cfg.seed_upper_bound;
            incumbent = p.labeling;
        } else {
            lo = *cfg.seed_upper_bound + 1;
        }
    }
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        ProbeResult p = probe(g, mid, clock);
        result.nodes += p.nodes;
        if (p.timed_out) return give_up(lo, hi);
        if (p.feasible) {
            hi = mid;
            incumbent = p.labeling;
        } else {
            lo = mid + 1;
        }
    }

    result.solved = true;
    result.value = hi;
    result.lower_bound = hi;
    result.upper_bound = hi;

    LexResult lex = lex_min_labeling(g, hi, clock);
    result.nodes += lex.nodes;
    result.labeling = lex.complete ? lex.labeling : incumbent;
    return result;
}

}  // namespace

std::pair<std::int64_t, VertexLabeling> brute_force_bandwidth(const Graph& g) {
    int n = g.vertex_count;
    if (n > 9) throw std::invalid_argument("brute_force_bandwidth: more than 9 vertices");
    std::vector<std::int64_t> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<std::int64_t> best_labels = labels;
    std::int64_t best = eval_stretch(g, labels);
    while (std::next_permutation(labels.begin(), labels.end())) {
        std::int64_t s = eval_stretch(g, labels);
        if (s < best) {
            best = s;
            best_labels = labels;
        }
    }
    return {best, VertexLabeling{std::move(best_labels)}};
}

BandwidthResult exact_bandwidth(const Graph& g, const SolverConfig& cfg) {
    return exact_bandwidth_impl(g, cfg, 0, std::nullopt);
}

EdgeBandwidthResult exact_edge_bandwidth(const Graph& g, const SolverConfig& cfg) {
    LineGraphResult lg = line_graph(g);
    const std::vector<int>& map = lg.edge_to_vertex;

    // Light bound set: the exhaustive density enumeration is too costly to
    // run per solve, and the boundary enumeration only pays for itself on
    // instances big enough that search-based refutation gets expensive.
    std::int64_t lb = 0;
    if (g.edge_count() <= 64) {
        int boundary_budget = g.edge_count() >= 13 ? 16 : 0;
        lb = lower_bound_report(g, BoundBudgets{0, boundary_budget}).overall;
    }

    std::optional<VertexLabeling> seed;
    if (auto family = recognized_family_labeling(g)) {
        VertexLabeling on_line;
        on_line.labels.assign(g.edge_count(), 0);
        for (int e = 0; e < g.edge_count(); ++e)
            on_line.labels[map[e]] = family->labeling.labels[e];
        seed = std::move(on_line);
    }

    BandwidthResult inner = exact_bandwidth_impl(lg.graph, cfg, lb, seed);

    EdgeBandwidthResult result;
    result.solved = inner.solved;
    result.value = inner.value;
    result.lower_bound = inner.lower_bound;
    result.upper_bound = inner.upper_bound;
    result.nodes = inner.nodes;
    result.labeling.labels.assign(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        result.labeling.labels[e] = inner.labeling.labels[map[e]];
    if (inner.solved && edge_stretch(g, result.labeling) != result.value)
        throw std::logic_error("exact_edge_bandwidth: certificate does not evaluate to the optimum");
    return result;
}

}  // namespace edgeband
