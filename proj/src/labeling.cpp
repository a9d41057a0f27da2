#include "edgeband/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace edgeband {

bool labels_distinct(const std::vector<std::int64_t>& labels) {
    std::vector<std::int64_t> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

void require_valid(const std::vector<std::int64_t>& labels, std::size_t expected, const char* what) {
    if (labels.size() != expected) {
        std::ostringstream msg;
        msg << what << ": expected " << expected << " labels, got " << labels.size();
        throw std::invalid_argument(msg.str());
    }
    if (!labels_distinct(labels)) throw std::invalid_argument(std::string(what) + ": duplicate labels");
}

std::vector<std::int64_t> rank_map(const std::vector<std::int64_t>& labels) {
    std::vector<std::int64_t> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int64_t> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), labels[i]);
        out[i] = static_cast<std::int64_t>(it - sorted.begin()) + 1;
    }
    return out;
}

}  // namespace

std::int64_t edge_stretch(const Graph& g, const EdgeLabeling& f) {
    require_valid(f.labels, static_cast<std::size_t>(g.edge_count()), "edge_stretch");
    // Two edges are incident iff they share some vertex, so the maximum
    // incident difference is the max over vertices of (max - min) label
    // among the edges at that vertex.
    std::int64_t best = 0;
    auto at = incidence_lists(g);
    for (const auto& list : at) {
        if (list.size() < 2) continue;
        std::int64_t lo = f.labels[list[0]], hi = lo;
        for (int e : list) {
            lo = std::min(lo, f.labels[e]);
            hi = std::max(hi, f.labels[e]);
        }
        best = std::max(best, hi - lo);
    }
    return best;
}

std::int64_t vertex_stretch(const Graph& g, const VertexLabeling& gl) {
    require_valid(gl.labels, static_cast<std::size_t>(g.vertex_count), "vertex_stretch");
    std::int64_t best = 0;
    for (const auto& [a, b] : g.edges) {
        std::int64_t d = gl.labels[a] - gl.labels[b];
        best = std::max(best, d < 0 ? -d : d);
    }
    return best;
}

EdgeLabeling canonicalize(const EdgeLabeling& f) {
    if (!labels_distinct(f.labels)) throw std::invalid_argument("canonicalize: duplicate labels");
    return EdgeLabeling{rank_map(f.labels)};
}

VertexLabeling canonicalize(const VertexLabeling& gl) {
    if (!labels_distinct(gl.labels)) throw std::invalid_argument("canonicalize: duplicate labels");
    return VertexLabeling{rank_map(gl.labels)};
}

EdgeLabeling identity_edge_labeling(int edge_count) {
    EdgeLabeling f;
    f.labels.resize(edge_count);
    std::iota(f.labels.begin(), f.labels.end(), 1);
    return f;
}

VertexLabeling identity_vertex_labeling(int vertex_count) {
    VertexLabeling gl;
    gl.labels.resize(vertex_count);
    std::iota(gl.labels.begin(), gl.labels.end(), 1);
    return gl;
}

std::string write_labels(const std::vector<std::int64_t>& labels) {
    std::ostringstream out;
    for (std::size_t i = 0; i < labels.size(); ++i) out << i << ' ' << labels[i] << '\n';
    return out.str();
}

std::vector<std::int64_t> parse_labels(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::size_t, std::int64_t>> entries;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::size_t idx;
        std::int64_t label;
        if (!(ls >> idx)) continue;  // blank or comment-only line
        if (!(ls >> label)) {
            std::ostringstream msg;
            msg << "parse_labels: malformed line " << line_no;
            throw std::invalid_argument(msg.str());
        }
        entries.emplace_back(idx, label);
    }
    std::vector<std::int64_t> labels(entries.size());
    std::vector<bool> seen(entries.size(), false);
    for (const auto& [idx, label] : entries) {
        if (idx >= labels.size() || seen[idx])
            throw std::invalid_argument("parse_labels: indices must cover 0..k-1 exactly once");
        labels[idx] = label;
        seen[idx] = true;
    }
    return labels;
}

}  // namespace edgeband
