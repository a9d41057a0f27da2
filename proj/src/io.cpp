#include "edgeband/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace edgeband {

using nlohmann::json;

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (const auto& [a, b] : g.edges) out << "e " << a << ' ' << b << '\n';
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(const char* what, std::size_t line_no, const std::string& detail) {
    std::ostringstream msg;
    msg << what << ": line " << line_no << ": " << detail;
    throw std::invalid_argument(msg.str());
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "p") {
            if (n >= 0) parse_fail("parse_edge_list", line_no, "duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                parse_fail("parse_edge_list", line_no, "malformed header");
        } else if (tag == "e") {
            if (n < 0) parse_fail("parse_edge_list", line_no, "edge before header");
            long long a, b;
            if (!(ls >> a >> b)) parse_fail("parse_edge_list", line_no, "malformed edge");
            if (a < 0 || a >= n || b < 0 || b >= n)
                parse_fail("parse_edge_list", line_no,
                           "endpoint out of range 0.." + std::to_string(n - 1));
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        } else {
            parse_fail("parse_edge_list", line_no, "unknown record '" + tag + "'");
        }
    }
    if (n < 0) throw std::invalid_argument("parse_edge_list: missing 'p' header");
    if (static_cast<long long>(edges.size()) != m)
        throw std::invalid_argument("parse_edge_list: header announces " + std::to_string(m) +
                                    " edges, file has " + std::to_string(edges.size()));
    return Graph{static_cast<int>(n), std::move(edges)};
}

MatrixPatternResult parse_matrix_pattern(const std::string& text,
                                         const MatrixPatternOptions& options) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw std::invalid_argument("parse_matrix_pattern: empty input");
    ++line_no;
    {
        std::istringstream hs(line);
        std::string banner, object, format, field, symmetry;
        hs >> banner >> object >> format >> field >> symmetry;
        if (banner != "%%MatrixMarket" || object != "matrix" || format != "coordinate")
            parse_fail("parse_matrix_pattern", line_no, "not a coordinate MatrixMarket header");
        if (field != "pattern")
            parse_fail("parse_matrix_pattern", line_no, "only pattern matrices are supported");
        if (symmetry != "symmetric")
            parse_fail("parse_matrix_pattern", line_no, "only symmetric patterns are supported");
    }

    long long rows = -1, cols = -1, nnz = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream ds(line);
        if (!(ds >> rows >> cols >> nnz)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            parse_fail("parse_matrix_pattern", line_no, "malformed size line");
        }
        break;
    }
    if (rows < 0) throw std::invalid_argument("parse_matrix_pattern: missing size line");
    if (rows != cols) throw std::invalid_argument("parse_matrix_pattern: matrix is not square");

    MatrixPatternResult result;
    result.graph.vertex_count = static_cast<int>(rows);
    std::set<std::pair<int, int>> seen;
    long long read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream es(line);
        long long i, j;
        if (!(es >> i >> j)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            parse_fail("parse_matrix_pattern", line_no, "malformed entry");
        }
        ++read;
        if (i < 1 || i > rows || j < 1 || j > cols)
            parse_fail("parse_matrix_pattern", line_no, "entry out of range");
        int a = static_cast<int>(i) - 1, b = static_cast<int>(j) - 1;
        if (a == b && !options.keep_loops) {
            ++result.dropped_diagonal;
            continue;
        }
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        if (!seen.insert(key).second) {
            ++result.duplicate_entries;
            if (!options.multigraph) continue;
        }
        result.graph.edges.emplace_back(a, b);
    }
    if (read != nnz)
        throw std::invalid_argument("parse_matrix_pattern: size line announces " +
                                    std::to_string(nnz) + " entries, file has " +
                                    std::to_string(read));
    return result;
}

std::string write_matrix_pattern(const Graph& g) {
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    out << g.vertex_count << ' ' << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (const auto& [a, b] : g.edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

PermutationProfile permute_matrix(const Graph& g, const VertexLabeling& gl) {
    if (gl.labels.size() != static_cast<std::size_t>(g.vertex_count))
        throw std::invalid_argument("permute_matrix: labeling size mismatch");
    PermutationProfile profile;
    profile.permutation.assign(g.vertex_count, -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        std::int64_t l = gl.labels[v];
        if (l < 1 || l > g.vertex_count || profile.permutation[l - 1] != -1)
            throw std::invalid_argument("permute_matrix: labeling must be a bijection onto 1..n");
        profile.permutation[l - 1] = v;
    }
    profile.band = vertex_stretch(g, gl);
    return profile;
}

// --- JSON ----------------------------------------------------------------

namespace {

json graph_payload(const Graph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges) edges.push_back({a, b});
    return json{{"vertex_count", g.vertex_count}, {"edges", edges}};
}

json labeling_payload(const Graph& g, const EdgeLabeling& f) {
    return json{{"kind", "edge"}, {"labels", f.labels}, {"stretch", edge_stretch(g, f)}};
}

json labeling_payload(const Graph& g, const VertexLabeling& gl) {
    return json{{"kind", "vertex"}, {"labels", gl.labels}, {"stretch", vertex_stretch(g, gl)}};
}

}  // namespace

std::string graph_json(const Graph& g) { return graph_payload(g).dump(); }

std::string labeling_json(const Graph& g, const EdgeLabeling& f) {
    return labeling_payload(g, f).dump();
}

std::string labeling_json(const Graph& g, const VertexLabeling& gl) {
    return labeling_payload(g, gl).dump();
}

std::string bound_report_json(const BoundReport& report) {
    json certificates;
    certificates["degree"] = {{"vertex", report.degree.vertex}};
    if (!report.star_skipped) certificates["star"] = {{"edge", report.star.edge}};
    certificates["density"] = {{"edges", report.density.subgraph_edges}};
    if (!report.boundary.skipped)
        certificates["boundary"] = {{"k", report.boundary.k}, {"subset", report.boundary.subset}};
    json out{{"degree", report.degree.value},
             {"density", report.density.value},
             {"overall", report.overall},
             {"certificates", certificates}};
    if (report.star_skipped) out["star"] = "skipped";
    else out["star"] = report.star.value;
    if (report.boundary.skipped) out["boundary"] = "skipped";
    else out["boundary"] = report.boundary.value;
    return out.dump();
}

std::string transform_outcome_json(const TransformOutcome& outcome) {
    json out{{"graph", graph_payload(outcome.graph)},
             {"labeling", labeling_payload(outcome.graph, outcome.labeling)},
             {"raw_labels", outcome.raw_labeling.labels},
             {"guaranteed_bound", outcome.guaranteed_bound},
             {"achieved", outcome.achieved}};
    return out.dump();
}

std::string forest_labeling_json(const Graph& g, const ForestEdgeLabeling& out) {
    json payload{{"labeling", labeling_payload(g, out.labeling)},
                 {"raw_labels", out.raw_labeling.labels},
                 {"forest_count", out.forest_count},
                 {"guaranteed_bound", out.guaranteed_bound}};
    return payload.dump();
}

namespace {

json solver_payload(const char* kind, bool solved, std::int64_t value, std::int64_t lower,
                    std::int64_t upper, long long nodes, const std::vector<std::int64_t>& labels,
                    std::int64_t stretch) {
    return json{{"kind", kind},     {"solved", solved}, {"value", value},
                {"lower_bound", lower}, {"upper_bound", upper}, {"nodes", nodes},
                {"labels", labels}, {"stretch", stretch}};
}

}  // namespace

std::string solver_result_json(const Graph& g, const EdgeBandwidthResult& result) {
    return solver_payload("edge", result.solved, result.value, result.lower_bound,
                          result.upper_bound, result.nodes, result.labeling.labels,
                          edge_stretch(g, result.labeling))
        .dump();
}

std::string solver_result_json(const Graph& g, const BandwidthResult& result) {
    return solver_payload("vertex", result.solved, result.value, result.lower_bound,
                          result.upper_bound, result.nodes, result.labeling.labels,
                          vertex_stretch(g, result.labeling))
        .dump();
}

}  // namespace edgeband
