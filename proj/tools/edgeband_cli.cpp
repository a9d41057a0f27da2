// Command-line front end: exact bandwidth / edge-bandwidth, lower bounds,
// closed-form family labelings, labeled edge operations, sparse-pattern
// permutation, and the cross-module verification sweep.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "edgeband/bounds.hpp"
#include "edgeband/constructions.hpp"
#include "edgeband/io.hpp"
#include "edgeband/solver.hpp"
#include "edgeband/sweep.hpp"
#include "edgeband/transforms.hpp"

namespace {

using namespace edgeband;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload << '\n';
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + output_path);
    out << payload << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

FamilySpec parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("family spec must look like name:params (got '" + text + "')");
    std::string name = text.substr(0, colon);
    std::string params = text.substr(colon + 1);
    if (name == "path") return FamilySpec::path(std::stoi(params));
    if (name == "cycle") return FamilySpec::cycle(std::stoi(params));
    if (name == "star") return FamilySpec::star(std::stoi(params));
    if (name == "clique" || name == "complete") return FamilySpec::complete(std::stoi(params));
    if (name == "double_star") return FamilySpec::double_star(std::stoi(params));
    if (name == "biclique") {
        int n = std::stoi(params);
        return FamilySpec::complete_bipartite(n, n);
    }
    if (name == "complete_bipartite") {
        auto sides = parse_int_list(params);
        if (sides.size() != 2) throw std::runtime_error("complete_bipartite needs a,b");
        return FamilySpec::complete_bipartite(sides[0], sides[1]);
    }
    if (name == "caterpillar") return FamilySpec::caterpillar(parse_int_list(params));
    if (name == "theta") return FamilySpec::theta(parse_int_list(params));
    throw std::runtime_error("unknown family '" + name + "'");
}

struct GraphInput {
    std::string input_path;
    std::string family;
    bool matrix = false;
    bool keep_loops = false;
    bool multigraph = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input_path, "edge-list file (or MatrixMarket with --matrix)");
        cmd->add_option("--family", family, "generate a family, e.g. clique:8 or theta:1,3,3,3");
        cmd->add_flag("--matrix", matrix, "treat --input as MatrixMarket coordinate pattern");
        cmd->add_flag("--loops", keep_loops, "keep diagonal entries as loops (matrix input)");
        cmd->add_flag("--multigraph", multigraph, "keep duplicate entries as parallel edges");
    }

    Graph load() const {
        if (input_path.empty() == family.empty())
            throw std::runtime_error("need exactly one of --input and --family");
        if (!family.empty()) return generate(parse_family(family));
        std::string text = slurp(input_path);
        bool as_matrix = matrix || input_path.ends_with(".mtx");
        if (as_matrix) {
            auto parsed = parse_matrix_pattern(text, {keep_loops, multigraph});
            if (parsed.dropped_diagonal || parsed.duplicate_entries)
                std::cerr << "warning: dropped " << parsed.dropped_diagonal
                          << " diagonal entries, saw " << parsed.duplicate_entries
                          << " duplicates\n";
            return parsed.graph;
        }
        return parse_edge_list(text);
    }
};

struct SolverOptions {
    int vertex_budget = 16;
    double time_budget = 0;
    std::int64_t seed_upper = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--vertex-budget", vertex_budget, "largest search size accepted");
        cmd->add_option("--time-budget-seconds", time_budget, "wall-clock cap (0 = unlimited)");
        cmd->add_option("--seed-upper-bound", seed_upper, "initial upper bound to probe first");
    }
    SolverConfig config() const {
        SolverConfig cfg;
        cfg.vertex_budget = vertex_budget;
        if (time_budget > 0) cfg.time_budget_seconds = time_budget;
        if (seed_upper >= 0) cfg.seed_upper_bound = seed_upper;
        return cfg;
    }
};

EdgeLabeling load_edge_labeling(const Graph& g, const std::string& path) {
    EdgeLabeling f{parse_labels(slurp(path))};
    if (f.labels.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::runtime_error("labeling covers " + std::to_string(f.labels.size()) +
                                 " edges, graph has " + std::to_string(g.edge_count()));
    return f;
}

VertexLabeling load_vertex_labeling(const Graph& g, const std::string& path) {
    VertexLabeling gl{parse_labels(slurp(path))};
    if (gl.labels.size() != static_cast<std::size_t>(g.vertex_count))
        throw std::runtime_error("labeling covers " + std::to_string(gl.labels.size()) +
                                 " vertices, graph has " + std::to_string(g.vertex_count));
    return gl;
}

std::string construction_json(const Graph& g, const ConstructionResult& c) {
    std::ostringstream out;
    out << "{\"formula\":\"" << c.formula_name << "\",\"claimed_value\":" << c.claimed_value
        << ",\"upper_bound_only\":" << (c.upper_bound_only ? "true" : "false")
        << ",\"labeling\":" << labeling_json(g, c.labeling) << "}";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bandwidth and edge-bandwidth toolkit"};
    app.require_subcommand(1);
    std::string output_path;
    app.add_option("--output", output_path, "write the payload here instead of stdout");

    GraphInput bounds_input;
    BoundBudgets budgets;
    auto* cmd_bounds = app.add_subcommand("bounds", "lower bounds with certificates");
    bounds_input.attach(cmd_bounds);
    cmd_bounds->add_option("--density-budget", budgets.density_edges,
                           "exhaustive density search up to this many edges");
    cmd_bounds->add_option("--boundary-budget", budgets.boundary_edges,
                           "exhaustive boundary search up to this many edges");

    GraphInput exact_input;
    SolverOptions solver_options;
    bool exact_vertex = false;
    auto* cmd_exact = app.add_subcommand("exact", "exact bandwidth / edge-bandwidth");
    exact_input.attach(cmd_exact);
    solver_options.attach(cmd_exact);
    cmd_exact->add_flag("--vertex", exact_vertex, "vertex bandwidth instead of edge-bandwidth");

    std::string construct_family;
    auto* cmd_construct = app.add_subcommand("construct", "closed-form family labeling");
    cmd_construct->add_option("--family", construct_family, "clique:n | biclique:n | caterpillar:p1,p2,... | theta:l1,l2,... | star:k | double_star:k | path:n")
        ->required();

    GraphInput transform_input;
    std::string op, labeling_path, endpoints, pair;
    int edge_id = -1;
    bool allow_existing = false;
    auto* cmd_transform = app.add_subcommand("transform", "labeled edge operations");
    transform_input.attach(cmd_transform);
    cmd_transform->add_option("--op", op,
                              "add-edge | subdivide | collapse | contract | expand | to-vertex | to-edge")
        ->required();
    cmd_transform->add_option("--labeling", labeling_path, "labels file: '<index> <label>' lines")
        ->required();
    cmd_transform->add_option("--endpoints", endpoints, "u,v for add-edge");
    cmd_transform->add_option("--edge", edge_id, "edge id for subdivide/contract/expand");
    cmd_transform->add_option("--pair", pair, "e1,e2 for collapse");
    cmd_transform->add_flag("--allow-existing", allow_existing,
                            "permit adding a parallel edge (multigraph)");

    int max_vertices = 5;
    std::uint64_t sweep_seed = 1;
    int random_cases = 10000;
    auto* cmd_verify = app.add_subcommand("verify", "run the cross-module verification sweep");
    cmd_verify->add_option("--max-vertices", max_vertices, "exhaustive sweep cap (<= 6)");
    cmd_verify->add_option("--seed", sweep_seed, "seed for randomized cases");
    cmd_verify->add_option("--random-cases", random_cases, "number of randomized transform checks");

    GraphInput permute_input;
    std::string permute_labeling;
    bool permute_exact = false;
    SolverOptions permute_solver;
    auto* cmd_permute = app.add_subcommand("permute-matrix", "band profile under a vertex order");
    permute_input.attach(cmd_permute);
    cmd_permute->add_option("--labeling", permute_labeling, "canonical vertex labeling file");
    cmd_permute->add_flag("--exact", permute_exact, "solve for an optimal order instead");
    permute_solver.attach(cmd_permute);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_bounds->parsed()) {
            Graph g = bounds_input.load();
            emit(bound_report_json(lower_bound_report(g, budgets)), output_path);
            return 0;
        }
        if (cmd_exact->parsed()) {
            Graph g = exact_input.load();
            if (exact_vertex) {
                BandwidthResult r = exact_bandwidth(g, solver_options.config());
                emit(solver_result_json(g, r), output_path);
                return r.solved ? 0 : 2;
            }
            EdgeBandwidthResult r = exact_edge_bandwidth(g, solver_options.config());
            emit(solver_result_json(g, r), output_path);
            return r.solved ? 0 : 2;
        }
        if (cmd_construct->parsed()) {
            FamilySpec spec = parse_family(construct_family);
            Graph g = generate(spec);
            ConstructionResult c;
            switch (spec.kind) {
                case FamilySpec::Kind::complete: c = clique_labeling(spec.n); break;
                case FamilySpec::Kind::complete_bipartite:
                    if (spec.a != spec.b)
                        throw std::runtime_error("construct supports balanced bicliques only");
                    c = biclique_labeling(spec.a);
                    break;
                case FamilySpec::Kind::theta: c = theta_labeling(spec); break;
                default: c = caterpillar_labeling(spec); break;
            }
            emit(construction_json(g, c), output_path);
            return 0;
        }
        if (cmd_transform->parsed()) {
            Graph g = transform_input.load();
            if (op == "to-vertex") {
                EdgeLabeling f = load_edge_labeling(g, labeling_path);
                VertexLabeling gl = edge_to_vertex(g, f);
                emit(labeling_json(g, gl), output_path);
                return 0;
            }
            if (op == "to-edge") {
                VertexLabeling gl = load_vertex_labeling(g, labeling_path);
                ForestEdgeLabeling out = vertex_to_edge_forests(g, gl);
                emit(forest_labeling_json(g, out), output_path);
                return 0;
            }
            TransformOutcome out;
            if (op == "add-edge") {
                auto uv = parse_int_list(endpoints);
                if (uv.size() != 2) throw std::runtime_error("add-edge needs --endpoints u,v");
                out = add_edge_fold(g, load_edge_labeling(g, labeling_path), {uv[0], uv[1]},
                                    allow_existing);
            } else if (op == "subdivide") {
                out = subdivide_lift(g, load_edge_labeling(g, labeling_path), edge_id);
            } else if (op == "collapse") {
                auto ids = parse_int_list(pair);
                if (ids.size() != 2) throw std::runtime_error("collapse needs --pair e1,e2");
                out = subdivision_collapse(g, load_edge_labeling(g, labeling_path), ids[0], ids[1]);
            } else if (op == "contract") {
                out = contract_delete(g, load_edge_labeling(g, labeling_path), edge_id);
            } else if (op == "expand") {
                Graph h = contract(g, edge_id);
                out = contract_insert(g, edge_id, load_edge_labeling(h, labeling_path));
            } else {
                throw std::runtime_error("unknown --op '" + op + "'");
            }
            emit(transform_outcome_json(out), output_path);
            return 0;
        }
        if (cmd_verify->parsed()) {
            SweepOptions options;
            options.max_vertices = max_vertices;
            options.seed = sweep_seed;
            options.random_cases = random_cases;
            SweepReport report = verify_sweep(options);
            emit(format_report(report), output_path);
            return report.all_passed() ? 0 : 2;
        }
        if (cmd_permute->parsed()) {
            Graph g = permute_input.load();
            VertexLabeling gl;
            if (permute_exact) {
                BandwidthResult r = exact_bandwidth(g, permute_solver.config());
                if (!r.solved) throw std::runtime_error("exact permutation search exceeded budget");
                gl = r.labeling;
            } else {
                if (permute_labeling.empty())
                    throw std::runtime_error("permute-matrix needs --labeling or --exact");
                gl = load_vertex_labeling(g, permute_labeling);
            }
            PermutationProfile profile = permute_matrix(g, gl);
            std::ostringstream payload;
            payload << "{\"band\":" << profile.band << ",\"permutation\":[";
            for (std::size_t i = 0; i < profile.permutation.size(); ++i)
                payload << (i ? "," : "") << profile.permutation[i];
            payload << "],\"labeling\":" << labeling_json(g, gl) << "}";
            emit(payload.str(), output_path);
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
