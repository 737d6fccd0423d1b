#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphfreq/cube_energy.hpp"
#include "graphfreq/frequency.hpp"
#include "graphfreq/generators.hpp"
#include "graphfreq/graph_io.hpp"
#include "graphfreq/harmonic.hpp"
#include "graphfreq/property_suite.hpp"

namespace gf = graphfreq;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kConvexityTol = 1e-8;

void emit(const ordered_json& summary) { std::cout << summary.dump() << "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw gf::Error(gf::ErrorCode::IoError, "cannot open " + path + " for writing");
    out << content;
    if (!out.flush()) throw gf::Error(gf::ErrorCode::IoError, "write to " + path + " failed");
}

struct GenOptions {
    gf::FamilySpec spec;
    std::string output;
};

int run_gen(const GenOptions& opt, const char* family) {
    gf::GeneratedGraph gen = gf::generate(opt.spec);
    gf::write_graph_json(gen.graph, opt.output);
    ordered_json j;
    j["command"] = "gen";
    j["family"] = family;
    j["vertices"] = gen.graph.vertex_count;
    j["edges"] = gen.graph.edges.size();
    j["base"] = gen.base;
    j["truncated"] = gen.graph.truncated;
    if (!gen.graph.warnings.empty()) j["warnings"] = gen.graph.warnings;
    j["pass"] = true;
    j["output"] = opt.output;
    emit(j);
    return 0;
}

struct SolveOptions {
    std::string graph_path, boundary_path, output;
    double tol = 1e-12;
    int max_iter = 1'000'000;
};

int run_solve(const SolveOptions& opt) {
    const gf::Graph g = gf::read_graph_json(opt.graph_path);
    const std::map<int, double> boundary = gf::read_boundary_json(opt.boundary_path);
    const gf::DirichletResult result = gf::solve_dirichlet(g, boundary, opt.tol, opt.max_iter);
    gf::write_field_json(result.field, opt.output);
    ordered_json j;
    j["command"] = "solve";
    j["vertices"] = g.vertex_count;
    j["interior"] = result.field.interior_count();
    j["iterations"] = result.iterations;
    j["residual"] = result.residual_norm;
    j["pass"] = true;
    j["output"] = opt.output;
    emit(j);
    return 0;
}

struct SeriesOptions {
    std::string graph_path, field_path, output;
    int base = 0;
    double tol_mono = 1e-8;
};

ordered_json series_summary(const gf::FrequencySeries& s, const gf::MonotoneReport& mono) {
    ordered_json j;
    j["base"] = s.base;
    j["horizon"] = s.horizon;
    j["pass"] = mono.pass;
    j["worst_value"] = mono.min_value;
    j["argmin_value"] = mono.argmin_value;
    j["worst_increment"] = mono.min_increment;
    j["argmin_increment"] = mono.argmin_increment;
    j["tolerance"] = mono.tolerance;
    j["energy_scale"] = s.energy_scale;
    return j;
}

int run_freq(const SeriesOptions& opt) {
    const gf::Graph g = gf::read_graph_json(opt.graph_path);
    const gf::ScalarField f = gf::read_field_json(opt.field_path, g.vertex_count);
    const gf::LayerDecomposition dec = gf::layer_decompose(g, opt.base);
    const gf::FrequencySeries s = gf::frequency_series(dec, f, opt.tol_mono);
    const gf::MonotoneReport mono = gf::verify_monotone(s);
    ordered_json j;
    j["command"] = "freq";
    const ordered_json summary = series_summary(s, mono);
    for (const auto& [k, v] : summary.items()) j[k] = v;
    if (!opt.output.empty()) {
        std::ostringstream csv;
        gf::write_frequency_csv(csv, s);
        write_text_file(opt.output, csv.str());
        j["output"] = opt.output;
    }
    emit(j);
    return 0;
}

int run_verify_files(const SeriesOptions& opt) {
    const gf::Graph g = gf::read_graph_json(opt.graph_path);
    gf::ScalarField f = gf::read_field_json(opt.field_path, g.vertex_count);
    const double residual = gf::harmonic_residual(g, f);
    const gf::LayerDecomposition dec = gf::layer_decompose(g, opt.base);
    const gf::FrequencySeries s = gf::frequency_series(dec, f, opt.tol_mono);
    const gf::MonotoneReport mono = gf::verify_monotone(s);
    ordered_json j;
    j["command"] = "verify";
    const ordered_json summary = series_summary(s, mono);
    for (const auto& [k, v] : summary.items()) j[k] = v;
    j["residual"] = residual;
    j["flow_error"] = gf::flow_balance_error(dec);
    emit(j);
    return mono.pass ? 0 : 1;
}

struct SuiteOptions {
    std::string suite;
    int count = 0;
    std::uint64_t seed = 1;
    double tol = 1e-12;
    double tol_mono = 1e-8;
};

int run_verify_suite(const SuiteOptions& opt) {
    ordered_json j;
    j["command"] = "verify";
    j["suite"] = opt.suite;
    j["seed"] = opt.seed;
    bool pass = false;
    if (opt.suite == "random") {
        const int count = opt.count > 0 ? opt.count : 200;
        const gf::MonotonicitySuiteReport r =
            gf::run_monotonicity_suite(count, opt.seed, opt.tol, opt.tol_mono);
        j["cases"] = r.cases;
        j["violations"] = r.violations;
        j["worst_value"] = r.worst_value;
        j["worst_increment"] = r.worst_increment;
        j["max_residual"] = r.max_residual;
        j["max_flow_error"] = r.max_flow_error;
        pass = r.pass;
    } else if (opt.suite == "stars") {
        const int count = opt.count > 0 ? opt.count : 1000;
        const gf::StarSuiteReport r = gf::run_star_suite(count, opt.seed, opt.tol);
        j["cases"] = r.cases;
        j["min_N0"] = r.min_N0;
        pass = r.pass;
    } else {
        throw gf::Error(gf::ErrorCode::ParameterOutOfRange,
                        "--suite must be 'random' or 'stars', got '" + opt.suite + "'");
    }
    j["pass"] = pass;
    emit(j);
    return pass ? 0 : 1;
}

struct DoublingOptions {
    std::string graph_path, field_path;
    int a = 0, b = 0, base = 0;
    double tol_mono = 1e-8;
};

int run_doubling(const DoublingOptions& opt) {
    const gf::Graph g = gf::read_graph_json(opt.graph_path);
    const gf::ScalarField f = gf::read_field_json(opt.field_path, g.vertex_count);
    const gf::LayerDecomposition dec = gf::layer_decompose(g, opt.base);
    const gf::FrequencySeries s = gf::frequency_series(dec, f, opt.tol_mono);
    const gf::DoublingReport r = gf::doubling_check(dec, s, opt.a, opt.b);
    const bool lower_applies = r.classification == gf::RegionClass::Expansive ||
                               r.classification == gf::RegionClass::Both;
    const bool upper_applies = r.classification == gf::RegionClass::Contractive ||
                               r.classification == gf::RegionClass::Both;
    const bool pass = (!lower_applies || r.lower_holds) && (!upper_applies || r.upper_holds);
    ordered_json j;
    j["command"] = "doubling";
    j["a"] = r.a;
    j["b"] = r.b;
    j["classification"] = gf::to_string(r.classification);
    j["lhs"] = r.lhs;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["lower_holds"] = r.lower_holds;
    j["upper_holds"] = r.upper_holds;
    j["tolerance"] = r.tolerance;
    j["pass"] = pass;
    emit(j);
    return pass ? 0 : 1;
}

struct TreeExampleOptions {
    int depth = 8;
    std::string output;
    double tol_mono = 1e-8;
};

int run_tree_example(const TreeExampleOptions& opt) {
    const gf::TreeExample ex = gf::tree_example(opt.depth);
    const gf::LayerDecomposition dec = gf::layer_decompose(ex.graph, ex.base);
    const gf::FrequencySeries s = gf::frequency_series(dec, ex.field, opt.tol_mono);
    const gf::MonotoneReport mono = gf::verify_monotone(s);

    double max_abs_error = 0.0;
    const std::size_t n = std::min(s.N.size(), ex.expected_frequency.size());
    for (std::size_t k = 0; k < n; ++k) {
        max_abs_error = std::max(max_abs_error, std::abs(s.N[k] - ex.expected_frequency[k]));
    }
    const bool sizes_match = s.N.size() == ex.expected_frequency.size();
    const bool pass = sizes_match && max_abs_error <= 1e-12 && mono.pass;

    ordered_json j;
    j["command"] = "tree-example";
    j["depth"] = opt.depth;
    j["horizon"] = s.horizon;
    j["max_abs_error"] = max_abs_error;
    j["worst_increment"] = mono.min_increment;
    j["residual"] = ex.field.max_residual;
    j["pass"] = pass;
    if (!opt.output.empty()) {
        std::ostringstream csv;
        gf::write_frequency_csv(csv, s);
        write_text_file(opt.output, csv.str());
        j["output"] = opt.output;
    }
    emit(j);
    return pass ? 0 : 1;
}

struct CubeEnergyOptions {
    int dim = 2;
    std::string poly;
    double t_min = 0.25, t_max = 4.0;
    int steps = 64;
    int quad_order = 12;
    double h = 0.0;  // 0 selects t/1000 per evaluation point
    bool allow_nonharmonic = false;
    std::string output;
};

int run_cube_energy(const CubeEnergyOptions& opt) {
    const gf::HarmonicPolynomial p =
        gf::make_polynomial(gf::parse_polynomial(opt.poly, opt.dim));
    const gf::EnergyCurve curve = gf::energy_curve(p, opt.t_min, opt.t_max, opt.steps,
                                                   opt.quad_order, opt.allow_nonharmonic);
    double max_abs_E = 0.0;
    for (double e : curve.E) max_abs_E = std::max(max_abs_E, std::abs(e));
    double min_second_diff = 0.0;
    bool first = true;
    for (double d : curve.second_diffs) {
        if (first || d < min_second_diff) min_second_diff = d;
        first = false;
    }
    const double tolerance = kConvexityTol * max_abs_E;
    const bool pass = min_second_diff >= -tolerance;

    ordered_json j;
    j["command"] = "cube-energy";
    j["dim"] = opt.dim;
    j["poly"] = p.poly.to_string();
    j["harmonic"] = p.is_continuum_harmonic;
    j["quad_order"] = opt.quad_order;
    j["steps"] = opt.steps;
    j["t_min"] = opt.t_min;
    j["t_max"] = opt.t_max;
    j["max_E"] = max_abs_E;
    j["min_second_diff"] = min_second_diff;
    j["tolerance"] = tolerance;
    j["pass"] = pass;
    if (!opt.output.empty()) {
        std::ostringstream csv;
        gf::write_energy_csv(csv, p, curve, opt.h, opt.allow_nonharmonic);
        write_text_file(opt.output, csv.str());
        j["output"] = opt.output;
    }
    emit(j);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Almgren frequency toolkit for weighted graphs"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "Generate a graph and write it as JSON");
    gen->require_subcommand(1);
    auto* gen_tree_cmd = gen->add_subcommand("tree", "Regular tree truncated at a given depth");
    gen_tree_cmd->add_option("--degree", gen_opt.spec.degree, "Root degree (internal: degree-1 children)")
        ->capture_default_str();
    gen_tree_cmd->add_option("--depth", gen_opt.spec.depth, "Layers below the root")->required();
    gen_tree_cmd->add_option("-o,--output", gen_opt.output, "Graph JSON path")->required();
    auto* gen_lat_cmd = gen->add_subcommand("lattice", "Z^dim ball of l1 radius r, unit weights");
    gen_lat_cmd->add_option("--dim", gen_opt.spec.dim, "Lattice dimension")->capture_default_str();
    gen_lat_cmd->add_option("--radius", gen_opt.spec.radius, "l1 radius")->required();
    gen_lat_cmd->add_option("-o,--output", gen_opt.output, "Graph JSON path")->required();
    auto* gen_edge_cmd = gen->add_subcommand("edge-list", "Parse a whitespace edge list");
    gen_edge_cmd->add_option("--input", gen_opt.spec.path, "Edge list file")->required();
    gen_edge_cmd->add_option("-o,--output", gen_opt.output, "Graph JSON path")->required();

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "Solve the Dirichlet problem for given boundary values");
    solve->add_option("--graph", solve_opt.graph_path, "Graph JSON")->required();
    solve->add_option("--boundary", solve_opt.boundary_path, "Boundary values JSON")->required();
    solve->add_option("--tol", solve_opt.tol, "Residual tolerance")->capture_default_str();
    solve->add_option("--max-iter", solve_opt.max_iter, "Iteration cap")->capture_default_str();
    solve->add_option("-o,--output", solve_opt.output, "Field JSON path")->required();

    SeriesOptions freq_opt;
    auto* freq = app.add_subcommand("freq", "Compute the frequency series N(k) and write CSV");
    freq->add_option("--graph", freq_opt.graph_path, "Graph JSON")->required();
    freq->add_option("--field", freq_opt.field_path, "Field JSON")->required();
    freq->add_option("--base", freq_opt.base, "Base vertex")->capture_default_str();
    freq->add_option("--tol-mono", freq_opt.tol_mono, "Monotonicity tolerance")
        ->capture_default_str();
    freq->add_option("-o,--output", freq_opt.output, "CSV path");

    SeriesOptions verify_opt;
    SuiteOptions suite_opt;
    auto* verify = app.add_subcommand(
        "verify", "Check N(k) monotonicity on a field or on a built-in random suite");
    verify->add_option("--graph", verify_opt.graph_path, "Graph JSON");
    verify->add_option("--field", verify_opt.field_path, "Field JSON");
    verify->add_option("--base", verify_opt.base, "Base vertex")->capture_default_str();
    verify->add_option("--tol-mono", verify_opt.tol_mono, "Monotonicity tolerance")
        ->capture_default_str();
    verify->add_option("--suite", suite_opt.suite, "Built-in suite: random | stars");
    verify->add_option("--count", suite_opt.count, "Suite size (default 200 / 1000)");
    verify->add_option("--seed", suite_opt.seed, "Suite RNG seed")->capture_default_str();
    verify->add_option("--tol", suite_opt.tol, "Solver tolerance for the suite")
        ->capture_default_str();

    DoublingOptions dbl_opt;
    auto* doubling = app.add_subcommand("doubling", "Evaluate the additive doubling bounds");
    doubling->add_option("--graph", dbl_opt.graph_path, "Graph JSON")->required();
    doubling->add_option("--field", dbl_opt.field_path, "Field JSON")->required();
    doubling->add_option("--a", dbl_opt.a, "Inner layer")->required();
    doubling->add_option("--b", dbl_opt.b, "Outer layer")->required();
    doubling->add_option("--base", dbl_opt.base, "Base vertex")->capture_default_str();
    doubling->add_option("--tol-mono", dbl_opt.tol_mono, "Bound tolerance")
        ->capture_default_str();

    TreeExampleOptions tree_opt;
    auto* tree_example_cmd = app.add_subcommand(
        "tree-example", "Run the worked 3-regular tree example and compare N(k) to 8 - 3/2^(k-1)");
    tree_example_cmd->add_option("--depth", tree_opt.depth, "Tree depth")->capture_default_str();
    tree_example_cmd->add_option("-o,--output", tree_opt.output, "CSV path");
    tree_example_cmd->add_option("--tol-mono", tree_opt.tol_mono, "Monotonicity tolerance")
        ->capture_default_str();

    CubeEnergyOptions cube_opt;
    auto* cube = app.add_subcommand(
        "cube-energy", "Sample E(t) over cube boundaries and check convexity");
    cube->add_option("--dim", cube_opt.dim, "Ambient dimension (2..4)")->capture_default_str();
    cube->add_option("--poly", cube_opt.poly, "Polynomial, e.g. \"1*x^2 - 1*y^2\"")->required();
    cube->add_option("--tmin", cube_opt.t_min, "Grid start")->capture_default_str();
    cube->add_option("--tmax", cube_opt.t_max, "Grid end")->capture_default_str();
    cube->add_option("--steps", cube_opt.steps, "Grid points")->capture_default_str();
    cube->add_option("--quad-order", cube_opt.quad_order, "Gauss-Legendre points per axis")
        ->capture_default_str();
    cube->add_option("--fd-step", cube_opt.h, "Finite-difference step (0 = t/1000)")
        ->capture_default_str();
    cube->add_flag("--allow-nonharmonic", cube_opt.allow_nonharmonic,
                   "Evaluate even if the polynomial is not harmonic (diagnostics)");
    cube->add_option("-o,--output", cube_opt.output, "CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen_tree_cmd) {
            gen_opt.spec.kind = gf::FamilySpec::Kind::Tree;
            return run_gen(gen_opt, "tree");
        }
        if (*gen_lat_cmd) {
            gen_opt.spec.kind = gf::FamilySpec::Kind::Lattice;
            return run_gen(gen_opt, "lattice");
        }
        if (*gen_edge_cmd) {
            gen_opt.spec.kind = gf::FamilySpec::Kind::EdgeList;
            return run_gen(gen_opt, "edge-list");
        }
        if (*solve) return run_solve(solve_opt);
        if (*freq) return run_freq(freq_opt);
        if (*verify) {
            if (!suite_opt.suite.empty()) return run_verify_suite(suite_opt);
            if (verify_opt.graph_path.empty() || verify_opt.field_path.empty()) {
                std::cerr << "error: verify needs either --suite or both --graph and --field\n";
                return 1;
            }
            return run_verify_files(verify_opt);
        }
        if (*doubling) return run_doubling(dbl_opt);
        if (*tree_example_cmd) return run_tree_example(tree_opt);
        if (*cube) return run_cube_energy(cube_opt);
    } catch (const gf::Error& e) {
        // Error::what() already carries the code name prefix.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
