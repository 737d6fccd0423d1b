// Acceptance gate: one line per criterion, PASS/FAIL with the measured
// numbers, exit code = number of failures. Pass criterion numbers as
// arguments to run a subset, e.g. `acceptance_tests 1 5`.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/exact_integral.hpp"
#include "../support/oracles.hpp"
#include "graphfreq/cube_energy.hpp"
#include "graphfreq/frequency.hpp"
#include "graphfreq/generators.hpp"
#include "graphfreq/harmonic.hpp"
#include "graphfreq/property_suite.hpp"

using namespace graphfreq;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// ---------------------------------------------------------------------------
// 1. Worked tree example at depth 20: N(k) = 8 - 3/2^(k-1) exactly, fast.
Outcome criterion_tree_exactness() {
    const auto start = Clock::now();
    const TreeExample ex = tree_example(20);
    const LayerDecomposition dec = layer_decompose(ex.graph, ex.base);
    const FrequencySeries s = frequency_series(dec, ex.field);
    const double elapsed = ms_since(start);

    Outcome o;
    if (s.horizon != 18 || s.N.size() != ex.expected_frequency.size()) {
        o.detail = "horizon " + std::to_string(s.horizon) + ", expected 18";
        return o;
    }
    double max_err = 0.0;
    for (std::size_t k = 0; k < s.N.size(); ++k) {
        max_err = std::max(max_err, std::abs(s.N[k] - ex.expected_frequency[k]));
    }
    const bool values_ok = max_err <= 1e-12 && s.N.front() == 2.0 && s.N.back() > 7.99;
    const bool fast = elapsed < 1000.0;
    o.pass = values_ok && fast;
    o.detail = "depth 20, horizon 18, max |N(k) - closed form| = " + fmt(max_err) +
               ", N(0) = " + fmt(s.N.front()) + ", N(18) = " + fmt(s.N.back()) + ", " +
               fmt(elapsed) + " ms";
    return o;
}

// ---------------------------------------------------------------------------
// 2. Monotonicity suite: 200 random graphs, residual <= 1e-12, no violations.
Outcome criterion_monotone_suite() {
    const auto start = Clock::now();
    // Solver tolerance 5e-13 guarantees the per-case convergence target
    // tol*(1+max|boundary|) stays below 1e-12 for boundary data in [-1,1].
    const MonotonicitySuiteReport r = run_monotonicity_suite(200, 20240817, 5e-13, 1e-8);
    const double elapsed = ms_since(start);
    Outcome o;
    o.pass = r.cases == 200 && r.violations == 0 && r.max_residual <= 1e-12 &&
             elapsed < 30000.0;
    o.detail = std::to_string(r.cases) + " cases, " + std::to_string(r.violations) +
               " violations, worst N = " + fmt(r.worst_value) +
               ", worst increment = " + fmt(r.worst_increment) +
               ", max residual = " + fmt(r.max_residual) + ", " + fmt(elapsed) + " ms";
    return o;
}

// ---------------------------------------------------------------------------
// 3. N(0) >= -1e-12 on 1000 random weighted stars with mean-value centers.
Outcome criterion_star_n0() {
    const StarSuiteReport r = run_star_suite(1000, 321);
    Outcome o;
    o.pass = r.cases == 1000 && r.min_N0 >= -1e-12;
    o.detail = std::to_string(r.cases) + " stars, min N(0) = " + fmt(r.min_N0);
    return o;
}

// ---------------------------------------------------------------------------
// 4. Flow balance on every generated and random graph, 1e-12 relative.
Outcome criterion_flow_balance() {
    double worst = 0.0;
    int graphs = 0;
    auto track = [&](const Graph& g, int base) {
        const LayerDecomposition dec = layer_decompose(g, base);
        worst = std::max(worst, flow_balance_error(dec));
        ++graphs;
    };
    track(gen_tree(3, 8).graph, 0);
    track(gen_tree(4, 5).graph, 0);
    track(gen_tree(2, 9).graph, 0);
    track(gen_lattice(2, 6).graph, 0);
    track(gen_lattice(3, 4).graph, 0);
    track(gen_lattice(4, 3).graph, 0);
    {
        std::vector<WeightedEdge> cyc;
        for (int i = 0; i < 6; ++i) cyc.push_back({i, (i + 1) % 6, 1.0});
        track(build_graph(cyc), 0);
    }
    TestRng rng(20240817);
    for (int i = 0; i < 200; ++i) {
        const RandomGraphCase c = random_graph_case(rng);
        track(c.graph, c.base);
    }
    Outcome o;
    o.pass = worst <= 1e-12;
    o.detail = std::to_string(graphs) + " graphs, worst relative imbalance = " + fmt(worst);
    return o;
}

// ---------------------------------------------------------------------------
// 5. Oracle equivalence: the frequency series matches an independent
//    brute-force recomputation on trees, lattices (dims 2-3, radius <= 6),
//    and the random suite.
Outcome criterion_oracle_equivalence() {
    double worst_rel = 0.0;
    int fields = 0;

    auto compare = [&](const Graph& g, const ScalarField& f, int base) {
        const LayerDecomposition dec = layer_decompose(g, base);
        const FrequencySeries s = frequency_series(dec, f);
        const oracle::NaiveSeries naive = oracle::naive_frequency(g, f, base);
        if (s.horizon != naive.horizon || s.S_in.size() != naive.S_in.size()) {
            worst_rel = std::numeric_limits<double>::infinity();
            return;
        }
        for (std::size_t k = 0; k < s.S_in.size(); ++k) {
            const double sin_ref = static_cast<double>(naive.S_in[k]);
            const double sout_ref = static_cast<double>(naive.S_out[k]);
            worst_rel = std::max(worst_rel,
                                 std::abs(s.S_in[k] - sin_ref) / (1.0 + std::abs(sin_ref)));
            worst_rel = std::max(
                worst_rel, std::abs(s.S_out[k] - sout_ref) / (1.0 + std::abs(sout_ref)));
        }
        for (std::size_t k = 0; k < s.N.size(); ++k) {
            const double n_ref = static_cast<double>(naive.N[k]);
            worst_rel =
                std::max(worst_rel, std::abs(s.N[k] - n_ref) / (1.0 + std::abs(n_ref)));
        }
        ++fields;
    };

    for (int depth : {4, 6, 8}) {
        const TreeExample ex = tree_example(depth);
        compare(ex.graph, ex.field, ex.base);
    }
    const std::vector<std::string> polys2 = {"x", "x*y", "x^2 - y^2"};
    for (int radius : {3, 6}) {
        const GeneratedGraph gen = gen_lattice(2, radius);
        for (const std::string& text : polys2) {
            compare(gen.graph, lattice_polynomial_field(gen.graph, parse_polynomial(text, 2)),
                    gen.base);
        }
    }
    const std::vector<std::string> polys3 = {"x", "x*y*z", "x^2 - z^2"};
    for (int radius : {3, 6}) {
        const GeneratedGraph gen = gen_lattice(3, radius);
        for (const std::string& text : polys3) {
            compare(gen.graph, lattice_polynomial_field(gen.graph, parse_polynomial(text, 3)),
                    gen.base);
        }
    }
    TestRng rng(20240817);
    for (int i = 0; i < 200; ++i) {
        const RandomGraphCase c = random_graph_case(rng);
        const DirichletResult solved = solve_dirichlet(c.graph, c.boundary, 5e-13);
        compare(c.graph, solved.field, c.base);
    }

    Outcome o;
    o.pass = worst_rel <= 1e-12;
    o.detail = std::to_string(fields) + " fields, worst relative deviation = " + fmt(worst_rel);
    return o;
}

// ---------------------------------------------------------------------------
// 6. Doubling bounds on the worked tree example plus the classification trio.
Outcome criterion_doubling() {
    const TreeExample ex = tree_example(6);
    const LayerDecomposition dec = layer_decompose(ex.graph, ex.base);
    const FrequencySeries s = frequency_series(dec, ex.field);
    const DoublingReport rep = doubling_check(dec, s, 1, 3);
    const bool tree_ok = rep.lhs == 56.25 && rep.lower_bound == 19.0 &&
                         rep.classification == RegionClass::Expansive && rep.lower_holds;

    bool classes_ok = true;
    {
        const GeneratedGraph t = gen_tree(3, 4);
        classes_ok = classes_ok &&
                     classify_region(layer_decompose(t.graph, 0), 0, 2) == RegionClass::Expansive;
        std::vector<WeightedEdge> pe;
        for (int i = 0; i < 4; ++i) pe.push_back({i, i + 1, 1.0});
        classes_ok = classes_ok &&
                     classify_region(layer_decompose(build_graph(pe), 0), 1, 3) == RegionClass::Both;
        std::vector<WeightedEdge> cyc;
        for (int i = 0; i < 6; ++i) cyc.push_back({i, (i + 1) % 6, 1.0});
        classes_ok = classes_ok && classify_region(layer_decompose(build_graph(cyc), 0), 1, 3) ==
                                       RegionClass::Contractive;
    }

    Outcome o;
    o.pass = tree_ok && classes_ok;
    o.detail = "tree (a,b)=(1,3): lhs = " + fmt(rep.lhs) + " >= " + fmt(rep.lower_bound) +
               " [" + to_string(rep.classification) + ", lower_holds=" +
               (rep.lower_holds ? "true" : "false") + "], classification trio " +
               (classes_ok ? "exact" : "WRONG");
    return o;
}

// ---------------------------------------------------------------------------
// 7. Convexity of E(t): second differences >= -1e-8 * max |E| for the
//    harmonic family on 64-point grids in dims 2 and 3; u == 1 gives E = 8t.
Outcome criterion_convexity() {
    struct Entry {
        Polynomial poly;
        std::string name;
    };
    std::vector<Entry> family;
    for (const char* text : {"1", "x", "x*y", "x^2 - y^2"}) {
        family.push_back({parse_polynomial(text, 2), std::string(text) + " (dim 2)"});
    }
    for (int m = 2; m <= 5; ++m) {
        family.push_back({harmonic_re(m), "Re((x+iy)^" + std::to_string(m) + ") (dim 2)"});
    }
    for (const char* text : {"1", "x", "x*y", "x^2 - z^2", "x*y*z"}) {
        family.push_back({parse_polynomial(text, 3), std::string(text) + " (dim 3)"});
    }

    double worst_margin = std::numeric_limits<double>::infinity();
    std::string worst_name = "-";
    for (const Entry& entry : family) {
        const HarmonicPolynomial p = make_polynomial(entry.poly);
        const EnergyCurve c = energy_curve(p, 0.25, 4.0, 64, 12);
        double max_e = 0.0;
        for (double e : c.E) max_e = std::max(max_e, std::abs(e));
        const double tol = 1e-8 * max_e;
        for (double d : c.second_diffs) {
            const double margin = d + tol;  // >= 0 required
            if (margin < worst_margin) {
                worst_margin = margin;
                worst_name = entry.name;
            }
        }
    }
    const bool family_ok = worst_margin >= 0.0;

    // The constant field in dim 2: E(t) = 8t, second differences ~ 0.
    const EnergyCurve lin = energy_curve(make_polynomial(parse_polynomial("1", 2)),
                                         0.25, 4.0, 64, 12);
    double max_line_err = 0.0, max_dd = 0.0;
    for (std::size_t i = 0; i < lin.t_grid.size(); ++i) {
        max_line_err = std::max(max_line_err, std::abs(lin.E[i] - 8.0 * lin.t_grid[i]));
    }
    for (double d : lin.second_diffs) max_dd = std::max(max_dd, std::abs(d));
    const bool linear_ok = max_line_err <= 1e-10 && max_dd <= 1e-10;

    Outcome o;
    o.pass = family_ok && linear_ok;
    o.detail = std::to_string(family.size()) + " polynomials, tightest margin " +
               fmt(worst_margin) + " (" + worst_name + "); u=1: max |E - 8t| = " +
               fmt(max_line_err) + ", max |second diff| = " + fmt(max_dd);
    return o;
}

// ---------------------------------------------------------------------------
// 8. Derivative decomposition at t = 1 in dim 2 and second-order convergence.
Outcome criterion_decomposition() {
    struct Case {
        const char* text;
        double expected;  // E'(1) = dirichlet + skeleton
    };
    const Case cases[] = {{"1", 8.0}, {"x", 16.0}, {"x*y", 40.0 / 3.0}};
    double worst_fd_err = 0.0, worst_sum_err = 0.0;
    for (const Case& c : cases) {
        const HarmonicPolynomial p = make_polynomial(parse_polynomial(c.text, 2));
        const DerivativeDecomposition d = derivative_decomposition(p, 1.0, 1e-3, 12);
        const double sum = d.dirichlet_term + d.skeleton_term;
        worst_sum_err = std::max(worst_sum_err, std::abs(sum - c.expected));
        worst_fd_err = std::max(worst_fd_err, std::abs(d.E_prime_fd - sum));
    }
    // The decomposition itself is quadrature-exact (measured ~1e-14). The
    // central difference at h = 1e-3 carries unavoidable truncation error
    // |E'''| h^2 / 6, which peaks at 80h^2/3 ~ 2.7e-5 for u = x*y; 5e-5 is
    // that bound with slack, and the order check below pins the h^2 decay.
    const bool values_ok = worst_sum_err <= 1e-9 && worst_fd_err <= 5e-5;

    // Convergence order under h-halving, against the exact derivative. The
    // constant field is excluded: its energy is linear in t, so the central
    // difference is already exact and the order is undefined.
    double min_order = std::numeric_limits<double>::infinity();
    for (const Case& c : {Case{"x", 16.0}, Case{"x*y", 40.0 / 3.0}}) {
        const HarmonicPolynomial p = make_polynomial(parse_polynomial(c.text, 2));
        const double e1 =
            std::abs(derivative_decomposition(p, 1.0, 2e-3, 12).E_prime_fd - c.expected);
        const double e2 =
            std::abs(derivative_decomposition(p, 1.0, 1e-3, 12).E_prime_fd - c.expected);
        if (e2 == 0.0) continue;
        min_order = std::min(min_order, std::log2(e1 / e2));
    }
    const bool order_ok = min_order >= 1.9;

    Outcome o;
    o.pass = values_ok && order_ok;
    o.detail = "max |dirichlet+skeleton - closed form| = " + fmt(worst_sum_err) +
               ", max |fd - decomposition| = " + fmt(worst_fd_err) +
               ", min convergence order = " + fmt(min_order);
    return o;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "tree example exactness (depth 20)", criterion_tree_exactness},
        {2, "monotonicity suite (200 random graphs)", criterion_monotone_suite},
        {3, "star N(0) nonnegativity (1000 stars)", criterion_star_n0},
        {4, "flow balance", criterion_flow_balance},
        {5, "oracle equivalence", criterion_oracle_equivalence},
        {6, "doubling bounds and classification", criterion_doubling},
        {7, "boundary-energy convexity", criterion_convexity},
        {8, "derivative decomposition", criterion_decomposition},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!selected.empty() && selected.count(c.id) == 0) continue;
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << c.id << " (" << c.name << "): "
                  << (outcome.pass ? "PASS" : "FAIL") << " — " << outcome.detail << "\n";
        if (!outcome.pass) ++failures;
    }
    return failures;
}
