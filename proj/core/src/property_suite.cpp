#include "graphfreq/property_suite.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "graphfreq/errors.hpp"
#include "graphfreq/frequency.hpp"
#include "graphfreq/harmonic.hpp"
#include "graphfreq/summation.hpp"

namespace graphfreq {

RandomGraphCase random_graph_case(TestRng& rng) {
    for (;;) {
        const int n = 4 + rng.below(57);  // 4 .. 60
        std::vector<WeightedEdge> edges;
        std::set<std::pair<int, int>> seen;
        auto add_edge = [&](int u, int v) {
            const auto key = std::minmax(u, v);
            if (u == v || !seen.insert(key).second) return;
            edges.push_back({u, v, rng.range(0.1, 10.0)});
        };
        for (int v = 1; v < n; ++v) add_edge(rng.below(v), v);  // spanning tree
        const int chords = rng.below(n);
        for (int c = 0; c < chords; ++c) add_edge(rng.below(n), rng.below(n));

        RandomGraphCase out;
        out.graph = build_graph(edges);
        out.base = 0;
        const LayerDecomposition dec = layer_decompose(out.graph, out.base);
        if (dec.last_layer() < 2) continue;  // need a nonempty horizon; redraw
        for (int v : dec.layers.back()) out.boundary[v] = rng.range(-1.0, 1.0);
        return out;
    }
}

RandomStarCase random_star_case(TestRng& rng) {
    const int leaves = 3 + rng.below(38);  // 3 .. 40
    const bool unit_weights = rng.below(2) == 0;

    std::vector<WeightedEdge> edges;
    edges.reserve(static_cast<std::size_t>(leaves));
    std::vector<double> value(static_cast<std::size_t>(leaves) + 1, 0.0);
    CompensatedSum weighted_sum, weight_total;
    for (int leaf = 1; leaf <= leaves; ++leaf) {
        const double w = unit_weights ? 1.0 : rng.range(0.1, 10.0);
        const double u = rng.range(-1.0, 1.0);
        edges.push_back({0, leaf, w});
        value[static_cast<std::size_t>(leaf)] = u;
        weighted_sum.add(w * u);
        weight_total.add(w);
    }
    value[0] = weighted_sum.value() / weight_total.value();

    RandomStarCase out;
    out.graph = build_graph(edges);
    out.field.values = std::move(value);
    out.field.interior.assign(static_cast<std::size_t>(leaves) + 1, 0);
    out.field.interior[0] = 1;
    harmonic_residual(out.graph, out.field);
    return out;
}

MonotonicitySuiteReport run_monotonicity_suite(int count, std::uint64_t seed, double tol,
                                               double tol_mono) {
    if (count < 1) {
        throw Error(ErrorCode::ParameterOutOfRange, "suite count must be >= 1");
    }
    TestRng rng(seed);
    MonotonicitySuiteReport report;
    for (int i = 0; i < count; ++i) {
        RandomGraphCase c = random_graph_case(rng);
        const DirichletResult solved = solve_dirichlet(c.graph, c.boundary, tol);
        const LayerDecomposition dec = layer_decompose(c.graph, c.base);
        const FrequencySeries series = frequency_series(dec, solved.field, tol_mono);
        const MonotoneReport mono = verify_monotone(series);
        if (!mono.pass) ++report.violations;
        report.worst_value = std::min(report.worst_value, mono.min_value);
        if (series.N.size() >= 2) {
            report.worst_increment = std::min(report.worst_increment, mono.min_increment);
        }
        report.max_residual = std::max(report.max_residual, solved.residual_norm);
        report.max_flow_error = std::max(report.max_flow_error, flow_balance_error(dec));
        ++report.cases;
    }
    report.pass = report.violations == 0;
    return report;
}

StarSuiteReport run_star_suite(int count, std::uint64_t seed, double tol) {
    if (count < 1) {
        throw Error(ErrorCode::ParameterOutOfRange, "suite count must be >= 1");
    }
    TestRng rng(seed);
    StarSuiteReport report;
    report.min_N0 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
        RandomStarCase c = random_star_case(rng);
        const LayerDecomposition dec = layer_decompose(c.graph, 0);
        const LayerEnergies e = layer_energies(dec, c.field);
        const double N0 = e.S_in[1] - e.S_out[0];
        report.min_N0 = std::min(report.min_N0, N0);
        ++report.cases;
    }
    report.pass = report.min_N0 >= -tol;
    return report;
}

}  // namespace graphfreq
