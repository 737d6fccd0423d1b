#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "graphfreq/graph.hpp"
#include "graphfreq/scalar_field.hpp"

namespace graphfreq {

// Deterministic RNG wrapper: draws are derived from raw mt19937_64 output with
// fixed arithmetic, so streams are identical across standard libraries.
class TestRng {
  public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }
    int below(int n) { return static_cast<int>(bits() % static_cast<std::uint64_t>(n)); }
    double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  private:
    std::mt19937_64 eng_;
};

// A random connected weighted graph (4..60 vertices, weights in [0.1, 10]):
// a random spanning tree plus random chords, Dirichlet data on the outermost
// BFS layer. Guaranteed to have at least 3 layers from base 0.
struct RandomGraphCase {
    Graph graph;
    int base = 0;
    std::map<int, double> boundary;  // outermost layer, values in [-1, 1]
};

RandomGraphCase random_graph_case(TestRng& rng);

// A random weighted star (3..40 leaves) whose center value is the weighted
// mean of the leaves, i.e. exactly harmonic at the center.
struct RandomStarCase {
    Graph graph;
    ScalarField field;
};

RandomStarCase random_star_case(TestRng& rng);

// Solves each random graph, builds the frequency series, and verifies that
// N(k) is nonnegative and nondecreasing; also tracks flow balance.
struct MonotonicitySuiteReport {
    int cases = 0;
    int violations = 0;
    double worst_value = 0.0;      // most negative N(k) seen (0 if none negative)
    double worst_increment = 0.0;  // most negative N(k+1)-N(k) seen
    double max_residual = 0.0;
    double max_flow_error = 0.0;
    bool pass = false;
};

MonotonicitySuiteReport run_monotonicity_suite(int count, std::uint64_t seed,
                                               double tol = 1e-12, double tol_mono = 1e-8);

// N(0) = S_in(1) - S_out(0) over random stars; Cauchy-Schwarz says it is
// nonnegative whenever the center is the weighted mean of the leaves.
struct StarSuiteReport {
    int cases = 0;
    double min_N0 = 0.0;
    bool pass = false;
};

StarSuiteReport run_star_suite(int count, std::uint64_t seed, double tol = 1e-12);

}  // namespace graphfreq
