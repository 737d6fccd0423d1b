#pragma once

#include <map>
#include <vector>

#include "graphfreq/graph.hpp"
#include "graphfreq/polynomial.hpp"
#include "graphfreq/scalar_field.hpp"

namespace graphfreq {

// Harmonicity defect sum_nb w(u(nb) - u(v)) at every vertex (0 where not
// interior). Throws if the field does not match the graph.
std::vector<double> harmonic_defects(const Graph& g, const ScalarField& f);

// Max |defect| over interior vertices; also stored in f.max_residual.
double harmonic_residual(const Graph& g, ScalarField& f);

struct DirichletResult {
    ScalarField field;
    int iterations = 0;
    double residual_norm = 0.0;  // max harmonicity defect over interior vertices
};

// Solves the discrete Dirichlet problem: u fixed on the keys of `boundary`,
// harmonic everywhere else. Jacobi-preconditioned conjugate gradient on the
// interior block; converged when the defect is <= tol * (1 + max |boundary|).
DirichletResult solve_dirichlet(const Graph& g, const std::map<int, double>& boundary,
                                double tol = 1e-12, int max_iter = 1'000'000);

// The degree-3 unit-weight tree carrying the piecewise-branch harmonic field:
// values +a_k, -a_k, 0 on the three root branches with a_k = 2 - 2^(1-k).
// Frequencies obey N(k) = 8 - 3/2^(k-1), exactly representable in doubles.
struct TreeExample {
    Graph graph;
    int base = 0;
    ScalarField field;
    std::vector<double> expected_frequency;  // N(k) for k = 0 .. depth-2
};

TreeExample tree_example(int depth);

// Samples a polynomial on a lattice ball generated by gen_lattice (coordinates
// recovered from the vertex labels). Interior = vertices with all 2*dim unit
// neighbors present. Throws NotDiscreteHarmonic if the polynomial fails the
// mean-value property at any interior vertex (checked in exact arithmetic).
ScalarField lattice_polynomial_field(const Graph& g, const Polynomial& p,
                                     bool require_harmonic = true);

}  // namespace graphfreq
