#pragma once

#include <iosfwd>
#include <vector>

#include "graphfreq/polynomial.hpp"

namespace graphfreq {

// E(t): integral of u^2 over the boundary of the cube [-t,t]^dim, computed as
// a tensor-product Gauss-Legendre quadrature over each of the 2*dim faces.
// Exact to rounding when 2*quad_order - 1 >= per-axis degree of u^2. Throws
// NotHarmonic unless the polynomial is certified harmonic or the override is
// set (diagnostics only).
double boundary_energy(const HarmonicPolynomial& p, double t, int quad_order,
                       bool allow_nonharmonic = false);

struct EnergyCurve {
    std::vector<double> t_grid;        // uniform, strictly increasing
    std::vector<double> E;             // E(t) per grid point
    std::vector<double> second_diffs;  // E(t_{i+1}) - 2 E(t_i) + E(t_{i-1}), i = 1..n-2
    int quad_order = 0;
};

EnergyCurve energy_curve(const HarmonicPolynomial& p, double t_min, double t_max, int steps,
                         int quad_order, bool allow_nonharmonic = false);

// E'(t) split into its interior and corner contributions:
//   E_prime_fd     central finite difference of boundary_energy (step h)
//   dirichlet_term 2 * integral of |grad u|^2 over [-t,t]^dim
//   skeleton_term  2 * integral of u^2 over the (dim-2)-skeleton of the cube
//                  (in dim 2: twice the sum of u^2 over the 4 corners)
// E_prime_fd agrees with dirichlet_term + skeleton_term to O(h^2); the
// dirichlet term alone undershoots whenever the skeleton term is positive.
struct DerivativeDecomposition {
    double E_prime_fd = 0.0;
    double dirichlet_term = 0.0;
    double skeleton_term = 0.0;
};

DerivativeDecomposition derivative_decomposition(const HarmonicPolynomial& p, double t,
                                                 double h, int quad_order,
                                                 bool allow_nonharmonic = false);

// CSV with columns t,E,second_diff,E_prime_fd,dirichlet_term,skeleton_term;
// second_diff is blank on the first and last rows.
void write_energy_csv(std::ostream& out, const HarmonicPolynomial& p, const EnergyCurve& curve,
                      double h, bool allow_nonharmonic = false);

}  // namespace graphfreq
