#pragma once

#include <vector>

namespace graphfreq {

struct QuadratureRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;  // positive, sum to 2
};

// Gauss-Legendre rule with n points: exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_legendre(int n);

// Integrates f over [a, b] with the given rule (affine change of variables).
template <typename F>
double integrate(const QuadratureRule& rule, double a, double b, F&& f) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

}  // namespace graphfreq
