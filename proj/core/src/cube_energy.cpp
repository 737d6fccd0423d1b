#include "graphfreq/cube_energy.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "graphfreq/graph_io.hpp"
#include "graphfreq/quadrature.hpp"
#include "graphfreq/summation.hpp"

namespace graphfreq {

namespace {

void require_harmonic(const HarmonicPolynomial& p, bool allow_nonharmonic) {
    if (!p.is_continuum_harmonic && !allow_nonharmonic) {
        throw Error(ErrorCode::NotHarmonic, "polynomial " + p.poly.to_string() +
                                                " has nonzero laplacian " +
                                                p.laplacian.to_string());
    }
}

void check_params(double t, int quad_order) {
    if (!(t > 0) || !std::isfinite(t)) {
        throw Error(ErrorCode::ParameterOutOfRange, "t must be positive");
    }
    if (quad_order < 2) {
        throw Error(ErrorCode::ParameterOutOfRange, "quad_order must be >= 2");
    }
}

// Tensor-product quadrature of f(point)^2 over [-t,t]^{free_axes}, the other
// coordinates held fixed in `point`. Recursion depth is at most dim.
double tensor_square_integral(const Polynomial& f, const std::vector<int>& free_axes,
                              std::vector<double>& point, double t,
                              const QuadratureRule& rule) {
    std::function<double(std::size_t)> rec = [&](std::size_t idx) -> double {
        if (idx == free_axes.size()) {
            const double v = f.evaluate(point);
            return v * v;
        }
        const int axis = free_axes[idx];
        CompensatedSum acc;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            point[static_cast<std::size_t>(axis)] = t * rule.nodes[i];
            acc.add(rule.weights[i] * rec(idx + 1));
        }
        return acc.value();
    };
    const double scaled = rec(0);
    double jacobian = 1.0;
    for (std::size_t i = 0; i < free_axes.size(); ++i) jacobian *= t;
    return jacobian * scaled;
}

// Same, with the integrand |grad u|^2 instead of u^2.
double tensor_gradsq_integral(const std::vector<Polynomial>& grad,
                              std::vector<double>& point, double t,
                              const QuadratureRule& rule) {
    const int dim = static_cast<int>(point.size());
    std::function<double(int)> rec = [&](int axis) -> double {
        if (axis == dim) {
            double s = 0.0;
            for (const Polynomial& g : grad) {
                const double v = g.evaluate(point);
                s += v * v;
            }
            return s;
        }
        CompensatedSum acc;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            point[static_cast<std::size_t>(axis)] = t * rule.nodes[i];
            acc.add(rule.weights[i] * rec(axis + 1));
        }
        return acc.value();
    };
    double jacobian = 1.0;
    for (int i = 0; i < dim; ++i) jacobian *= t;
    return jacobian * rec(0);
}

}  // namespace

double boundary_energy(const HarmonicPolynomial& p, double t, int quad_order,
                       bool allow_nonharmonic) {
    require_harmonic(p, allow_nonharmonic);
    check_params(t, quad_order);
    const int dim = p.poly.dim();
    const QuadratureRule rule = gauss_legendre(quad_order);

    CompensatedSum total;
    std::vector<double> point(static_cast<std::size_t>(dim), 0.0);
    std::vector<int> free_axes;
    for (int axis = 0; axis < dim; ++axis) {
        free_axes.clear();
        for (int a = 0; a < dim; ++a) {
            if (a != axis) free_axes.push_back(a);
        }
        for (double sign : {-1.0, +1.0}) {
            std::fill(point.begin(), point.end(), 0.0);
            point[static_cast<std::size_t>(axis)] = sign * t;
            total.add(tensor_square_integral(p.poly, free_axes, point, t, rule));
        }
    }
    return total.value();
}

EnergyCurve energy_curve(const HarmonicPolynomial& p, double t_min, double t_max, int steps,
                         int quad_order, bool allow_nonharmonic) {
    require_harmonic(p, allow_nonharmonic);
    if (!(t_min > 0) || !(t_max > t_min)) {
        throw Error(ErrorCode::ParameterOutOfRange, "need 0 < t_min < t_max");
    }
    if (steps < 3) {
        throw Error(ErrorCode::ParameterOutOfRange, "need steps >= 3");
    }
    EnergyCurve curve;
    curve.quad_order = quad_order;
    curve.t_grid.reserve(static_cast<std::size_t>(steps));
    curve.E.reserve(static_cast<std::size_t>(steps));
    const double step = (t_max - t_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) {
        const double t = t_min + i * step;
        curve.t_grid.push_back(t);
        curve.E.push_back(boundary_energy(p, t, quad_order, allow_nonharmonic));
    }
    curve.second_diffs.reserve(static_cast<std::size_t>(steps) - 2);
    for (int i = 1; i + 1 < steps; ++i) {
        curve.second_diffs.push_back(curve.E[static_cast<std::size_t>(i) + 1] -
                                     2.0 * curve.E[static_cast<std::size_t>(i)] +
                                     curve.E[static_cast<std::size_t>(i) - 1]);
    }
    return curve;
}

DerivativeDecomposition derivative_decomposition(const HarmonicPolynomial& p, double t,
                                                 double h, int quad_order,
                                                 bool allow_nonharmonic) {
    require_harmonic(p, allow_nonharmonic);
    check_params(t, quad_order);
    if (h <= 0) h = t / 1000.0;
    if (!(h < t)) {
        throw Error(ErrorCode::ParameterOutOfRange, "need 0 < h < t");
    }
    const int dim = p.poly.dim();
    const QuadratureRule rule = gauss_legendre(quad_order);

    DerivativeDecomposition d;
    d.E_prime_fd = (boundary_energy(p, t + h, quad_order, allow_nonharmonic) -
                    boundary_energy(p, t - h, quad_order, allow_nonharmonic)) /
                   (2.0 * h);

    std::vector<Polynomial> grad;
    grad.reserve(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) grad.push_back(p.poly.derivative(a));
    std::vector<double> point(static_cast<std::size_t>(dim), 0.0);
    d.dirichlet_term = 2.0 * tensor_gradsq_integral(grad, point, t, rule);

    // (dim-2)-skeleton: every unordered axis pair pinned to a corner sign,
    // the remaining axes integrated over [-t,t].
    CompensatedSum skeleton;
    std::vector<int> free_axes;
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            free_axes.clear();
            for (int a = 0; a < dim; ++a) {
                if (a != i && a != j) free_axes.push_back(a);
            }
            for (double si : {-1.0, +1.0}) {
                for (double sj : {-1.0, +1.0}) {
                    std::fill(point.begin(), point.end(), 0.0);
                    point[static_cast<std::size_t>(i)] = si * t;
                    point[static_cast<std::size_t>(j)] = sj * t;
                    skeleton.add(tensor_square_integral(p.poly, free_axes, point, t, rule));
                }
            }
        }
    }
    d.skeleton_term = 2.0 * skeleton.value();
    return d;
}

void write_energy_csv(std::ostream& out, const HarmonicPolynomial& p, const EnergyCurve& curve,
                      double h, bool allow_nonharmonic) {
    out << "t,E,second_diff,E_prime_fd,dirichlet_term,skeleton_term\n";
    const std::size_t n = curve.t_grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double t = curve.t_grid[i];
        const DerivativeDecomposition d =
            derivative_decomposition(p, t, h, curve.quad_order, allow_nonharmonic);
        out << format_double(t) << ',' << format_double(curve.E[i]) << ',';
        if (i > 0 && i + 1 < n) out << format_double(curve.second_diffs[i - 1]);
        out << ',' << format_double(d.E_prime_fd) << ',' << format_double(d.dirichlet_term)
            << ',' << format_double(d.skeleton_term) << '\n';
    }
}

}  // namespace graphfreq
