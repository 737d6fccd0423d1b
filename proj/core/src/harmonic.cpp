#include "graphfreq/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "graphfreq/generators.hpp"
#include "graphfreq/summation.hpp"

namespace graphfreq {

namespace {

void check_field_shape(const Graph& g, const ScalarField& f) {
    if (static_cast<int>(f.values.size()) != g.vertex_count ||
        static_cast<int>(f.interior.size()) != g.vertex_count) {
        throw Error(ErrorCode::ParameterOutOfRange, "field size does not match vertex count");
    }
}

}  // namespace

std::vector<double> harmonic_defects(const Graph& g, const ScalarField& f) {
    check_field_shape(g, f);
    std::vector<double> defect(static_cast<std::size_t>(g.vertex_count), 0.0);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (!f.interior[static_cast<std::size_t>(v)]) continue;
        const auto nbs = g.neighbors(v);
        const auto ws = g.neighbor_weights(v);
        CompensatedSum s;
        for (std::size_t i = 0; i < nbs.size(); ++i) {
            s.add(ws[i] * (f.values[static_cast<std::size_t>(nbs[i])] -
                           f.values[static_cast<std::size_t>(v)]));
        }
        defect[static_cast<std::size_t>(v)] = s.value();
    }
    return defect;
}

double harmonic_residual(const Graph& g, ScalarField& f) {
    const std::vector<double> defect = harmonic_defects(g, f);
    double worst = 0.0;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (f.interior[static_cast<std::size_t>(v)]) {
            worst = std::max(worst, std::abs(defect[static_cast<std::size_t>(v)]));
        }
    }
    f.max_residual = worst;
    return worst;
}

DirichletResult solve_dirichlet(const Graph& g, const std::map<int, double>& boundary,
                                double tol, int max_iter) {
    if (boundary.empty()) {
        throw Error(ErrorCode::InconsistentBoundary, "boundary is empty");
    }
    if (!(tol > 0) || max_iter < 1) {
        throw Error(ErrorCode::ParameterOutOfRange, "tol must be > 0 and max_iter >= 1");
    }
    double bscale = 0.0;
    for (const auto& [v, val] : boundary) {
        if (v < 0 || v >= g.vertex_count) {
            throw Error(ErrorCode::InconsistentBoundary,
                        "boundary vertex " + std::to_string(v) + " is not in the graph");
        }
        if (!std::isfinite(val)) {
            throw Error(ErrorCode::InconsistentBoundary,
                        "boundary value at vertex " + std::to_string(v) + " is not finite");
        }
        bscale = std::max(bscale, std::abs(val));
    }
    if (!is_connected(g)) {
        throw Error(ErrorCode::Disconnected, "graph must be connected to solve");
    }

    const int n = g.vertex_count;
    DirichletResult result;
    result.field.values.assign(static_cast<std::size_t>(n), 0.0);
    result.field.interior.assign(static_cast<std::size_t>(n), 1);
    for (const auto& [v, val] : boundary) {
        result.field.values[static_cast<std::size_t>(v)] = val;
        result.field.interior[static_cast<std::size_t>(v)] = 0;
    }

    // Compact index for interior vertices.
    std::vector<int> interior_of(static_cast<std::size_t>(n), -1);
    std::vector<int> vertex_of;
    for (int v = 0; v < n; ++v) {
        if (result.field.interior[static_cast<std::size_t>(v)]) {
            interior_of[static_cast<std::size_t>(v)] = static_cast<int>(vertex_of.size());
            vertex_of.push_back(v);
        }
    }
    const std::size_t m = vertex_of.size();
    if (m == 0) {
        result.residual_norm = 0.0;
        result.field.max_residual = 0.0;
        return result;
    }

    // A x = b with A the interior block of the weighted Laplacian:
    // (A x)_i = wdeg(v_i) x_i - sum over interior neighbors of w * x_j,
    // b_i = sum over boundary neighbors of w * boundary value.
    auto apply_A = [&](const std::vector<double>& x, std::vector<double>& out) {
        for (std::size_t i = 0; i < m; ++i) {
            const int v = vertex_of[i];
            const auto nbs = g.neighbors(v);
            const auto ws = g.neighbor_weights(v);
            CompensatedSum s;
            s.add(g.weighted_degree(v) * x[i]);
            for (std::size_t e = 0; e < nbs.size(); ++e) {
                const int j = interior_of[static_cast<std::size_t>(nbs[e])];
                if (j >= 0) s.add(-ws[e] * x[static_cast<std::size_t>(j)]);
            }
            out[i] = s.value();
        }
    };

    std::vector<double> b(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const int v = vertex_of[i];
        const auto nbs = g.neighbors(v);
        const auto ws = g.neighbor_weights(v);
        CompensatedSum s;
        for (std::size_t e = 0; e < nbs.size(); ++e) {
            const int nb = nbs[e];
            if (interior_of[static_cast<std::size_t>(nb)] < 0) {
                s.add(ws[e] * result.field.values[static_cast<std::size_t>(nb)]);
            }
        }
        b[i] = s.value();
    }

    const double target = tol * (1.0 + bscale);
    std::vector<double> x(m, 0.0), r(m), z(m), p(m), Ap(m);
    apply_A(x, Ap);
    for (std::size_t i = 0; i < m; ++i) r[i] = b[i] - Ap[i];

    auto inf_norm = [](const std::vector<double>& v) {
        double worst = 0.0;
        for (double t : v) worst = std::max(worst, std::abs(t));
        return worst;
    };
    auto dot = [m](const std::vector<double>& a, const std::vector<double>& c) {
        CompensatedSum s;
        for (std::size_t i = 0; i < m; ++i) s.add(a[i] * c[i]);
        return s.value();
    };

    // Jacobi preconditioner: M = diag(A) = weighted degrees, all positive.
    std::vector<double> inv_diag(m);
    for (std::size_t i = 0; i < m; ++i) inv_diag[i] = 1.0 / g.weighted_degree(vertex_of[i]);

    int iterations = 0;
    double rz = 0.0;
    bool converged = inf_norm(r) <= target;
    if (!converged) {
        for (std::size_t i = 0; i < m; ++i) z[i] = inv_diag[i] * r[i];
        p = z;
        rz = dot(r, z);
    }
    while (!converged && iterations < max_iter) {
        apply_A(p, Ap);
        const double pAp = dot(p, Ap);
        if (!(pAp > 0)) break;  // loss of positive definiteness in finite precision
        const double alpha = rz / pAp;
        for (std::size_t i = 0; i < m; ++i) x[i] += alpha * p[i];
        ++iterations;
        if (iterations % 50 == 0) {
            apply_A(x, Ap);  // refresh the residual from scratch now and then
            for (std::size_t i = 0; i < m; ++i) r[i] = b[i] - Ap[i];
        } else {
            for (std::size_t i = 0; i < m; ++i) r[i] -= alpha * Ap[i];
        }
        if (inf_norm(r) <= target) {
            // Accept only on a freshly recomputed residual.
            apply_A(x, Ap);
            for (std::size_t i = 0; i < m; ++i) r[i] = b[i] - Ap[i];
            if (inf_norm(r) <= target) {
                converged = true;
                break;
            }
        }
        for (std::size_t i = 0; i < m; ++i) z[i] = inv_diag[i] * r[i];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < m; ++i) p[i] = z[i] + beta * p[i];
    }

    apply_A(x, Ap);
    for (std::size_t i = 0; i < m; ++i) r[i] = b[i] - Ap[i];
    const double final_residual = inf_norm(r);
    if (final_residual > target) {
        throw Error(ErrorCode::NoConvergence,
                    "residual " + std::to_string(final_residual) + " above target " +
                        std::to_string(target) + " after " + std::to_string(iterations) +
                        " iterations");
    }

    for (std::size_t i = 0; i < m; ++i) {
        result.field.values[static_cast<std::size_t>(vertex_of[i])] = x[i];
    }
    result.iterations = iterations;
    result.residual_norm = final_residual;
    result.field.max_residual = final_residual;
    return result;
}

TreeExample tree_example(int depth) {
    if (depth < 2) {
        throw Error(ErrorCode::ParameterOutOfRange, "tree example needs depth >= 2");
    }
    GeneratedGraph gen = gen_tree(3, depth);
    TreeExample ex;
    ex.graph = std::move(gen.graph);
    ex.base = gen.base;

    const int n = ex.graph.vertex_count;
    ex.field.values.assign(static_cast<std::size_t>(n), 0.0);
    ex.field.interior.assign(static_cast<std::size_t>(n), 0);

    // a_k = 2 - 2^(1-k): a_0 = 0, a_1 = 1, and a_(k-1) + 2 a_(k+1) = 3 a_k,
    // so the branch field is harmonic at every internal vertex.
    std::vector<double> a(static_cast<std::size_t>(depth) + 1);
    for (int k = 0; k <= depth; ++k) a[static_cast<std::size_t>(k)] = 2.0 - std::ldexp(1.0, 1 - k);

    // Vertex ids are in breadth-first order, so a forward sweep sees parents
    // before children. sign: +1 / -1 / 0 on the three root branches.
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> sign(static_cast<std::size_t>(n), 0);
    dist[0] = 0;
    static const int kBranchSign[3] = {+1, -1, 0};
    for (int v = 0; v < n; ++v) {
        for (int nb : ex.graph.neighbors(v)) {
            if (nb <= v || dist[static_cast<std::size_t>(nb)] != -1) continue;
            dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(v)] + 1;
            sign[static_cast<std::size_t>(nb)] = v == 0 ? kBranchSign[nb - 1]
                                                        : sign[static_cast<std::size_t>(v)];
        }
    }
    for (int v = 0; v < n; ++v) {
        const int k = dist[static_cast<std::size_t>(v)];
        ex.field.values[static_cast<std::size_t>(v)] =
            sign[static_cast<std::size_t>(v)] * a[static_cast<std::size_t>(k)];
        ex.field.interior[static_cast<std::size_t>(v)] = k < depth ? 1 : 0;
    }
    harmonic_residual(ex.graph, ex.field);

    // N(k) = 8 - 3/2^(k-1), valid through layer depth-2 on the truncated tree.
    ex.expected_frequency.reserve(static_cast<std::size_t>(depth) - 1);
    for (int k = 0; k <= depth - 2; ++k) {
        ex.expected_frequency.push_back(8.0 - 3.0 * std::ldexp(1.0, 1 - k));
    }
    return ex;
}

namespace {

std::vector<std::int64_t> parse_label_coords(const std::string& label, int dim, int vertex) {
    std::vector<std::int64_t> coords;
    std::size_t i = 0;
    auto fail = [&]() -> void {
        throw Error(ErrorCode::ParseError, "vertex " + std::to_string(vertex) +
                                               " label \"" + label +
                                               "\" is not a coordinate tuple");
    };
    if (i >= label.size() || label[i] != '(') fail();
    ++i;
    while (true) {
        std::size_t j = i;
        if (j < label.size() && label[j] == '-') ++j;
        std::size_t digits_begin = j;
        while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) ++j;
        if (j == digits_begin) fail();
        coords.push_back(std::stoll(label.substr(i, j - i)));
        i = j;
        if (i < label.size() && label[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= label.size() || label[i] != ')' || i + 1 != label.size()) fail();
    if (static_cast<int>(coords.size()) != dim) {
        throw Error(ErrorCode::ParameterOutOfRange,
                    "vertex " + std::to_string(vertex) + " has " +
                        std::to_string(coords.size()) + " coordinates, polynomial expects " +
                        std::to_string(dim));
    }
    return coords;
}

}  // namespace

ScalarField lattice_polynomial_field(const Graph& g, const Polynomial& p,
                                     bool require_harmonic) {
    const int dim = p.dim();
    ScalarField f;
    f.values.assign(static_cast<std::size_t>(g.vertex_count), 0.0);
    f.interior.assign(static_cast<std::size_t>(g.vertex_count), 0);

    const Polynomial disc = p.discrete_laplacian();
    std::vector<Rational> point(static_cast<std::size_t>(dim));
    for (int v = 0; v < g.vertex_count; ++v) {
        auto it = g.labels.find(v);
        if (it == g.labels.end()) {
            throw Error(ErrorCode::MissingValue,
                        "vertex " + std::to_string(v) + " has no coordinate label");
        }
        const std::vector<std::int64_t> coords = parse_label_coords(it->second, dim, v);
        for (int i = 0; i < dim; ++i) point[static_cast<std::size_t>(i)] = Rational(coords[static_cast<std::size_t>(i)]);
        f.values[static_cast<std::size_t>(v)] = p.evaluate_exact(point).to_double();
        const bool interior = g.neighbors(v).size() == static_cast<std::size_t>(2 * dim);
        f.interior[static_cast<std::size_t>(v)] = interior ? 1 : 0;
        if (interior && require_harmonic && !disc.evaluate_exact(point).is_zero()) {
            throw Error(ErrorCode::NotDiscreteHarmonic,
                        "polynomial " + p.to_string() + " fails the mean-value property at " +
                            it->second);
        }
    }
    f.max_residual = 0.0;
    if (!require_harmonic) {
        ScalarField probe = f;
        f.max_residual = harmonic_residual(g, probe);
    }
    return f;
}

}  // namespace graphfreq
