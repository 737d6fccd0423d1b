#include "graphfreq/generators.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "graphfreq/graph_io.hpp"

namespace graphfreq {

std::int64_t tree_vertex_count(int degree, int depth) {
    std::int64_t total = 1;
    std::int64_t layer = degree;  // |V_1|
    for (int k = 1; k <= depth; ++k) {
        total += layer;
        if (total > kGeneratorVertexCap * 4) return total;  // saturate, caller checks
        layer *= degree - 1;
    }
    return total;
}

std::int64_t lattice_vertex_count(int dim, int radius) {
    const std::int64_t saturated = kGeneratorVertexCap * 4;
    if (radius > kGeneratorVertexCap * 2) return saturated;  // already 2r+1 > cap in dim 1
    // f(d, r) = #{x in Z^d : |x|_1 <= r}, by summing over the last coordinate.
    std::vector<std::int64_t> f(radius + 1, 1);  // d = 0
    for (int d = 1; d <= dim; ++d) {
        std::vector<std::int64_t> g(radius + 1, 0);
        for (int r = 0; r <= radius; ++r) {
            std::int64_t total = f[r];  // x_d = 0
            for (int j = 1; j <= r && total < saturated; ++j) total += 2 * f[r - j];
            g[r] = std::min(total, saturated);
        }
        f = std::move(g);
    }
    return f[radius];
}

GeneratedGraph gen_tree(int degree, int depth, std::int64_t vertex_cap) {
    if (degree < 2) throw Error(ErrorCode::ParameterOutOfRange, "tree degree must be >= 2");
    if (depth < 1) throw Error(ErrorCode::ParameterOutOfRange, "tree depth must be >= 1");
    const std::int64_t n = tree_vertex_count(degree, depth);
    if (n > vertex_cap) {
        throw Error(ErrorCode::SizeLimit, "tree would have " + std::to_string(n) +
                                              " vertices (cap " + std::to_string(vertex_cap) + ")");
    }

    std::vector<WeightedEdge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    int next_id = 1;
    int layer_begin = 0, layer_end = 1;  // ids of the current layer
    for (int k = 0; k < depth; ++k) {
        const int children = (k == 0) ? degree : degree - 1;
        for (int v = layer_begin; v < layer_end; ++v) {
            for (int c = 0; c < children; ++c) {
                edges.push_back({v, next_id++, 1.0});
            }
        }
        layer_begin = layer_end;
        layer_end = next_id;
    }
    return {assemble_graph_unchecked(next_id, std::move(edges), true), 0};
}

namespace {

// Points of l1 norm exactly `budget` over `axes` coordinates, lexicographic.
void enumerate_sphere(std::vector<int>& point, int axis, int budget,
                      std::vector<std::vector<int>>& out) {
    const int axes_left = static_cast<int>(point.size()) - axis;
    if (axes_left == 1) {
        if (budget == 0) {
            point[axis] = 0;
            out.push_back(point);
        } else {
            point[axis] = -budget;
            out.push_back(point);
            point[axis] = budget;
            out.push_back(point);
        }
        return;
    }
    for (int x = -budget; x <= budget; ++x) {
        point[axis] = x;
        enumerate_sphere(point, axis + 1, budget - std::abs(x), out);
    }
}

std::string coordinate_label(const std::vector<int>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    s += ')';
    return s;
}

}  // namespace

GeneratedGraph gen_lattice(int dim, int radius, std::int64_t vertex_cap) {
    if (dim < 1) throw Error(ErrorCode::ParameterOutOfRange, "lattice dim must be >= 1");
    if (radius < 1) throw Error(ErrorCode::ParameterOutOfRange, "lattice radius must be >= 1");
    const std::int64_t n = lattice_vertex_count(dim, radius);
    if (n > vertex_cap) {
        throw Error(ErrorCode::SizeLimit, "lattice would have " + std::to_string(n) +
                                              " vertices (cap " + std::to_string(vertex_cap) + ")");
    }

    std::vector<std::vector<int>> points;
    points.reserve(static_cast<std::size_t>(n));
    std::vector<int> scratch(dim, 0);
    for (int k = 0; k <= radius; ++k) enumerate_sphere(scratch, 0, k, points);

    // Lexicographic index for neighbor lookups.
    std::vector<int> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return points[a] < points[b]; });
    auto find_id = [&](const std::vector<int>& p) -> int {
        auto it = std::lower_bound(order.begin(), order.end(), p,
                                   [&](int a, const std::vector<int>& q) { return points[a] < q; });
        if (it == order.end() || points[*it] != p) return -1;
        return *it;
    };

    std::vector<WeightedEdge> edges;
    edges.reserve(points.size() * dim);
    std::vector<int> q;
    for (std::size_t id = 0; id < points.size(); ++id) {
        q = points[id];
        for (int axis = 0; axis < dim; ++axis) {
            for (int step : {-1, +1}) {
                q[axis] += step;
                const int nb = find_id(q);
                if (nb > static_cast<int>(id)) edges.push_back({static_cast<int>(id), nb, 1.0});
                q[axis] -= step;
            }
        }
    }

    Graph g = assemble_graph_unchecked(static_cast<int>(points.size()), std::move(edges), true);
    for (std::size_t id = 0; id < points.size(); ++id) {
        g.labels[static_cast<int>(id)] = coordinate_label(points[id]);
    }
    return {std::move(g), 0};
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    return build_graph(parse_edge_list(in, path));
}

GeneratedGraph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Tree:
            return gen_tree(spec.degree, spec.depth);
        case FamilySpec::Kind::Lattice:
            return gen_lattice(spec.dim, spec.radius);
        case FamilySpec::Kind::EdgeList:
            return {load_edge_list(spec.path), 0};
    }
    throw Error(ErrorCode::ParameterOutOfRange, "unknown family kind");
}

}  // namespace graphfreq
