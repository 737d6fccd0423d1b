#include "graphfreq/graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "graphfreq/summation.hpp"

namespace graphfreq {

namespace {

void build_adjacency(Graph& g) {
    const int n = g.vertex_count;
    g.adj_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : g.edges) {
        ++g.adj_offsets[static_cast<std::size_t>(e.u) + 1];
        ++g.adj_offsets[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
        g.adj_offsets[i] += g.adj_offsets[i - 1];
    }
    g.adj_vertex.resize(g.adj_offsets[n]);
    g.adj_weight.resize(g.adj_offsets[n]);
    std::vector<std::size_t> cursor(g.adj_offsets.begin(), g.adj_offsets.end() - 1);
    for (const auto& e : g.edges) {
        g.adj_vertex[cursor[e.u]] = e.v;
        g.adj_weight[cursor[e.u]++] = e.w;
        g.adj_vertex[cursor[e.v]] = e.u;
        g.adj_weight[cursor[e.v]++] = e.w;
    }
    // Sort each vertex's neighbor slice ascending so traversal order never
    // depends on edge input order.
    std::vector<std::pair<int, double>> scratch;
    for (int v = 0; v < n; ++v) {
        auto lo = g.adj_offsets[v], hi = g.adj_offsets[v + 1];
        scratch.clear();
        for (std::size_t i = lo; i < hi; ++i) scratch.emplace_back(g.adj_vertex[i], g.adj_weight[i]);
        std::sort(scratch.begin(), scratch.end());
        for (std::size_t i = lo; i < hi; ++i) {
            g.adj_vertex[i] = scratch[i - lo].first;
            g.adj_weight[i] = scratch[i - lo].second;
        }
    }
    g.wdeg.assign(n, 0.0);
    for (int v = 0; v < n; ++v) {
        CompensatedSum s;
        for (double w : g.neighbor_weights(v)) s.add(w);
        g.wdeg[v] = s.value();
    }
}

}  // namespace

Graph build_graph(const std::vector<WeightedEdge>& edge_list) {
    Graph g;
    int max_id = -1;
    for (const auto& e : edge_list) {
        if (e.u < 0 || e.v < 0) {
            throw Error(ErrorCode::InvalidVertex,
                        "vertex ids must be nonnegative, got (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ")");
        }
        max_id = std::max(max_id, std::max(e.u, e.v));
    }
    if (max_id < 0) {
        throw Error(ErrorCode::EmptyGraph, "edge list contains no vertices");
    }
    g.vertex_count = max_id + 1;

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edge_list.size() * 2);
    g.edges.reserve(edge_list.size());
    for (const auto& e : edge_list) {
        if (!(e.w > 0.0) || !std::isfinite(e.w)) {
            throw Error(ErrorCode::NonPositiveWeight,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has weight " + std::to_string(e.w));
        }
        if (e.u == e.v) {
            g.warnings.push_back("self-loop at vertex " + std::to_string(e.u) + " dropped");
            continue;
        }
        const std::uint64_t lo = static_cast<std::uint32_t>(std::min(e.u, e.v));
        const std::uint64_t hi = static_cast<std::uint32_t>(std::max(e.u, e.v));
        if (!seen.insert((hi << 32) | lo).second) {
            throw Error(ErrorCode::DuplicateEdge,
                        "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} appears more than once");
        }
        g.edges.push_back(e);
    }
    build_adjacency(g);
    return g;
}

Graph assemble_graph_unchecked(int vertex_count, std::vector<WeightedEdge> edge_list,
                               bool truncated) {
    Graph g;
    g.vertex_count = vertex_count;
    g.edges = std::move(edge_list);
    g.truncated = truncated;
    build_adjacency(g);
    return g;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count <= 0) return false;
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == g.vertex_count;
}

LayerDecomposition layer_decompose(const Graph& g, int base) {
    if (base < 0 || base >= g.vertex_count) {
        throw Error(ErrorCode::InvalidVertex, "base vertex " + std::to_string(base) +
                                                  " out of range [0," +
                                                  std::to_string(g.vertex_count) + ")");
    }

    LayerDecomposition dec;
    dec.base = base;
    dec.truncated = g.truncated;
    dec.dist.assign(g.vertex_count, -1);

    std::vector<int> frontier{base};
    dec.dist[base] = 0;
    int reached = 1;
    while (!frontier.empty()) {
        dec.layers.push_back(frontier);
        std::vector<int> next;
        for (int v : frontier) {
            for (int u : g.neighbors(v)) {
                if (dec.dist[u] < 0) {
                    dec.dist[u] = dec.dist[v] + 1;
                    next.push_back(u);
                    ++reached;
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    if (reached != g.vertex_count) {
        throw Error(ErrorCode::Disconnected,
                    std::to_string(g.vertex_count - reached) +
                        " vertices unreachable from base " + std::to_string(base));
    }

    dec.d_in.assign(g.vertex_count, 0.0);
    dec.d_out.assign(g.vertex_count, 0.0);
    dec.d_lat.assign(g.vertex_count, 0.0);
    const int n_layers = static_cast<int>(dec.layers.size());
    dec.interlayer_edges.assign(std::max(n_layers - 1, 0), {});

    for (int k = 0; k < n_layers; ++k) {
        for (int v : dec.layers[k]) {
            auto nbrs = g.neighbors(v);
            auto ws = g.neighbor_weights(v);
            CompensatedSum in, out, lat;
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const int d = dec.dist[nbrs[i]];
                if (d == k - 1) {
                    in.add(ws[i]);
                } else if (d == k + 1) {
                    out.add(ws[i]);
                    dec.interlayer_edges[k].push_back({v, nbrs[i], ws[i]});
                } else {
                    lat.add(ws[i]);
                }
            }
            dec.d_in[v] = in.value();
            dec.d_out[v] = out.value();
            dec.d_lat[v] = lat.value();
        }
    }
    return dec;
}

double flow_balance_error(const LayerDecomposition& dec) {
    double worst = 0.0;
    for (std::size_t k = 0; k < dec.interlayer_edges.size(); ++k) {
        CompensatedSum total, in_sum, out_sum;
        for (const auto& e : dec.interlayer_edges[k]) total.add(e.w);
        for (int v : dec.layers[k + 1]) in_sum.add(dec.d_in[v]);
        for (int v : dec.layers[k]) out_sum.add(dec.d_out[v]);
        const double t = total.value();
        const double scale = std::max(1.0, std::abs(t));
        worst = std::max(worst, std::abs(in_sum.value() - t) / scale);
        worst = std::max(worst, std::abs(out_sum.value() - t) / scale);
    }
    return worst;
}

}  // namespace graphfreq
