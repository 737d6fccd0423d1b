#ifndef GRAPHFREQ_GRAPH_HPP
#define GRAPHFREQ_GRAPH_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "graphfreq/errors.hpp"

namespace graphfreq {

struct WeightedEdge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

// Undirected, locally finite, weighted graph over dense integer vertex ids.
// Immutable after construction; adjacency is CSR with neighbors sorted
// ascending, so every traversal below is order-independent of the input.
struct Graph {
    int vertex_count = 0;
    std::vector<WeightedEdge> edges;          // canonical list, self-loops removed
    std::map<int, std::string> labels;        // optional (lattice coordinates etc.)
    bool truncated = false;                   // finite truncation of an infinite family
    std::vector<std::string> warnings;        // e.g. dropped self-loops

    std::span<const int> neighbors(int v) const {
        return {adj_vertex.data() + adj_offsets[v], adj_offsets[v + 1] - adj_offsets[v]};
    }
    std::span<const double> neighbor_weights(int v) const {
        return {adj_weight.data() + adj_offsets[v], adj_offsets[v + 1] - adj_offsets[v]};
    }
    double weighted_degree(int v) const { return wdeg[v]; }

    // CSR adjacency, filled by build_graph / the generators.
    std::vector<std::size_t> adj_offsets;
    std::vector<int> adj_vertex;
    std::vector<double> adj_weight;
    std::vector<double> wdeg;
};

// Validates an edge list and assembles the graph. Self-loops are dropped with
// a recorded warning; vertex_count becomes 1 + max id seen.
Graph build_graph(const std::vector<WeightedEdge>& edge_list);

// Assembles adjacency for edges the caller guarantees are valid (generators).
Graph assemble_graph_unchecked(int vertex_count, std::vector<WeightedEdge> edge_list,
                               bool truncated);

bool is_connected(const Graph& g);

// Distance layers V_0, V_1, ... from a base vertex, with per-vertex weighted
// degrees split by layer: d_in toward the base, d_out away from it, d_lat
// within the vertex's own layer. Distances are hop counts; weights enter the
// degrees only.
struct LayerDecomposition {
    int base = 0;
    std::vector<std::vector<int>> layers;     // each sorted ascending by id
    std::vector<int> dist;
    std::vector<double> d_in;
    std::vector<double> d_out;
    std::vector<double> d_lat;
    std::vector<std::vector<WeightedEdge>> interlayer_edges;  // E_k: V_k -> V_{k+1}
    bool truncated = false;

    int last_layer() const { return static_cast<int>(layers.size()) - 1; }
    // When the graph is a truncation, d_out on the outermost layer is
    // meaningless (the clipped edges are missing).
    int last_reliable_layer() const { return last_layer() - (truncated ? 1 : 0); }
};

LayerDecomposition layer_decompose(const Graph& g, int base);

// Largest relative discrepancy of sum(d_in over V_{k+1}) and
// sum(d_out over V_k) against the total weight of E_k, over all k.
double flow_balance_error(const LayerDecomposition& dec);

}  // namespace graphfreq

#endif
