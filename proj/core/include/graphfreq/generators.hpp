#ifndef GRAPHFREQ_GENERATORS_HPP
#define GRAPHFREQ_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "graphfreq/graph.hpp"

namespace graphfreq {

// Generated graphs above this vertex count are refused (SizeLimit).
inline constexpr std::int64_t kGeneratorVertexCap = 8'000'000;

struct FamilySpec {
    enum class Kind { Tree, Lattice, EdgeList };
    Kind kind = Kind::Tree;
    int degree = 3;       // Tree: total degree of internal vertices
    int depth = 1;        // Tree: distance of the leaves from the root
    int dim = 2;          // Lattice
    int radius = 1;       // Lattice: l1 radius of the box
    std::string path;     // EdgeList
};

struct GeneratedGraph {
    Graph graph;
    int base = 0;  // root / origin
};

// Rooted tree in which every internal vertex has total degree `degree`;
// leaves sit at distance `depth`. Vertex ids are breadth-first from the root.
GeneratedGraph gen_tree(int degree, int depth, std::int64_t vertex_cap = kGeneratorVertexCap);

// All lattice points of Z^dim with l1 norm <= radius, unit-weight edges
// between l1-neighbors, labels carrying the coordinates. Ids are
// breadth-first from the origin (layer by layer, lexicographic within).
GeneratedGraph gen_lattice(int dim, int radius, std::int64_t vertex_cap = kGeneratorVertexCap);

// Reads the edge-list text format (one `u v w` per line, weight optional,
// `#` comment lines) and validates via build_graph.
Graph load_edge_list(const std::string& path);

GeneratedGraph generate(const FamilySpec& spec);

// Closed-form sizes, used for the SizeLimit precheck and exposed for tests.
std::int64_t tree_vertex_count(int degree, int depth);
std::int64_t lattice_vertex_count(int dim, int radius);

}  // namespace graphfreq

#endif
