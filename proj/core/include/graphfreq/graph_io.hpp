#ifndef GRAPHFREQ_GRAPH_IO_HPP
#define GRAPHFREQ_GRAPH_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "graphfreq/graph.hpp"
#include "graphfreq/scalar_field.hpp"

namespace graphfreq {

// Edge-list text format: one edge per line as `u v w`, the weight optional
// (default 1.0); `#` starts a comment line; blank lines are ignored.
std::vector<WeightedEdge> parse_edge_list(std::istream& in, const std::string& source_name);

// Graph JSON: {"vertex_count": n, "edges": [[u,v,w],...], "labels": {...}?,
// "truncated": true?}. The truncated marker is written only when set so a
// reloaded truncation keeps its unreliable outer layer flagged.
void write_graph_json(const Graph& g, const std::string& path);
Graph read_graph_json(const std::string& path);

// ScalarField JSON: {"values": {"id": x, ...}, "interior": [ids],
// "max_residual": r}. Reading validates coverage of all vertex ids.
void write_field_json(const ScalarField& f, const std::string& path);
ScalarField read_field_json(const std::string& path, int vertex_count);

// Boundary data: a flat JSON object {"id": value, ...}.
std::map<int, double> read_boundary_json(const std::string& path);

// Shortest round-trip decimal form; used by every CSV/JSON emitter so output
// is byte-stable across runs.
std::string format_double(double x);

}  // namespace graphfreq

#endif
