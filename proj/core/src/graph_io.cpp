#include "graphfreq/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace graphfreq {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
    throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + what);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

int parse_vertex_id(const json& j, const std::string& path, const char* context) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw Error(ErrorCode::ParseError,
                    path + ": " + context + " must be a nonnegative integer");
    }
    return static_cast<int>(j.get<long long>());
}

}  // namespace

std::vector<WeightedEdge> parse_edge_list(std::istream& in, const std::string& source_name) {
    std::vector<WeightedEdge> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;  // blank or comment line

        WeightedEdge e;
        std::size_t pos = 0;
        try {
            e.u = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != tok.size() || e.u < 0) parse_fail(source_name, line_no, "bad vertex id '" + tok + "'");

        if (!(ls >> tok)) parse_fail(source_name, line_no, "missing second vertex id");
        try {
            e.v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != tok.size() || e.v < 0) parse_fail(source_name, line_no, "bad vertex id '" + tok + "'");

        e.w = 1.0;
        if (ls >> tok) {
            try {
                e.w = std::stod(tok, &pos);
            } catch (const std::exception&) {
                pos = std::string::npos;
            }
            if (pos != tok.size()) parse_fail(source_name, line_no, "bad weight '" + tok + "'");
            std::string extra;
            if (ls >> extra) parse_fail(source_name, line_no, "unexpected token '" + extra + "'");
        }
        edges.push_back(e);
    }
    return edges;
}

void write_graph_json(const Graph& g, const std::string& path) {
    json j;
    j["vertex_count"] = g.vertex_count;
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back(json::array({e.u, e.v, e.w}));
    j["edges"] = std::move(edges);
    if (!g.labels.empty()) {
        json labels = json::object();
        for (const auto& [v, text] : g.labels) labels[std::to_string(v)] = text;
        j["labels"] = std::move(labels);
    }
    if (g.truncated) j["truncated"] = true;
    write_text_file(path, j.dump(2) + "\n");
}

Graph read_graph_json(const std::string& path) {
    const json j = load_json_file(path);
    if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges")) {
        throw Error(ErrorCode::ParseError, path + ": expected object with vertex_count and edges");
    }
    const int vertex_count = parse_vertex_id(j["vertex_count"], path, "vertex_count");
    std::vector<WeightedEdge> edges;
    for (const auto& je : j["edges"]) {
        if (!je.is_array() || je.size() < 2 || je.size() > 3) {
            throw Error(ErrorCode::ParseError, path + ": edge entries must be [u,v] or [u,v,w]");
        }
        WeightedEdge e;
        e.u = parse_vertex_id(je[0], path, "edge endpoint");
        e.v = parse_vertex_id(je[1], path, "edge endpoint");
        e.w = je.size() == 3 ? je[2].get<double>() : 1.0;
        edges.push_back(e);
    }
    Graph g = build_graph(edges);
    if (g.vertex_count > vertex_count) {
        throw Error(ErrorCode::ParseError,
                    path + ": vertex_count " + std::to_string(vertex_count) +
                        " smaller than 1 + max edge endpoint");
    }
    if (vertex_count > g.vertex_count) {
        // Isolated tail vertices are legal in the serialized form.
        g = assemble_graph_unchecked(vertex_count, std::move(g.edges), false);
    }
    if (j.contains("labels")) {
        for (const auto& [key, value] : j["labels"].items()) {
            g.labels[std::stoi(key)] = value.get<std::string>();
        }
    }
    if (j.contains("truncated")) g.truncated = j["truncated"].get<bool>();
    return g;
}

void write_field_json(const ScalarField& f, const std::string& path) {
    json j;
    json values = json::object();
    for (std::size_t v = 0; v < f.values.size(); ++v) values[std::to_string(v)] = f.values[v];
    j["values"] = std::move(values);
    json interior = json::array();
    for (std::size_t v = 0; v < f.interior.size(); ++v) {
        if (f.interior[v]) interior.push_back(v);
    }
    j["interior"] = std::move(interior);
    j["max_residual"] = f.max_residual;
    write_text_file(path, j.dump(2) + "\n");
}

ScalarField read_field_json(const std::string& path, int vertex_count) {
    const json j = load_json_file(path);
    if (!j.is_object() || !j.contains("values") || !j.contains("interior")) {
        throw Error(ErrorCode::ParseError, path + ": expected object with values and interior");
    }
    ScalarField f;
    f.values.assign(vertex_count, 0.0);
    std::vector<char> present(vertex_count, 0);
    for (const auto& [key, value] : j["values"].items()) {
        const int v = std::stoi(key);
        if (v < 0 || v >= vertex_count) {
            throw Error(ErrorCode::InvalidVertex,
                        path + ": value for unknown vertex " + key);
        }
        f.values[v] = value.get<double>();
        present[v] = 1;
    }
    for (int v = 0; v < vertex_count; ++v) {
        if (!present[v]) {
            throw Error(ErrorCode::MissingValue,
                        path + ": no value for vertex " + std::to_string(v));
        }
    }
    f.interior.assign(vertex_count, 0);
    for (const auto& jv : j["interior"]) {
        const int v = parse_vertex_id(jv, path, "interior id");
        if (v >= vertex_count) {
            throw Error(ErrorCode::InvalidVertex, path + ": interior id " + std::to_string(v));
        }
        f.interior[v] = 1;
    }
    if (j.contains("max_residual") && j["max_residual"].is_number()) {
        f.max_residual = j["max_residual"].get<double>();
    }
    return f;
}

std::map<int, double> read_boundary_json(const std::string& path) {
    const json j = load_json_file(path);
    if (!j.is_object()) {
        throw Error(ErrorCode::ParseError, path + ": expected an object mapping ids to values");
    }
    std::map<int, double> boundary;
    for (const auto& [key, value] : j.items()) {
        int v;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, path + ": bad vertex id '" + key + "'");
        }
        if (!value.is_number()) {
            throw Error(ErrorCode::ParseError, path + ": value for vertex " + key + " not a number");
        }
        boundary[v] = value.get<double>();
    }
    return boundary;
}

std::string format_double(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace graphfreq
