#include "graphfreq/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "graphfreq/errors.hpp"
#include "graphfreq/graph_io.hpp"
#include "graphfreq/summation.hpp"

namespace graphfreq {

namespace {

void check_field_coverage(const LayerDecomposition& dec, const ScalarField& f) {
    if (f.values.size() != dec.dist.size() || f.interior.size() != dec.dist.size()) {
        throw Error(ErrorCode::MissingValue, "field does not cover every vertex");
    }
}

}  // namespace

LayerEnergies layer_energies(const LayerDecomposition& dec, const ScalarField& f) {
    check_field_coverage(dec, f);
    LayerEnergies e;
    e.S_in.reserve(dec.layers.size());
    e.S_out.reserve(dec.layers.size());
    for (const std::vector<int>& layer : dec.layers) {
        CompensatedSum in, out;
        for (int v : layer) {
            const double u2 = f.values[static_cast<std::size_t>(v)] *
                              f.values[static_cast<std::size_t>(v)];
            in.add(dec.d_in[static_cast<std::size_t>(v)] * u2);
            out.add(dec.d_out[static_cast<std::size_t>(v)] * u2);
        }
        e.S_in.push_back(in.value());
        e.S_out.push_back(out.value());
    }
    return e;
}

FrequencySeries frequency_series(const LayerDecomposition& dec, const ScalarField& f,
                                 double tol_mono) {
    if (!(tol_mono >= 0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "tol_mono must be >= 0");
    }
    LayerEnergies e = layer_energies(dec, f);
    FrequencySeries s;
    s.base = dec.base;
    s.S_in = std::move(e.S_in);
    s.S_out = std::move(e.S_out);
    s.tol_mono = tol_mono;
    for (double v : s.S_in) s.energy_scale = std::max(s.energy_scale, v);

    const int last = dec.last_layer();
    // Largest M with layers 0..M entirely interior.
    int all_interior_through = -1;
    for (int k = 0; k <= last; ++k) {
        bool all = true;
        for (int v : dec.layers[static_cast<std::size_t>(k)]) {
            if (!f.interior[static_cast<std::size_t>(v)]) {
                all = false;
                break;
            }
        }
        if (!all) break;
        all_interior_through = k;
    }
    // N(K) needs layers 0..K+1 interior and layer K+1 off the truncation
    // frontier (d_out on the outermost generated layer is not meaningful).
    const int frontier_cap = dec.truncated ? last - 2 : last - 1;
    s.horizon = std::min(all_interior_through - 1, frontier_cap);
    if (s.horizon < -1) s.horizon = -1;

    s.N.reserve(static_cast<std::size_t>(s.horizon + 1));
    for (int k = 0; k <= s.horizon; ++k) {
        s.N.push_back(s.S_in[static_cast<std::size_t>(k) + 1] -
                      s.S_out[static_cast<std::size_t>(k)]);
    }
    return s;
}

MonotoneReport verify_monotone(const FrequencySeries& s) {
    MonotoneReport r;
    r.tolerance = s.tol_mono * (1.0 + s.energy_scale);
    if (s.N.empty()) return r;  // vacuous pass

    r.min_value = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < s.N.size(); ++k) {
        if (s.N[k] < r.min_value) {
            r.min_value = s.N[k];
            r.argmin_value = static_cast<int>(k);
        }
    }
    if (s.N.size() >= 2) {
        r.min_increment = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k + 1 < s.N.size(); ++k) {
            const double d = s.N[k + 1] - s.N[k];
            if (d < r.min_increment) {
                r.min_increment = d;
                r.argmin_increment = static_cast<int>(k);
            }
        }
    } else {
        r.min_increment = 0.0;
    }
    r.pass = r.min_value >= -r.tolerance && r.min_increment >= -r.tolerance;
    return r;
}

std::string to_string(RegionClass c) {
    switch (c) {
        case RegionClass::Expansive: return "Expansive";
        case RegionClass::Contractive: return "Contractive";
        case RegionClass::Both: return "Both";
        case RegionClass::Neither: return "Neither";
    }
    return "Neither";
}

RegionClass classify_region(const LayerDecomposition& dec, int a, int b) {
    if (a < 0 || a > b || b > dec.last_reliable_layer()) {
        throw Error(ErrorCode::RangeOutOfBounds,
                    "region [" + std::to_string(a) + ", " + std::to_string(b) +
                        "] outside reliable layers 0.." +
                        std::to_string(dec.last_reliable_layer()));
    }
    bool expansive = true, contractive = true;
    for (int k = a; k <= b; ++k) {
        for (int v : dec.layers[static_cast<std::size_t>(k)]) {
            const double din = dec.d_in[static_cast<std::size_t>(v)];
            const double dout = dec.d_out[static_cast<std::size_t>(v)];
            if (dout < din) expansive = false;
            if (dout > din) contractive = false;
        }
    }
    if (expansive && contractive) return RegionClass::Both;
    if (expansive) return RegionClass::Expansive;
    if (contractive) return RegionClass::Contractive;
    return RegionClass::Neither;
}

DoublingReport doubling_check(const LayerDecomposition& dec, const FrequencySeries& s,
                              int a, int b) {
    if (a < 0 || a > b || b > s.horizon) {
        throw Error(ErrorCode::RangeOutOfBounds,
                    "doubling range [" + std::to_string(a) + ", " + std::to_string(b) +
                        "] outside horizon 0.." + std::to_string(s.horizon));
    }
    if (b + 1 > dec.last_layer()) {
        throw Error(ErrorCode::RangeOutOfBounds,
                    "layer " + std::to_string(b + 1) + " does not exist");
    }
    DoublingReport r;
    r.a = a;
    r.b = b;
    r.classification = classify_region(dec, a, b);
    r.lhs = s.S_in[static_cast<std::size_t>(b) + 1];
    const double width = static_cast<double>(b - a + 1);
    r.lower_bound = width * s.N[static_cast<std::size_t>(a)] + s.S_out[static_cast<std::size_t>(a)];
    r.upper_bound = width * s.N[static_cast<std::size_t>(b)] + s.S_out[static_cast<std::size_t>(a)];
    r.tolerance = s.tol_mono * (1.0 + s.energy_scale);
    r.lower_holds = r.lhs >= r.lower_bound - r.tolerance;
    r.upper_holds = r.lhs <= r.upper_bound + r.tolerance;
    return r;
}

std::vector<double> within_layer_quadratic(const Graph& g, const LayerDecomposition& dec,
                                           const ScalarField& f) {
    check_field_coverage(dec, f);
    std::vector<double> per_layer(dec.layers.size(), 0.0);
    std::vector<CompensatedSum> sums(dec.layers.size());
    for (int v = 0; v < g.vertex_count; ++v) {
        const auto nbs = g.neighbors(v);
        const auto ws = g.neighbor_weights(v);
        for (std::size_t i = 0; i < nbs.size(); ++i) {
            const int nb = nbs[i];
            if (nb <= v) continue;  // undirected edge once
            if (dec.dist[static_cast<std::size_t>(v)] != dec.dist[static_cast<std::size_t>(nb)]) {
                continue;
            }
            const double d = f.values[static_cast<std::size_t>(v)] -
                             f.values[static_cast<std::size_t>(nb)];
            sums[static_cast<std::size_t>(dec.dist[static_cast<std::size_t>(v)])].add(ws[i] * d *
                                                                                      d);
        }
    }
    for (std::size_t k = 0; k < sums.size(); ++k) per_layer[k] = sums[k].value();
    return per_layer;
}

void write_frequency_csv(std::ostream& out, const FrequencySeries& s) {
    out << "k,S_in_k,S_out_k,N_k,dN_k\n";
    for (int k = 0; k <= s.horizon; ++k) {
        out << k << ',' << format_double(s.S_in[static_cast<std::size_t>(k)]) << ','
            << format_double(s.S_out[static_cast<std::size_t>(k)]) << ','
            << format_double(s.N[static_cast<std::size_t>(k)]) << ',';
        if (k > 0) {
            out << format_double(s.N[static_cast<std::size_t>(k)] -
                                 s.N[static_cast<std::size_t>(k) - 1]);
        }
        out << '\n';
    }
}

}  // namespace graphfreq
