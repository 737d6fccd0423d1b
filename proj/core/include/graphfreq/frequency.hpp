#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphfreq/graph.hpp"
#include "graphfreq/scalar_field.hpp"

namespace graphfreq {

// Per-layer boundary energies: S_in(k) and S_out(k) weight u(y)^2 by the
// inward / outward degree of y. S_in(0) = 0 since the base has no in-edges.
struct LayerEnergies {
    std::vector<double> S_in;
    std::vector<double> S_out;
};

LayerEnergies layer_energies(const LayerDecomposition& dec, const ScalarField& f);

// Frequency series N(k) = S_in(k+1) - S_out(k), trusted for k <= horizon.
// horizon is the largest K such that every vertex in layers 0..K+1 is
// interior and layer K+1 is not the truncation frontier; -1 when no k
// qualifies (an empty, not erroneous, series).
struct FrequencySeries {
    int base = 0;
    std::vector<double> S_in;   // k = 0 .. last layer
    std::vector<double> S_out;  // k = 0 .. last layer
    std::vector<double> N;      // k = 0 .. horizon
    int horizon = -1;
    double energy_scale = 0.0;  // max_k S_in(k)
    double tol_mono = 1e-8;
};

FrequencySeries frequency_series(const LayerDecomposition& dec, const ScalarField& f,
                                 double tol_mono = 1e-8);

// Checks N(k) >= -tol and N(k+1) - N(k) >= -tol over the horizon, with
// tol = tol_mono * (1 + energy_scale). Empty series passes vacuously.
struct MonotoneReport {
    bool pass = true;
    double tolerance = 0.0;
    double min_value = 0.0;
    int argmin_value = -1;
    double min_increment = 0.0;
    int argmin_increment = -1;
};

MonotoneReport verify_monotone(const FrequencySeries& s);

// Region classification over layers a..b: Expansive means d_out >= d_in at
// every vertex, Contractive means d_out <= d_in everywhere, Both means
// equality everywhere (equality vertices count toward both sides).
enum class RegionClass { Expansive, Contractive, Both, Neither };

std::string to_string(RegionClass c);

RegionClass classify_region(const LayerDecomposition& dec, int a, int b);

// Additive doubling bounds over the annulus a..b:
//   lhs         = S_in(b+1)
//   lower_bound = (b-a+1) * N(a) + S_out(a)   (holds when Expansive or Both)
//   upper_bound = (b-a+1) * N(b) + S_out(a)   (holds when Contractive or Both)
struct DoublingReport {
    int a = 0;
    int b = 0;
    RegionClass classification = RegionClass::Neither;
    double lhs = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    bool lower_holds = false;
    bool upper_holds = false;
    double tolerance = 0.0;
};

DoublingReport doubling_check(const LayerDecomposition& dec, const FrequencySeries& s,
                              int a, int b);

// Per-layer sum of w * (u(endpoint) - u(endpoint))^2 over lateral edges; each
// entry is a sum of squares and must come out nonnegative.
std::vector<double> within_layer_quadratic(const Graph& g, const LayerDecomposition& dec,
                                           const ScalarField& f);

// CSV with columns k,S_in_k,S_out_k,N_k,dN_k; one row per k in the horizon,
// dN blank at k = 0.
void write_frequency_csv(std::ostream& out, const FrequencySeries& s);

}  // namespace graphfreq
