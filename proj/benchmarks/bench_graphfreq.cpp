// Microbenchmarks for the hot paths: generation, layering, the frequency
// series, the Dirichlet solver, and cube-boundary quadrature.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "graphfreq/cube_energy.hpp"
#include "graphfreq/frequency.hpp"
#include "graphfreq/generators.hpp"
#include "graphfreq/harmonic.hpp"

namespace gf = graphfreq;

namespace {

void BM_gen_tree(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        gf::GeneratedGraph gen = gf::gen_tree(3, depth);
        benchmark::DoNotOptimize(gen.graph.vertex_count);
    }
    state.SetItemsProcessed(state.iterations() * gf::tree_vertex_count(3, depth));
}
BENCHMARK(BM_gen_tree)->Arg(8)->Arg(12)->Arg(16);

void BM_layer_decompose(benchmark::State& state) {
    const int radius = static_cast<int>(state.range(0));
    const gf::GeneratedGraph gen = gf::gen_lattice(2, radius);
    for (auto _ : state) {
        gf::LayerDecomposition dec = gf::layer_decompose(gen.graph, gen.base);
        benchmark::DoNotOptimize(dec.layers.size());
    }
    state.SetItemsProcessed(state.iterations() * gen.graph.vertex_count);
}
BENCHMARK(BM_layer_decompose)->Arg(30)->Arg(100)->Arg(300);

void BM_frequency_series(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    const gf::TreeExample ex = gf::tree_example(depth);
    const gf::LayerDecomposition dec = gf::layer_decompose(ex.graph, ex.base);
    for (auto _ : state) {
        gf::FrequencySeries s = gf::frequency_series(dec, ex.field);
        benchmark::DoNotOptimize(s.N.data());
    }
    state.SetItemsProcessed(state.iterations() * ex.graph.vertex_count);
}
BENCHMARK(BM_frequency_series)->Arg(10)->Arg(14)->Arg(18);

void BM_solve_dirichlet(benchmark::State& state) {
    const int radius = static_cast<int>(state.range(0));
    const gf::GeneratedGraph gen = gf::gen_lattice(2, radius);
    const gf::ScalarField exact = gf::lattice_polynomial_field(
        gen.graph, gf::parse_polynomial("x*y", 2));
    const gf::LayerDecomposition dec = gf::layer_decompose(gen.graph, gen.base);
    std::map<int, double> boundary;
    for (int v : dec.layers.back()) boundary[v] = exact.values[v];
    for (auto _ : state) {
        gf::DirichletResult r = gf::solve_dirichlet(gen.graph, boundary, 1e-10);
        benchmark::DoNotOptimize(r.residual_norm);
    }
    state.SetItemsProcessed(state.iterations() * gen.graph.vertex_count);
}
BENCHMARK(BM_solve_dirichlet)->Arg(10)->Arg(20)->Arg(40);

void BM_boundary_energy(benchmark::State& state) {
    const int quad_order = static_cast<int>(state.range(0));
    const gf::HarmonicPolynomial p2 = gf::make_polynomial(gf::harmonic_re(4));
    const gf::HarmonicPolynomial p3 =
        gf::make_polynomial(gf::parse_polynomial("x*y*z", 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf::boundary_energy(p2, 1.5, quad_order));
        benchmark::DoNotOptimize(gf::boundary_energy(p3, 1.5, quad_order));
    }
}
BENCHMARK(BM_boundary_energy)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
