#include <benchmark/benchmark.h>

#include "homext/homext_quiver.hpp"
#include "homext/twist.hpp"

using namespace homext;

namespace {

const AtildeQuiver& q5() {
    static AtildeQuiver q = build_atilde(OrientationVector::parse("+-+--"));
    return q;
}

void bm_graph_maps(benchmark::State& state) {
    StringModule a{1, 3, 3}, b{4, 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(graph_maps(q5(), a, b).size());
}
BENCHMARK(bm_graph_maps);

void bm_ext_basis(benchmark::State& state) {
    StringModule a{1, 3, 3}, b{4, 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(ext_basis(q5(), a, b).size());
}
BENCHMARK(bm_ext_basis);

void bm_oracle_hom_rational(benchmark::State& state) {
    GQuiver g = to_general(q5());
    RepQ a = realize(q5(), {1, 3, 3}), b = realize(q5(), {4, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(hom_dim(g, a, b, FieldMode::Rational));
}
BENCHMARK(bm_oracle_hom_rational);

void bm_oracle_hom_prime(benchmark::State& state) {
    GQuiver g = to_general(q5());
    RepQ a = realize(q5(), {1, 3, 3}), b = realize(q5(), {4, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(hom_dim(g, a, b, FieldMode::Prime));
}
BENCHMARK(bm_oracle_hom_prime);

void bm_intersection(benchmark::State& state) {
    MarkedAnnulus ann(q5().eps());
    Arc x{1, 2, 3}, y{3, 4, 2};
    for (auto _ : state) benchmark::DoNotOptimize(intersect_nontrivially(ann, x, y));
}
BENCHMARK(bm_intersection);

void bm_linear_extensions(benchmark::State& state) {
    // layered poset on 3x4 vertices
    QuiverWithRelations q;
    for (int v = 0; v < 12; ++v) q.vertices.push_back("v" + std::to_string(v));
    for (int layer = 0; layer + 1 < 4; ++layer)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                q.arrows.push_back({layer * 3 + a, (layer + 1) * 3 + b, -1});
    for (auto _ : state) benchmark::DoNotOptimize(count_linear_extensions(q));
}
BENCHMARK(bm_linear_extensions);

void bm_build_geometric(benchmark::State& state) {
    ModuleSet chi{build_atilde(OrientationVector::parse("+-+-")), {}};
    for (const char* text : {"(4,2;0)", "(1,3;0)", "(4,3;0)", "(3,4;0)"})
        chi.modules.push_back(StringModule::parse(text));
    for (auto _ : state) benchmark::DoNotOptimize(build_geometric(chi).quiver.arrows.size());
}
BENCHMARK(bm_build_geometric);

void bm_twist_orbit_step(benchmark::State& state) {
    ModuleSet chi{build_atilde(OrientationVector::parse("+-+-")), {}};
    for (const char* text : {"(4,2;0)", "(1,3;0)", "(4,3;0)", "(3,4;0)"})
        chi.modules.push_back(StringModule::parse(text));
    for (auto _ : state) benchmark::DoNotOptimize(twist_set(chi, {1, -1}).modules.size());
}
BENCHMARK(bm_twist_orbit_step);

}  // namespace

BENCHMARK_MAIN();
