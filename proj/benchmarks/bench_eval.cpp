// Microbenchmarks for the exact-arithmetic hot paths: signature
// diagonalization, the closed-form evaluators, the axiom-reduction oracle,
// and the end-to-end distinguisher.

#include <vector>

#include <benchmark/benchmark.h>

#include "gwzero/distinguish.hpp"
#include "gwzero/gw.hpp"
#include "gwzero/manifest.hpp"

namespace {

using namespace gwzero;

Manifold4 make_x1() {
    Manifold4 k3("K3", parse_form_expression("3H+2E8-"), IVec(22, 0), true, true);
    return blow_up(k3, "E");
}

Class2 exceptional23() {
    IVec e(23, 0);
    e[22] = 1;
    return Class2{e};
}

void BM_signature_k3(benchmark::State& state) {
    const auto L = parse_form_expression("3H+2E8-");
    for (auto _ : state) benchmark::DoNotOptimize(signature(L));
}
BENCHMARK(BM_signature_k3);

void BM_inverse_unimodular_k3(benchmark::State& state) {
    const auto L = parse_form_expression("3H+2E8-");
    for (auto _ : state) benchmark::DoNotOptimize(inverse_unimodular(L));
}
BENCHMARK(BM_inverse_unimodular_k3);

void BM_eval4_tower(benchmark::State& state) {
    const auto x1 = make_x1();
    const auto e = exceptional23();
    const auto pd = pd_class(x1, e);
    const GWQuery4 q{&x1, e,
                     std::vector<CohoClass4>(static_cast<std::size_t>(state.range(0)), pd)};
    for (auto _ : state) benchmark::DoNotOptimize(eval_4(q));
}
BENCHMARK(BM_eval4_tower)->Arg(1)->Arg(10);

void BM_reduce4_tower(benchmark::State& state) {
    const auto x1 = make_x1();
    const auto e = exceptional23();
    const auto pd = pd_class(x1, e);
    const GWQuery4 q{&x1, e,
                     std::vector<CohoClass4>(static_cast<std::size_t>(state.range(0)), pd)};
    for (auto _ : state) benchmark::DoNotOptimize(reduce_via_axioms(q));
}
BENCHMARK(BM_reduce4_tower)->Arg(1)->Arg(10);

void BM_eval6_witness(benchmark::State& state) {
    const auto x1 = make_x1();
    const auto s = stabilize(x1);
    const auto e = exceptional23();
    const GWQuery6 q{&s, pushforward(e), {pd_of_pushforward(s, e)}};
    for (auto _ : state) benchmark::DoNotOptimize(eval_6(q));
}
BENCHMARK(BM_eval6_witness);

void BM_distinguish_pair(benchmark::State& state) {
    const auto x1 = make_x1();
    IVec b(23, 0);
    b[0] = 1;
    b[3] = 1;
    const Manifold4 x2("X2", parse_form_expression("3<1>+20<-1>"), IVec(23, 1), true, true,
                       {}, {SphereClass{Class2{b}, 0, true}});
    for (auto _ : state) benchmark::DoNotOptimize(distinguish_stabilized(x1, x2));
}
BENCHMARK(BM_distinguish_pair);

}  // namespace

BENCHMARK_MAIN();
