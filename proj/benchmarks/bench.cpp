#include <benchmark/benchmark.h>

#include "pidisc/discriminant.hpp"
#include "pidisc/fiber.hpp"
#include "pidisc/weyl.hpp"

using namespace pidisc;

namespace {

WeylAlgebra weyl(const FieldSpec& f, std::vector<unsigned> lambda, std::vector<std::uint64_t> d) {
    WeylParams p;
    p.field = f;
    p.lambda = std::move(lambda);
    for (auto di : d) p.epsilon.push_back(root_of_unity(f, di));
    std::size_t n = p.epsilon.size();
    p.chi.assign(n, std::vector<Scalar>(n, Scalar::one(f)));
    return build_weyl(p);
}

void bm_weyl_build_d3(benchmark::State& state) {
    FieldSpec f = FieldSpec::prime(13);
    for (auto _ : state) {
        WeylAlgebra w = weyl(f, {1}, {3});
        benchmark::DoNotOptimize(w.alg.size());
    }
}
BENCHMARK(bm_weyl_build_d3)->Unit(benchmark::kMillisecond);

void bm_gram_regular_trace(benchmark::State& state) {
    FieldSpec f = FieldSpec::prime(13);
    WeylAlgebra w = weyl(f, {1, 1}, {2, 2});
    TraceMap tr = TraceMap::regular(w.alg);
    for (auto _ : state) {
        GramMatrix g = gram(w.alg, tr);
        benchmark::DoNotOptimize(g.mat.rows());
    }
}
BENCHMARK(bm_gram_regular_trace)->Unit(benchmark::kMillisecond);

void bm_bareiss_16(benchmark::State& state) {
    FieldSpec f = FieldSpec::prime(13);
    WeylAlgebra w = weyl(f, {1, 1}, {2, 2});
    TraceMap tr = TraceMap::regular(w.alg);
    GramMatrix g = gram(w.alg, tr);
    for (auto _ : state) {
        MultiPoly d = bareiss_det(g.mat);
        benchmark::DoNotOptimize(d.terms().size());
    }
}
BENCHMARK(bm_bareiss_16)->Unit(benchmark::kMillisecond);

void bm_bareiss_9_rational(benchmark::State& state) {
    FieldSpec f = FieldSpec::rationals();
    WeylAlgebra w = weyl(f, {1, 1}, {2, 2});
    TraceMap tr = TraceMap::regular(w.alg);
    GramMatrix g = gram(w.alg, tr);
    std::vector<std::size_t> idx = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    PolyMatrix sub = g.mat.submatrix(idx, idx);
    for (auto _ : state) {
        MultiPoly d = bareiss_det(sub);
        benchmark::DoNotOptimize(d.terms().size());
    }
}
BENCHMARK(bm_bareiss_9_rational)->Unit(benchmark::kMillisecond);

void bm_fiber_analysis(benchmark::State& state) {
    FieldSpec f = FieldSpec::prime(13);
    WeylAlgebra w = weyl(f, {1}, {2});
    std::vector<TraceMap> traces = {TraceMap::regular(w.alg), TraceMap::reduced(w.alg, 2)};
    std::vector<GramMatrix> grams = {gram(w.alg, traces[0]), gram(w.alg, traces[1])};
    std::vector<const GramMatrix*> gp = {&grams[0], &grams[1]};
    auto pt = std::vector<Scalar>{Scalar::from_int(f, 1), Scalar::from_int(f, 10)};
    Rng rng(0);
    for (auto _ : state) {
        FiberReport r = analyze_point(w.alg, traces, pt, rng, 2, true, gp);
        benchmark::DoNotOptimize(r.ss_dim);
    }
}
BENCHMARK(bm_fiber_analysis)->Unit(benchmark::kMicrosecond);

void bm_md_generators_qa(benchmark::State& state) {
    FieldSpec f = FieldSpec::rationals();
    Scalar one = Scalar::one(f), m = Scalar::from_int(f, -1);
    PresentedAlgebra a = build_quantum_affine(f, {{one, m, m}, {m, one, one}, {m, one, one}});
    TraceMap tr = TraceMap::standard(a);
    GramMatrix g = gram(a, tr);
    for (auto _ : state) {
        DiscriminantResult r = md_generators(a, g, 4);
        benchmark::DoNotOptimize(r.ideal.generators.size());
    }
}
BENCHMARK(bm_md_generators_qa)->Unit(benchmark::kMillisecond);

void bm_radical_f13(benchmark::State& state) {
    FieldSpec f = FieldSpec::prime(13);
    WeylAlgebra w = weyl(f, {1}, {3});
    auto pt = std::vector<Scalar>{Scalar::from_int(f, 1), Scalar::from_int(f, 0)};
    FiniteAlgebra fib = specialize(w.alg, pt);
    for (auto _ : state) {
        auto rad = radical(fib);
        benchmark::DoNotOptimize(rad.size());
    }
}
BENCHMARK(bm_radical_f13)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
