#include <benchmark/benchmark.h>

#include "pairmult/germs/germs.hpp"
#include "pairmult/mult/multiplicity.hpp"

using namespace pairmult;

namespace {

Polynomial poly(const Context& ctx, const char* text) { return parse_polynomial(text, ctx->poly_ring()); }

// Milnor number of x^a + y^a + z^a, which is (a-1)^3.
void BM_ColengthFermat(benchmark::State& state) {
  const auto ctx = make_context({"x", "y", "z"});
  const std::string a = std::to_string(state.range(0));
  const auto f = poly(ctx, ("x^" + a + " + y^" + a + " + z^" + a).c_str());
  const Submodule j = jacobian_ideal(ctx, f);
  for (auto _ : state) benchmark::DoNotOptimize(colength(j));
}
BENCHMARK(BM_ColengthFermat)->DenseRange(3, 6);

void BM_BuchsbaumRim(benchmark::State& state) {
  const auto ctx = make_context({"x", "y"});
  const PolyMatrix m = PolyMatrix::from_rows(
      ctx->poly_ring(), {{poly(ctx, "x"), poly(ctx, "y^2"), poly(ctx, "0")},
                         {poly(ctx, "0"), poly(ctx, "x"), poly(ctx, "y^3")}});
  const Submodule s = Submodule::from_matrix(ctx, m);
  for (auto _ : state) benchmark::DoNotOptimize(buchsbaum_rim(s, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BuchsbaumRim)->DenseRange(4, 7);

void BM_PairMultiplicity(benchmark::State& state) {
  const auto ctx = make_context({"x", "y"});
  const auto m = Submodule::ideal(ctx, {poly(ctx, "x^3"), poly(ctx, "x*y^2"), poly(ctx, "y^4")});
  const auto n = Submodule::ideal(ctx, {poly(ctx, "x^2"), poly(ctx, "y^2")});
  for (auto _ : state) benchmark::DoNotOptimize(pair_multiplicity(m, n, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PairMultiplicity)->DenseRange(4, 7);

void BM_PairLength(benchmark::State& state) {
  const auto ctx = make_context({"x", "y", "z"});
  const auto f = poly(ctx, "x^2*y^2 + z^2");
  const Submodule j = jacobian_ideal(ctx, f);
  const auto i = Submodule::ideal(ctx, {poly(ctx, "x*y"), poly(ctx, "z")});
  for (auto _ : state) benchmark::DoNotOptimize(j_invariant(f, i));
}
BENCHMARK(BM_PairLength);

void BM_CrossCapPresentation(benchmark::State& state) {
  const MapGerm germ = make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "v^2", "u*v"});
  for (auto _ : state) benchmark::DoNotOptimize(pushforward_presentation(germ));
}
BENCHMARK(BM_CrossCapPresentation);

void BM_MilnorIcis(benchmark::State& state) {
  const auto ctx = make_context({"x", "y", "z"});
  const std::vector<Polynomial> eqs{poly(ctx, "x^2 + y^2 + z^2"), poly(ctx, "y + z^3")};
  for (auto _ : state) benchmark::DoNotOptimize(milnor_icis(ctx, eqs));
}
BENCHMARK(BM_MilnorIcis);

}  // namespace
BENCHMARK_MAIN();
