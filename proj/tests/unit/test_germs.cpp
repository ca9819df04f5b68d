#include "doctest.h"
#include "oracle/jets.hpp"
#include "pairmult/error.hpp"
#include "pairmult/germs/germs.hpp"
#include "pairmult/gb/transform.hpp"
#include "support/helpers.hpp"

using namespace pairmult;
using testing_support::global_ctx;
using testing_support::ideal;
using testing_support::local_ctx;
using testing_support::P;
using testing_support::PolyGen;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

std::vector<Scalar> pt(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x, Field::rationals());
  return out;
}

std::vector<oracle::Vector> as_vectors(const Submodule& s) {
  std::vector<oracle::Vector> out;
  for (const auto& g : s.generators()) out.push_back(g.components());
  return out;
}

MapGerm cross_cap() { return make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "v^2", "u*v"}); }
MapGerm s1() { return make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "v^2", "v^3 + u^2*v"}); }
MapGerm immersion() { return make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "v", "0"}); }

Unfolding s1_unfolding(const Context& points_ctx) {
  Unfolding u{make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "v^2", "v^3 + (u^2 - s^2)*v"}, {"s"}), {}};
  u.points = {{P(points_ctx, "s"), P(points_ctx, "0"), P(points_ctx, "0")},
              {P(points_ctx, "-s"), P(points_ctx, "0"), P(points_ctx, "0")},
              {P(points_ctx, "0"), P(points_ctx, "1/3*s^2"), P(points_ctx, "0")}};
  return u;
}

/// Random unimodular integer matrix as a product of elementary matrices.
std::vector<std::vector<long>> unimodular(PolyGen& gen, std::size_t n) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  for (int step = 0; step < 6; ++step) {
    const auto r = gen.integer(0, static_cast<int>(n) - 1), c = gen.integer(0, static_cast<int>(n) - 1);
    if (r == c) continue;
    const long k = gen.integer(-2, 2);
    for (std::size_t j = 0; j < n; ++j) a[r][j] += k * a[c][j];
  }
  return a;
}

}  // namespace

TEST_CASE("jacobian modules") {
  auto ctx = local_ctx({"x", "y", "z"});
  const auto jxyz = jacobian_ideal(ctx, P(ctx, "x*y*z"));
  CHECK(same_module(jxyz, ideal(ctx, {"y*z", "x*z", "x*y"})));

  const auto j = jacobian_ideal(ctx, P(ctx, "x*y^2 + z^2")).ideal_generators();
  REQUIRE(j.size() == 3);
  CHECK(j[0] == P(ctx, "y^2"));
  CHECK(j[1] == P(ctx, "2*x*y"));
  CHECK(j[2] == P(ctx, "2*z"));

  const auto jm = jacobian_module(ctx, {P(ctx, "x^2 + y^2 + z^2")}, P(ctx, "x"), Relative::All);
  CHECK(jm.rank() == 2);
  REQUIRE(jm.size() == 3);
  CHECK(jm.generators()[0] == FreeElement({P(ctx, "2*x"), P(ctx, "1")}));
  CHECK(jm.generators()[1] == FreeElement({P(ctx, "2*y"), P(ctx, "0")}));
  CHECK(jm.generators()[2] == FreeElement({P(ctx, "2*z"), P(ctx, "0")}));

  auto fam = local_ctx({"x"}, {"t"});
  const auto rel = jacobian_module(fam, {}, P(fam, "x^2 + t*x"), Relative::Params);
  REQUIRE(rel.size() == 1);
  CHECK(rel.generators()[0][0] == P(fam, "x"));
  CHECK(kind_of([&] { (void)jacobian_module(ctx, {}, P(ctx, "x"), Relative::Params); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("reduced bases of J(xyz) and the triple-point ideal") {
  auto ctx = global_ctx({"x", "y", "z"});
  const auto a = groebner_basis(jacobian_ideal(ctx, P(ctx, "x*y*z")));
  const auto b = groebner_basis(ideal(ctx, {"y*z", "x*z", "x*y"}));
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("j invariant") {
  auto ctx = local_ctx({"x", "y", "z"});
  CHECK(j_invariant(P(ctx, "x^2 + y^2"), ideal(ctx, {"x", "y"})) == 0);
  CHECK(j_invariant(P(ctx, "x*y^2 + z^2"), ideal(ctx, {"y", "z"})) == 1);

  const auto f = P(ctx, "x^2*y^2 + z^2");
  const auto i = ideal(ctx, {"x*y", "z"});
  CHECK(j_invariant(f, i) == 1);
  const auto jets = oracle::local_pair_length(3, 1, as_vectors(jacobian_ideal(ctx, f)), as_vectors(i), 10);
  REQUIRE(jets.has_value());
  CHECK(*jets == 1);

  CHECK(kind_of([&] { (void)j_invariant(P(ctx, "x"), ideal(ctx, {"y"})); }) == ErrorKind::NotContained);
  CHECK(kind_of([&] { (void)j_invariant(P(ctx, "x^2*y"), ideal(ctx, {"x"})); }) == ErrorKind::InfiniteLength);
}

TEST_CASE("singular point classification") {
  auto ctx = local_ctx({"x", "y", "z"});
  const auto a1 = classify_singular_point(P(ctx, "(x*y - 5)^2 + z^2"), ideal(ctx, {"x*y - 5", "z"}), pt({0, 0, 0}));
  CHECK(a1.kind == PointClass::A1);
  CHECK_FALSE(a1.on_sigma);
  CHECK(a1.hessian_rank == 3);

  const auto ainf = classify_singular_point(P(ctx, "x^2 + y^2"), ideal(ctx, {"x", "y"}), pt({0, 0, 3}));
  CHECK(ainf.kind == PointClass::AInfinity);
  CHECK(ainf.on_sigma);
  CHECK(ainf.local_j == 0u);

  const auto dinf = classify_singular_point(P(ctx, "x*y^2 + z^2"), ideal(ctx, {"y", "z"}), pt({0, 0, 0}));
  CHECK(dinf.kind == PointClass::DInfinity);
  CHECK(dinf.local_j == 1u);

  CHECK(kind_of([&] { (void)classify_singular_point(P(ctx, "x^2 + y^2"), ideal(ctx, {"x", "y"}), pt({1, 0, 0})); }) ==
        ErrorKind::NotCritical);
}

TEST_CASE("pellikaan reports") {
  auto ctx = local_ctx({"x", "y", "z"}, {"t"});
  const std::vector<std::vector<Polynomial>> origin{{P(ctx, "0"), P(ctx, "0"), P(ctx, "0")}};
  SUBCASE("x^2 y^2 + z^2") {
    GenericScalarStream stream(31);
    const auto rep = pellikaan_report(P(ctx, "(x*y - t)^2 + z^2"), ideal(ctx, {"x*y - t", "z"}), origin, stream, 4);
    CHECK(rep.j == 1);
    CHECK(rep.e == 1);
    CHECK(rep.a1 == 1);
    CHECK(rep.d_infinity == 0);
    CHECK(rep.global_length == 1);
    CHECK(rep.holds);
    GenericScalarStream again(31);
    CHECK(kind_of([&] {
            (void)pellikaan_report(P(ctx, "(x*y - t)^2 + z^2"), ideal(ctx, {"x*y - t", "z"}), {}, again, 4);
          }) == ErrorKind::IncompletePointList);
  }
  SUBCASE("trivial family of a D-infinity germ") {
    GenericScalarStream stream(32);
    const auto rep = pellikaan_report(P(ctx, "x*y^2 + z^2"), ideal(ctx, {"y", "z"}), origin, stream, 4);
    CHECK(rep.j == 1);
    CHECK(rep.e == 1);
    CHECK(rep.d_infinity == 1);
    CHECK(rep.a1 == 0);
    CHECK(rep.holds);
  }
  SUBCASE("A-infinity germ") {
    GenericScalarStream stream(33);
    const auto rep = pellikaan_report(P(ctx, "x^2 + y^2"), ideal(ctx, {"x", "y"}), {}, stream, 4);
    CHECK(rep.j == 0);
    CHECK(rep.e == 0);
    CHECK(rep.points.empty());
    CHECK(rep.holds);
  }
  SUBCASE("f outside I^2") {
    GenericScalarStream stream(34);
    CHECK(kind_of([&] { (void)pellikaan_report(P(ctx, "x^2 + y"), ideal(ctx, {"x", "y"}), {}, stream); }) ==
          ErrorKind::NotContained);
  }
}

TEST_CASE("pushforward presentations") {
  SUBCASE("cross-cap") {
    const auto pres = pushforward_presentation(cross_cap());
    const auto& t = pres.target;
    CHECK(pres.degree == 2);
    CHECK(pres.matrix(0, 0) == P(t, "z"));
    CHECK(pres.matrix(0, 1) == P(t, "-x*y"));
    CHECK(pres.matrix(1, 0) == P(t, "-x"));
    CHECK(pres.matrix(1, 1) == P(t, "z"));
    CHECK(pres.f0 == P(t, "z^2 - x^2*y"));
    CHECK(same_module(pres.f1, ideal(t, {"x", "z"})));
  }
  SUBCASE("S1") {
    const auto pres = pushforward_presentation(s1());
    const auto& t = pres.target;
    CHECK(pres.f0 == P(t, "z^2 - y*(y + x^2)^2"));
    CHECK(same_module(pres.f1, ideal(t, {"z", "y + x^2"})));
  }
  SUBCASE("immersion") {
    const auto pres = pushforward_presentation(immersion());
    CHECK(pres.degree == 1);
    CHECK(pres.f0 == P(pres.target, "z"));
    CHECK(same_module(pres.f1, ideal(pres.target, {"1"})));
  }
  SUBCASE("shape errors") {
    CHECK(kind_of([] { (void)pushforward_presentation(make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u + v", "v^2", "v^3"})); }) ==
          ErrorKind::NotCorank1);
    CHECK(kind_of([] { (void)pushforward_presentation(make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "u*v", "v"})); }) ==
          ErrorKind::NotFinite);
    CHECK(kind_of([] { (void)pushforward_presentation(make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "v^2 + u*v^3", "v"})); }) ==
          ErrorKind::NotFinite);
  }
}

TEST_CASE("image by elimination agrees with the Fitting ideal") {
  const std::vector<MapGerm> corpus{
      cross_cap(),
      s1(),
      immersion(),
      make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "v^2", "v^3 + u^3*v"}),
      make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "v^3", "v^4 + u*v"}),
      make_map_germ({"u", "v"}, {"x", "y", "z"}, {"u", "v^2 + u*v", "u*v^3"}),
  };
  for (const auto& g : corpus) {
    const auto pres = pushforward_presentation(g);
    const auto img = image_by_elimination(g);
    CHECK(same_module(img, Submodule::ideal(pres.target, {pres.f0})));
    // F0 is principal and its generator has no repeated factor x: F0 not in (x^2).
    CHECK(img.ideal_generators().size() >= 1);
  }
}

TEST_CASE("disentanglement reports") {
  SUBCASE("cross-cap") {
    GenericScalarStream stream(41);
    const auto rep = disentanglement_report(cross_cap(), stream, 4);
    CHECK(rep.e_pair == 1);
    CHECK(rep.dim_c_over_cp == 0);
    CHECK(rep.dim_c_over_jf == 1);
    CHECK(rep.dim_c_over_jf_pullback == 1);
    CHECK(rep.mu == 0);
    CHECK(rep.thm26_ii);
    CHECK_FALSE(rep.census.has_value());
  }
  SUBCASE("immersion") {
    GenericScalarStream stream(42);
    const auto rep = disentanglement_report(immersion(), stream, 4);
    CHECK(rep.e_pair == 0);
    CHECK(rep.dim_c_over_cp == 0);
    CHECK(rep.dim_c_over_jf == 0);
    CHECK(rep.dim_c_over_jf_pullback == 0);
    CHECK(rep.mu == 0);
    CHECK(rep.thm26_ii);
  }
  SUBCASE("S1 with a stabilization") {
    auto pctx = local_ctx({"x", "y", "z"}, {"s"});
    GenericScalarStream stream(43);
    const auto rep = disentanglement_report(s1(), stream, 4, s1_unfolding(pctx));
    CHECK(rep.e_pair == 3);
    CHECK(rep.dim_c_over_jf == 3);
    CHECK(rep.dim_c_over_jf_pullback == 2);
    CHECK(rep.mu == 1);
    CHECK(rep.thm26_ii);
    REQUIRE(rep.census.has_value());
    CHECK(rep.census->d_infinity == 2);
    CHECK(rep.census->a1 == 1);
    CHECK(rep.thm26_ii_count == true);
    CHECK(rep.cor27_count == true);
    CHECK(rep.thm26_i == true);
    CHECK(rep.polar_mult == 0u);
  }
}

TEST_CASE("Morse points of the stabilized S1 image") {
  // Independent count: Morse points are where J(f_s) is not absorbed by the
  // conductor, i.e. the colength of J(f_s) : C_s^infinity.
  auto ctx = global_ctx({"x", "y", "z"});
  for (long s : {1L, 2L, 7L}) {
    const auto sq = std::to_string(s * s);
    const auto f = P(ctx, "z^2 - y*(y + x^2 - " + sq + ")^2");
    const auto c = ideal(ctx, {"z", ("y + x^2 - " + sq).c_str()});
    const auto morse = saturate(jacobian_ideal(ctx, f), c);
    CHECK(colength(morse).value() == 1);
  }
}

TEST_CASE("Milnor numbers of ICIS") {
  auto xyz = local_ctx({"x", "y", "z"});
  auto xy = local_ctx({"x", "y"});
  CHECK(milnor_icis(xyz, {P(xyz, "x^2 + y^2 + z^2")}) == 1);
  CHECK(milnor_icis(xy, {P(xy, "x^2 + y^3")}) == 2);
  CHECK(milnor_icis(xy, {P(xy, "x")}) == 0);
  CHECK(milnor_icis(xyz, {P(xyz, "x^2 + y^2 + z^2"), P(xyz, "y")}) == 1);
  CHECK(milnor_icis(xyz, {}) == 0);
  CHECK(kind_of([&] { (void)milnor_icis(xyz, {P(xyz, "x*y")}); }) == ErrorKind::NotICIS);
}

TEST_CASE("1-form index on ICIS") {
  auto xyz = local_ctx({"x", "y", "z"});
  GenericScalarStream stream(51);
  const auto l = P(xyz, "x + 2*y + 3*z");
  const auto rep = one_form_index(xyz, {P(xyz, "x^2 + y^2 + z^2")}, {P(xyz, "1"), P(xyz, "2"), P(xyz, "3")}, l,
                                  stream, 4);
  CHECK(rep.index == 1);
  CHECK(rep.pair_terms_cancel);
  CHECK(rep.slice_mu == 1);
  CHECK(rep.assumptions.empty());

  auto xy = local_ctx({"x", "y"});
  const auto morse = one_form_index(xy, {}, {P(xy, "2*x"), P(xy, "2*y")}, std::nullopt, stream, 4);
  CHECK(morse.e_omega == 1);
  CHECK(morse.e_dl == 0);
  CHECK(morse.index == 1);
  CHECK(morse.assumptions.size() == 1);

  CHECK(kind_of([&] { (void)one_form_index(xy, {}, {P(xy, "x"), P(xy, "0")}, std::nullopt, stream, 4); }) ==
        ErrorKind::NotIsolated);
  CHECK(kind_of([&] { (void)one_form_index(xyz, {P(xyz, "x*y")}, {P(xyz, "1"), P(xyz, "0"), P(xyz, "0")},
                                           std::nullopt, stream, 4); }) == ErrorKind::NotICIS);
}

TEST_CASE("Wf invariant") {
  auto ctx = local_ctx({"x", "z"}, {"y"});
  GenericScalarStream stream(61);
  const auto l = P(ctx, "x + 2*z");
  const auto product = wf_invariant(ctx, {}, P(ctx, "x^2 + z^2"), l, stream, 4);
  REQUIRE(product.samples.size() == 2);
  for (const auto& s : product.samples) {
    CHECK(s.e_f == 4);
    CHECK(s.e_l == 1);
    CHECK(s.difference == 3);
  }
  CHECK(product.e_constant);
  CHECK(product.independent);

  const auto trivial = wf_invariant(ctx, {}, l, l, stream, 4);
  for (const auto& s : trivial.samples) CHECK(s.difference == 0);
  CHECK(trivial.independent);

  const auto jump = wf_invariant(ctx, {}, P(ctx, "x^3 + z^3 + y*x*z"), l, stream, 4);
  CHECK(jump.samples[0].e_f == 9);
  CHECK(jump.samples[1].e_f == 4);
  CHECK_FALSE(jump.independent);
}

// Property tests ------------------------------------------------------------

TEST_CASE("j equals the pair multiplicity on the corpus") {
  auto ctx = local_ctx({"x", "y", "z"});
  const std::vector<std::pair<const char*, std::vector<const char*>>> corpus{
      {"x^2 + y^2", {"x", "y"}},
      {"x*y^2 + z^2", {"y", "z"}},
      {"x^2*y^2 + z^2", {"x*y", "z"}},
      {"y^2 + z^2", {"y", "z"}},
  };
  for (const auto& [f, gens] : corpus) {
    const auto fp = P(ctx, f);
    std::vector<Polynomial> is;
    for (const auto* g : gens) is.push_back(P(ctx, g));
    const auto i = Submodule::ideal(ctx, is);
    CHECK(static_cast<std::int64_t>(j_invariant(fp, i)) == pair_multiplicity(jacobian_ideal(ctx, fp), i, 4).value);
  }
}

TEST_CASE("classification is invariant under unimodular coordinate changes") {
  auto ctx = local_ctx({"x", "y", "z"});
  const auto& ring = ctx->poly_ring();
  struct Case {
    const char* f;
    std::vector<const char*> sigma;
    PointClass kind;
  };
  const std::vector<Case> normal_forms{
      {"x^2 + y^2", {"x", "y"}, PointClass::AInfinity},
      {"x*y^2 + z^2", {"y", "z"}, PointClass::DInfinity},
      {"x^2 + y^2 + z^2", {"x - 1", "z"}, PointClass::A1},
  };
  PolyGen gen(71);
  for (int trial = 0; trial < 6; ++trial) {
    const auto a = unimodular(gen, 3);
    std::vector<Polynomial> images;
    for (std::size_t r = 0; r < 3; ++r) {
      Polynomial acc(ring);
      for (std::size_t c = 0; c < 3; ++c) acc += ctx->var(c) * Scalar(a[r][c], ctx->field());
      images.push_back(acc);
    }
    for (const auto& nf : normal_forms) {
      std::vector<Polynomial> sig;
      for (const auto* g : nf.sigma) sig.push_back(P(ctx, g).substitute(images, ring));
      const auto cls = classify_singular_point(P(ctx, nf.f).substitute(images, ring), Submodule::ideal(ctx, sig),
                                               pt({0, 0, 0}));
      CHECK(cls.kind == nf.kind);
    }
  }
}

TEST_CASE("disentanglement identities across seeds") {
  for (std::uint64_t seed : {101ULL, 102ULL}) {
    for (const auto& g : {cross_cap(), s1()}) {
      GenericScalarStream stream(seed);
      const auto rep = disentanglement_report(g, stream, 4);
      CHECK(rep.thm26_ii);
      CHECK(rep.mu == rep.e_pair + static_cast<std::int64_t>(rep.dim_c_over_cp) -
                          static_cast<std::int64_t>(rep.dim_c_over_jf_pullback));
    }
  }
}

TEST_CASE("dL cancels on corpus ICIS") {
  auto xyz = local_ctx({"x", "y", "z"});
  auto xy = local_ctx({"x", "y"});
  const std::vector<std::pair<Context, std::vector<Polynomial>>> corpus{
      {xyz, {P(xyz, "x^2 + y^2 + z^2")}},
      {xy, {P(xy, "x^2 + y^3")}},
      {xyz, {P(xyz, "x^2 + y^2 + z^2"), P(xyz, "y + z^2")}},
      {xy, {}},
  };
  GenericScalarStream stream(81);
  for (const auto& [ctx, eqs] : corpus) {
    Polynomial l(ctx->poly_ring());
    std::vector<Polynomial> dl;
    for (std::size_t v = 0; v < ctx->nvars(); ++v) {
      const auto c = stream.draw_one(ctx->field());
      l += ctx->var(v) * c;
      dl.push_back(ctx->constant(c));
    }
    const auto rep = one_form_index(ctx, eqs, dl, l, stream, 4);
    CHECK(rep.pair_terms_cancel);
    CHECK(rep.index == static_cast<std::int64_t>(rep.slice_mu));
  }
}
