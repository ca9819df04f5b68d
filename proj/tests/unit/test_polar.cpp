#include "doctest.h"
#include "pairmult/error.hpp"
#include "pairmult/polar/polar.hpp"
#include "support/helpers.hpp"

using namespace pairmult;
using testing_support::global_ctx;
using testing_support::ideal;
using testing_support::local_ctx;
using testing_support::P;

namespace {

FamilySpec family(const Context& ctx, const Submodule& m, const Submodule& n,
                  std::vector<std::vector<Polynomial>> points = {}) {
  return FamilySpec{ctx, m, n, std::move(points)};
}

}  // namespace

TEST_CASE("polar of (x^2, xy) over the y-axis") {
  auto ctx = local_ctx({"x"}, {"y"});
  const auto m = ideal(ctx, {"x^2", "x*y"});
  GenericScalarStream stream(17);
  const auto rep = polar_ideal(m, 1, stream);
  REQUIRE_FALSE(rep.empty);
  REQUIRE(rep.submersion_rows.size() == 1);
  const auto& ab = rep.submersion_rows[0];
  // Hand factorization: minor b*x^2 - a*x*y, saturated by x, is b*x - a*y.
  const auto g = rep.gamma_ideal.context();
  const auto expected = Polynomial::constant(g->poly_ring(), ab[1]) * P(g, "x") -
                        Polynomial::constant(g->poly_ring(), ab[0]) * P(g, "y");
  CHECK(same_module(rep.gamma_ideal, Submodule::ideal(g, {expected})));

  const auto fam = family(ctx, m, ideal(ctx, {"x"}));
  CHECK(polar_mult_over_base(rep, fam, stream).value == 1);
}

TEST_CASE("empty polars") {
  auto ctx = local_ctx({"x"}, {"y"});
  GenericScalarStream stream(3);
  const auto principal = polar_ideal(ideal(ctx, {"x^2 + y"}), 1, stream);
  CHECK(principal.empty);
  CHECK(principal.submersion_rows.empty());
  const auto free = polar_ideal(Submodule::free(ctx, 2), 1, stream);
  CHECK(free.empty);
  const auto fam = family(ctx, ideal(ctx, {"x"}), ideal(ctx, {"x"}));
  CHECK(polar_mult_over_base(principal, fam, stream).value == 0);
  CHECK_THROWS_AS(polar_ideal(ideal(ctx, {"x"}), 0, stream), Error);
}

TEST_CASE("degree of a polar over the base") {
  auto ctx = global_ctx({"x"}, {"y"});
  PolarReport rep;
  rep.k = 1;
  rep.empty = false;
  rep.gamma_ideal = ideal(ctx, {"x^2 - y"});
  GenericScalarStream stream(5);
  const auto fam = family(ctx, ideal(ctx, {"x"}), ideal(ctx, {"x"}));
  const auto r = polar_mult_over_base(rep, fam, stream);
  CHECK(r.value == 2);
  REQUIRE(r.global_count.has_value());
  CHECK(*r.global_count == 2);

  // A branch escaping the origin is caught by the global count.
  rep.gamma_ideal = ideal(ctx, {"x*(x-1) - y"});
  try {
    (void)polar_mult_over_base(rep, fam, stream);
    FAIL("expected FiberPointDiscovery");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FiberPointDiscovery);
  }
  // A vertical component inside the central fiber does not count.
  rep.gamma_ideal = ideal(ctx, {"y"});
  CHECK(polar_mult_over_base(rep, fam, stream).value == 0);
  auto xz = global_ctx({"x", "z"}, {"y"});
  rep.gamma_ideal = ideal(xz, {"x"});
  try {
    (void)polar_mult_over_base(rep, fam, stream);
    FAIL("expected NotFiniteOverBase");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFiniteOverBase);
  }

  auto two = global_ctx({"x"}, {"s", "t"});
  rep.gamma_ideal = ideal(two, {"x - s"});
  CHECK_THROWS_AS(polar_mult_over_base(rep, family(two, ideal(two, {"x"}), ideal(two, {"x"})), stream), Error);
}

TEST_CASE("multiplicity-polar identity") {
  SUBCASE("(x^2, xy) in (x)") {
    auto ctx = local_ctx({"x"}, {"y"});
    GenericScalarStream stream(11);
    const auto rep = multiplicity_polar_check(family(ctx, ideal(ctx, {"x^2", "x*y"}), ideal(ctx, {"x"})), stream, 4);
    CHECK(rep.e_origin == 1);
    CHECK(rep.fiber.empty());
    CHECK(rep.lhs == 1);
    CHECK(rep.mult_m.value == 1);
    CHECK(rep.mult_n.value == 0);
    CHECK(rep.rhs == 1);
    CHECK(rep.equal);
    CHECK(rep.assumptions.size() == 1);
  }
  SUBCASE("constant family") {
    auto ctx = local_ctx({"x"}, {"y"});
    GenericScalarStream stream(12);
    const std::vector<std::vector<Polynomial>> pts{{P(ctx, "0")}};
    const auto rep = multiplicity_polar_check(family(ctx, ideal(ctx, {"x^2"}), ideal(ctx, {"x"}), pts), stream, 4);
    CHECK(rep.e_origin == 1);
    REQUIRE(rep.fiber.size() == 1);
    CHECK(rep.fiber[0].pair_multiplicity == 1);
    CHECK(rep.lhs == 0);
    CHECK(rep.rhs == 0);
    CHECK(rep.polar_m.empty);
    CHECK(rep.polar_n.empty);
    CHECK(rep.equal);
  }
  SUBCASE("moving point") {
    // (x^2 - y*x) in (x): at y != 0 the support splits off to x = y.
    auto ctx = local_ctx({"x"}, {"y"});
    GenericScalarStream stream(13);
    const auto m = ideal(ctx, {"x^2 - y*x"});
    const auto n = ideal(ctx, {"x"});
    const std::vector<std::vector<Polynomial>> pts{{P(ctx, "y")}};
    const auto rep = multiplicity_polar_check(family(ctx, m, n, pts), stream, 4);
    CHECK(rep.e_origin == 1);
    CHECK(rep.lhs == 0);
    CHECK(rep.equal);
    // Leaving the point out is detected.
    try {
      (void)multiplicity_polar_check(family(ctx, m, n), stream, 4);
      FAIL("expected FiberPointDiscovery");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::FiberPointDiscovery);
    }
  }
}

TEST_CASE("Pellikaan family") {
  auto ctx = local_ctx({"x", "y", "z"}, {"t"});
  const auto f = P(ctx, "(x*y - t)^2 + z^2");
  const auto j = Submodule::ideal(ctx, {f.differentiate("x"), f.differentiate("y"), f.differentiate("z")});
  const auto i = ideal(ctx, {"x*y - t", "z"});
  const std::vector<std::vector<Polynomial>> pts{{P(ctx, "0"), P(ctx, "0"), P(ctx, "0")}};
  GenericScalarStream stream(23);
  const auto rep = multiplicity_polar_check(family(ctx, j, i, pts), stream, 4);
  CHECK(rep.e_origin == 1);
  REQUIRE(rep.fiber.size() == 1);
  CHECK(rep.fiber[0].pair_multiplicity == 1);
  CHECK(rep.global_length == 1);
  CHECK(rep.lhs == 0);
  CHECK(rep.polar_m.empty);
  CHECK(rep.polar_n.empty);
  CHECK(rep.rhs == 0);
  CHECK(rep.equal);
}

// Property tests ------------------------------------------------------------

TEST_CASE("polar ideals are stable across seeds") {
  auto ctx = local_ctx({"x"}, {"y"});
  const auto m = ideal(ctx, {"x^2", "x*y"});
  const auto fam = family(ctx, m, ideal(ctx, {"x"}));
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    GenericScalarStream stream(seed);
    const auto rep = polar_ideal(m, 1, stream);
    CHECK_FALSE(rep.empty);
    CHECK(polar_mult_over_base(rep, fam, stream).value == 1);
    // Saturation: the rank-drop locus (x) is not inside the polar.
    CHECK_FALSE(contains(rep.gamma_ideal, ideal(rep.gamma_ideal.context(), {"x^4"})));
  }
}

TEST_CASE("few generators give empty polars") {
  auto ctx = local_ctx({"x", "z"}, {"y"});
  GenericScalarStream stream(9);
  // d = 2, e = 1: at most d + e - 1 = 2 generators.
  CHECK(polar_ideal(ideal(ctx, {"x^2 + y*z", "z^3"}), 2, stream).empty);
  CHECK(polar_ideal(ideal(ctx, {"x*y"}), 2, stream).empty);
  CHECK_FALSE(polar_ideal(ideal(ctx, {"x^2", "x*z", "z^2 + y*x"}), 2, stream).empty);
}
