#include "pairmult/polar/polar.hpp"

#include "pairmult/error.hpp"
#include "pairmult/gb/transform.hpp"

namespace pairmult {

PolarReport polar_ideal(const Submodule& m, std::size_t k, GenericScalarStream& stream) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "polar codimension must be at least 1");
  const Context global = m.context()->with_order(MonomialOrder::degrevlex());
  const auto& ring = global->poly_ring();
  const Submodule mg = m.in_context(global);
  PolarReport rep;
  rep.k = k;
  rep.generic_rank = generic_rank(mg);
  rep.gamma_ideal = Submodule::ideal(global, {Polynomial::constant(ring, 1L)});
  const long pm = static_cast<long>(mg.size());
  const long rows = pm - static_cast<long>(k) - static_cast<long>(rep.generic_rank) + 1;
  if (rows < 1) return rep;

  const PolyMatrix a = mg.matrix();
  const std::size_t p = mg.rank();
  PolyMatrix aug(ring, p + static_cast<std::size_t>(rows), a.cols());
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
  }
  for (long r = 0; r < rows; ++r) {
    rep.submersion_rows.push_back(stream.draw(a.cols(), global->field()));
    for (std::size_t c = 0; c < a.cols(); ++c) {
      aug(p + static_cast<std::size_t>(r), c) = Polynomial::constant(ring, rep.submersion_rows.back()[c]);
    }
  }
  Submodule degeneracy = minors(global, aug, static_cast<std::size_t>(pm) - k + 1);
  if (rep.generic_rank > 0) degeneracy = saturate(degeneracy, minors(global, a, rep.generic_rank));
  rep.empty = contains(degeneracy, Submodule::ideal(global, {Polynomial::constant(ring, 1L)}));
  rep.gamma_ideal = rep.empty ? Submodule::ideal(global, {Polynomial::constant(ring, 1L)})
                              : Submodule(global, 1, groebner_basis(degeneracy).elements());
  return rep;
}

namespace {

Scalar draw_base_point(GenericScalarStream& stream, Field field) {
  Scalar y0 = stream.draw_one(field);
  while (y0.is_zero()) y0 = stream.draw_one(field);
  return y0;
}

void require_curve_base(const Context& ctx) {
  if (ctx->nparams() != 1) {
    throw Error(ErrorKind::Unsupported, "only one-dimensional bases are supported, got " +
                                            std::to_string(ctx->nparams()) + " parameters");
  }
}

}  // namespace

PolarMultiplicity polar_mult_over_base(const PolarReport& rep, const FamilySpec& fam,
                                       GenericScalarStream& stream) {
  PolarMultiplicity out;
  if (rep.empty) return out;
  require_curve_base(fam.ctx);
  const Context global = rep.gamma_ideal.context();
  const auto& ring = global->poly_ring();
  const Polynomial y = Polynomial::variable(ring, 0);

  const Scalar y0 = draw_base_point(stream, global->field());
  const Submodule slice = ideal_sum(rep.gamma_ideal, Submodule::ideal(global, {y - Polynomial::constant(ring, y0)}));
  const Length total = colength(slice);
  if (!total.is_finite()) {
    throw Error(ErrorKind::NotFiniteOverBase, "polar meets the fiber over " + y0.to_string() +
                                                  " in a positive-dimensional set");
  }
  // Drop components inside the central fiber, then intersect with it at the origin.
  const Submodule flat = saturate(rep.gamma_ideal, Submodule::ideal(global, {y}));
  const Context local = global->with_order(MonomialOrder::local());
  const Length at_origin = colength(ideal_sum(flat, Submodule::ideal(global, {y})).in_context(local));
  if (!at_origin.is_finite()) {
    throw Error(ErrorKind::NotFiniteOverBase, "polar is not finite over the base at the origin");
  }
  if (at_origin.value() != total.value()) {
    throw Error(ErrorKind::FiberPointDiscovery,
                "polar has " + std::to_string(total.value()) + " points over " + y0.to_string() +
                    " but degree " + std::to_string(at_origin.value()) + " at the origin");
  }
  out.value = at_origin.value();
  out.base_point = y0;
  out.global_count = total.value();
  return out;
}

FamilyReport multiplicity_polar_check(const FamilySpec& fam, GenericScalarStream& stream, unsigned n_max) {
  require_curve_base(fam.ctx);
  const Context& total = fam.ctx;
  const Field field = total->field();
  const std::size_t nspace = total->nspace();
  const std::vector<Scalar> origin(nspace, Scalar::zero(field));
  FamilyReport rep;
  rep.assumptions.push_back(
      "specialization_condition: the cosupport of M specializes except over the origin (not verified)");

  {
    const std::vector<Scalar> y{Scalar::zero(field)};
    const Context fiber = fiber_context(total, y, origin, MonomialOrder::local());
    rep.e_origin = pair_multiplicity(specialize(fam.m, fiber, y, origin),
                                     specialize(fam.n, fiber, y, origin), n_max)
                       .value;
  }

  rep.base_point = draw_base_point(stream, field);
  const std::vector<Scalar> y{rep.base_point};
  std::uint64_t local_sum = 0;
  std::int64_t fiber_sum = 0;
  for (const auto& pt : fam.fiber_points) {
    if (pt.size() != nspace) throw Error(ErrorKind::InvalidArgument, "fiber point has the wrong length");
    std::vector<Scalar> at(total->nvars(), Scalar::zero(field));
    at[0] = rep.base_point;
    FiberContribution c;
    for (const auto& coord : pt) {
      for (const auto& t : coord.terms()) {
        for (std::size_t v = total->nparams(); v < total->nvars(); ++v) {
          if (t.monomial[v] != 0) {
            throw Error(ErrorKind::InvalidArgument, "fiber point coordinates may only involve parameters");
          }
        }
      }
      c.point.push_back(coord.evaluate(at));
    }
    const Context fiber = fiber_context(total, y, c.point, MonomialOrder::local());
    const Submodule ms = specialize(fam.m, fiber, y, c.point);
    const Submodule ns = specialize(fam.n, fiber, y, c.point);
    const Length len = pair_length(ms, ns);
    if (!len.is_finite()) {
      throw Error(ErrorKind::FiberPointDiscovery, "N/M is not finite at a declared fiber point");
    }
    c.length = len.value();
    c.pair_multiplicity = c.length == 0 ? 0 : pair_multiplicity(ms, ns, n_max).value;
    local_sum += c.length;
    fiber_sum += c.pair_multiplicity;
    rep.fiber.push_back(std::move(c));
  }

  const Context global_fiber = fiber_context(total, y, origin, MonomialOrder::degrevlex());
  const Length global_len =
      pair_length(specialize(fam.m, global_fiber, y, origin), specialize(fam.n, global_fiber, y, origin));
  if (!global_len.is_finite() || global_len.value() != local_sum) {
    throw Error(ErrorKind::FiberPointDiscovery,
                "N/M has length " + global_len.to_string() + " on the fiber over " +
                    rep.base_point.to_string() + " but the declared points account for " +
                    std::to_string(local_sum));
  }
  rep.global_length = global_len.value();

  const auto d = static_cast<std::size_t>(total->dim());
  rep.polar_m = polar_ideal(fam.m, d, stream);
  rep.polar_n = polar_ideal(fam.n, d, stream);
  rep.mult_m = polar_mult_over_base(rep.polar_m, fam, stream);
  rep.mult_n = polar_mult_over_base(rep.polar_n, fam, stream);
  rep.lhs = rep.e_origin - fiber_sum;
  rep.rhs = static_cast<std::int64_t>(rep.mult_m.value) - static_cast<std::int64_t>(rep.mult_n.value);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace pairmult
