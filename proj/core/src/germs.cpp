#include "pairmult/germs/germs.hpp"

#include <algorithm>

#include "pairmult/error.hpp"
#include "pairmult/gb/transform.hpp"

namespace pairmult {

namespace {

Submodule unit_ideal(const Context& ctx) { return Submodule::ideal(ctx, {ctx->constant(1)}); }

std::uint64_t finite_or(const Length& l, ErrorKind kind, const std::string& what) {
  if (!l.is_finite()) throw Error(kind, what + " is infinite");
  return l.value();
}

Scalar nonzero_draw(GenericScalarStream& stream, Field field) {
  Scalar s = stream.draw_one(field);
  while (s.is_zero()) s = stream.draw_one(field);
  return s;
}

/// Rank of a scalar matrix by elimination.
std::size_t scalar_rank(std::vector<std::vector<Scalar>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const Scalar inv = a[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      const Scalar factor = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[r][k].sub_mul(factor, a[rank][k]);
    }
    ++rank;
  }
  return rank;
}

/// Points given as polynomials in the single parameter, evaluated at t0.
std::vector<Scalar> evaluate_point(const Context& total, const std::vector<Polynomial>& coords,
                                   const Scalar& t0) {
  if (coords.size() != total->nspace()) throw Error(ErrorKind::InvalidArgument, "point has the wrong length");
  std::vector<Scalar> at(total->nvars(), Scalar::zero(total->field()));
  at[0] = t0;
  std::vector<Scalar> out;
  for (const auto& c : coords) {
    for (const auto& t : c.terms()) {
      for (std::size_t v = total->nparams(); v < total->nvars(); ++v) {
        if (t.monomial[v] != 0) throw Error(ErrorKind::InvalidArgument, "point coordinates may only involve parameters");
      }
    }
    out.push_back(c.evaluate(at));
  }
  return out;
}

PolyMatrix jacobian_matrix(const std::vector<Polynomial>& fs, std::size_t first, std::size_t last,
                           const PolyRingPtr& ring) {
  PolyMatrix m(ring, fs.size(), last - first);
  for (std::size_t r = 0; r < fs.size(); ++r) {
    for (std::size_t v = first; v < last; ++v) m(r, v - first) = fs[r].differentiate(v);
  }
  return m;
}

/// Finite colength of F + (p x p minors of DF) certifies an isolated
/// complete intersection singularity.
void require_icis(const Context& local, const std::vector<Polynomial>& eqs) {
  if (eqs.empty()) return;
  if (eqs.size() > local->nspace()) throw Error(ErrorKind::NotICIS, "more equations than variables");
  const auto jac = jacobian_matrix(eqs, local->nparams(), local->nvars(), local->poly_ring());
  const Submodule sing = ideal_sum(Submodule::ideal(local, eqs), minors(local, jac, eqs.size()));
  if (!colength(sing).is_finite()) throw Error(ErrorKind::NotICIS, "singular locus is not isolated");
}

}  // namespace

// Jacobian modules ----------------------------------------------------------

Submodule jacobian_module(const Context& ctx, const std::vector<Polynomial>& big_f,
                          const std::optional<Polynomial>& f, Relative relative) {
  std::size_t first = 0, last = ctx->nvars();
  if (relative == Relative::Space) first = ctx->nparams();
  if (relative == Relative::Params) last = ctx->nparams();
  if (first == last) throw Error(ErrorKind::InvalidArgument, "no variables to differentiate by");
  std::vector<Polynomial> rows = big_f;
  if (f) rows.push_back(*f);
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "jacobian of nothing");
  std::vector<FreeElement> cols;
  for (std::size_t v = first; v < last; ++v) {
    std::vector<Polynomial> comps;
    for (const auto& g : rows) comps.push_back(g.differentiate(v));
    cols.emplace_back(std::move(comps));
  }
  return Submodule(ctx, rows.size(), std::move(cols));
}

Submodule jacobian_ideal(const Context& ctx, const Polynomial& f) {
  return jacobian_module(ctx, {}, f, Relative::Space);
}

std::uint64_t j_invariant(const Polynomial& f, const Submodule& i) {
  const Submodule j = jacobian_ideal(i.context(), f);
  if (!contains(i, j)) throw Error(ErrorKind::NotContained, "J(f) is not contained in I");
  return finite_or(pair_length(j, i), ErrorKind::InfiniteLength, "I/J(f)");
}

// Singular points -----------------------------------------------------------

std::string_view to_string(PointClass c) noexcept {
  switch (c) {
    case PointClass::AInfinity: return "A_inf";
    case PointClass::DInfinity: return "D_inf";
    case PointClass::A1: return "A1";
    case PointClass::Other: return "other";
  }
  return "unknown";
}

SingularPointClass classify_singular_point(const Polynomial& f, const Submodule& sigma,
                                           const std::vector<Scalar>& point) {
  const Context local = sigma.context()->with_order(MonomialOrder::local())->with_quotient({}, 0);
  const std::size_t n = local->nvars();
  if (point.size() != n) throw Error(ErrorKind::InvalidArgument, "point has the wrong length");
  SingularPointClass out;
  out.point = point;
  const Polynomial g = translate(f, point);
  std::vector<Polynomial> partials;
  for (std::size_t v = 0; v < n; ++v) {
    partials.push_back(g.differentiate(v));
    if (!partials.back().constant_term().is_zero()) {
      throw Error(ErrorKind::NotCritical, "f is not critical at the given point");
    }
  }
  std::vector<std::vector<Scalar>> hess(n, std::vector<Scalar>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) hess[a][b] = partials[a].differentiate(b).constant_term();
  }
  out.hessian_rank = scalar_rank(std::move(hess));

  const Submodule sig = translate(sigma, local, point);
  out.on_sigma = std::all_of(sig.generators().begin(), sig.generators().end(),
                             [](const FreeElement& e) { return e[0].constant_term().is_zero(); });
  if (!out.on_sigma) {
    out.kind = out.hessian_rank == n ? PointClass::A1 : PointClass::Other;
    return out;
  }
  out.local_j = j_invariant(g, sig);
  out.kind = *out.local_j == 0 ? PointClass::AInfinity
             : *out.local_j == 1 ? PointClass::DInfinity
                                 : PointClass::Other;
  return out;
}

PellikaanReport pellikaan_report(const Polynomial& family_f, const Submodule& sigma_family,
                                 const std::vector<std::vector<Polynomial>>& points,
                                 GenericScalarStream& stream, unsigned n_max) {
  const Context& total = sigma_family.context();
  if (total->nparams() != 1) throw Error(ErrorKind::Unsupported, "family needs exactly one parameter");
  const Field field = total->field();
  const std::vector<Scalar> origin(total->nspace(), Scalar::zero(field));
  PellikaanReport rep;

  {
    const std::vector<Scalar> t{Scalar::zero(field)};
    const Context fiber = fiber_context(total, t, origin, MonomialOrder::local());
    const Polynomial f = specialize(family_f, total, fiber, t, origin);
    const Submodule i = specialize(sigma_family, fiber, t, origin);
    if (!contains(ideal_product(i, i), Submodule::ideal(fiber, {f}))) {
      throw Error(ErrorKind::NotContained, "f is not in I^2");
    }
    rep.j = j_invariant(f, i);
    rep.e = pair_multiplicity(jacobian_ideal(fiber, f), i, n_max).value;
  }

  rep.parameter = nonzero_draw(stream, field);
  const std::vector<Scalar> t{rep.parameter};
  const Context global = fiber_context(total, t, origin, MonomialOrder::degrevlex());
  const Polynomial ft = specialize(family_f, total, global, t, origin);
  const Submodule sigma_t = specialize(sigma_family, global, t, origin);
  const Submodule jt = jacobian_ideal(global, ft);
  const Context local = global->with_order(MonomialOrder::local());

  std::uint64_t local_sum = 0;
  for (const auto& coords : points) {
    auto cls = classify_singular_point(ft, sigma_t, evaluate_point(total, coords, rep.parameter));
    const Length len = pair_length(translate(jt, local, cls.point), translate(sigma_t, local, cls.point));
    local_sum += finite_or(len, ErrorKind::IncompletePointList, "local length at a declared point");
    switch (cls.kind) {
      case PointClass::A1: ++rep.a1; break;
      case PointClass::DInfinity: ++rep.d_infinity; break;
      case PointClass::AInfinity: ++rep.a_infinity; break;
      case PointClass::Other: ++rep.other; break;
    }
    rep.points.push_back(std::move(cls));
  }
  const Length global_len = pair_length(jt, sigma_t);
  if (!global_len.is_finite() || global_len.value() != local_sum) {
    throw Error(ErrorKind::IncompletePointList,
                "I/J(f) has length " + global_len.to_string() + " at t = " + rep.parameter.to_string() +
                    " but the declared points account for " + std::to_string(local_sum));
  }
  rep.global_length = global_len.value();
  rep.e_equals_j = rep.e == static_cast<std::int64_t>(rep.j);
  rep.j_equals_count = rep.j == rep.d_infinity + rep.a1;
  rep.holds = rep.e_equals_j && rep.j_equals_count;
  return rep;
}

// Map germs -----------------------------------------------------------------

PolyRingPtr MapGerm::source_ring() const {
  std::vector<std::string> names = params;
  names.insert(names.end(), source.begin(), source.end());
  return make_poly_ring(std::move(names), field);
}

MapGerm make_map_germ(std::vector<std::string> source, std::vector<std::string> target,
                      const std::vector<std::string>& components, std::vector<std::string> params, Field field) {
  if (components.size() != target.size()) {
    throw Error(ErrorKind::InvalidArgument, "need one component per target variable");
  }
  MapGerm g{std::move(params), std::move(source), std::move(target), {}, field};
  const auto ring = g.source_ring();
  for (const auto& c : components) g.components.push_back(parse_polynomial(c, ring));
  return g;
}

Presentation pushforward_presentation(const MapGerm& germ) {
  const std::size_t np = germ.params.size();
  const std::size_t a = germ.source.size() - 1;
  if (germ.source.empty() || germ.target.size() != a + 2 || germ.components.size() != a + 2) {
    throw Error(ErrorKind::NotCorank1, "expected (u_1..u_a, v) -> (x_1..x_a, y, z)");
  }
  const auto src = germ.source_ring();
  for (std::size_t i = 0; i < a; ++i) {
    if (!(germ.components[i] == Polynomial::variable(src, np + i))) {
      throw Error(ErrorKind::NotCorank1, "component " + std::to_string(i + 1) + " is not the source variable " +
                                             germ.source[i]);
    }
  }

  // Ring v, params, x_1..x_a, y, z with v eliminated first.
  std::vector<std::string> names{germ.source.back()};
  names.insert(names.end(), germ.params.begin(), germ.params.end());
  names.insert(names.end(), germ.target.begin(), germ.target.end());
  const Context elim = make_context(names, MonomialOrder::elimination(1), {}, germ.field);
  const auto& ring = elim->poly_ring();
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < np; ++k) images.push_back(elim->var(1 + k));
  for (std::size_t i = 0; i < a; ++i) images.push_back(elim->var(1 + np + i));
  images.push_back(elim->var(0));
  const Polynomial p = germ.components[a].substitute(images, ring);
  const Polynomial q = germ.components[a + 1].substitute(images, ring);

  int m = -1;
  for (const auto& t : p.terms()) m = std::max(m, t.monomial[0]);
  std::optional<int> ord_v;
  for (const auto& t : p.terms()) {
    if (t.monomial[0] == m && t.monomial.degree() != m) {
      throw Error(ErrorKind::NotFinite, "leading v-coefficient of p is not constant");
    }
    if (t.monomial.degree() == t.monomial[0]) ord_v = std::min(ord_v.value_or(t.monomial[0]), t.monomial[0]);
  }
  if (m <= 0 || !ord_v || *ord_v != m) throw Error(ErrorKind::NotFinite, "germ is not finite");

  const std::size_t ydx = 1 + np + a;
  const GBasis rel = groebner_basis(Submodule::ideal(elim, {elim->var(ydx) - p}));
  const auto deg = static_cast<std::size_t>(m);

  Presentation out;
  out.degree = static_cast<unsigned>(m);
  out.target = make_context(germ.target, MonomialOrder::local(), germ.params, germ.field);
  const auto& tring = out.target->poly_ring();
  std::vector<Polynomial> to_target{Polynomial(tring)};
  for (std::size_t k = 0; k + 1 < names.size(); ++k) to_target.push_back(out.target->var(k));

  PolyMatrix qm(tring, deg, deg);
  Polynomial vi = elim->constant(1);
  for (std::size_t i = 0; i < deg; ++i, vi = vi * elim->var(0)) {
    const Polynomial h = normal_form(FreeElement({q * vi}), rel)[0];
    std::vector<std::vector<Term>> rows(deg);
    for (const auto& t : h.terms()) {
      Monomial rest = t.monomial;
      const auto j = static_cast<std::size_t>(rest[0]);
      rest.set(0, 0);
      rows.at(j).push_back(Term{rest, t.coefficient});
    }
    for (std::size_t j = 0; j < deg; ++j) {
      qm(j, i) = Polynomial::from_terms(ring, rows[j]).substitute(to_target, tring);
    }
  }
  const Polynomial z = out.target->var(out.target->nvars() - 1);
  out.matrix = PolyMatrix(tring, deg, deg);
  for (std::size_t r = 0; r < deg; ++r) {
    for (std::size_t c = 0; c < deg; ++c) out.matrix(r, c) = (r == c ? z : Polynomial(tring)) - qm(r, c);
  }
  std::vector<std::size_t> all(deg);
  for (std::size_t i = 0; i < deg; ++i) all[i] = i;
  out.f0 = out.matrix.minor(all, all);
  out.f1 = deg == 1 ? unit_ideal(out.target) : minors(out.target, out.matrix, deg - 1);
  return out;
}

Submodule image_by_elimination(const MapGerm& germ) {
  std::vector<std::string> names = germ.params;
  names.insert(names.end(), germ.source.begin(), germ.source.end());
  names.insert(names.end(), germ.target.begin(), germ.target.end());
  const Context graph = make_context(names, MonomialOrder::degrevlex(), {}, germ.field);
  const std::size_t ns = germ.params.size() + germ.source.size();
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < ns; ++k) images.push_back(graph->var(k));
  std::vector<Polynomial> eqs;
  for (std::size_t i = 0; i < germ.target.size(); ++i) {
    eqs.push_back(graph->var(ns + i) - germ.components.at(i).substitute(images, graph->poly_ring()));
  }
  const Submodule img = eliminate(Submodule::ideal(graph, eqs), germ.source);

  const Context target = make_context(germ.target, MonomialOrder::local(), germ.params, germ.field);
  std::vector<Polynomial> back;
  for (std::size_t k = 0; k < germ.params.size(); ++k) back.push_back(target->var(k));
  for (std::size_t k = 0; k < germ.source.size(); ++k) back.push_back(Polynomial(target->poly_ring()));
  for (std::size_t i = 0; i < germ.target.size(); ++i) back.push_back(target->var(germ.params.size() + i));
  std::vector<Polynomial> gens;
  for (const auto& g : img.ideal_generators()) gens.push_back(g.substitute(back, target->poly_ring()));
  return Submodule::ideal(target, std::move(gens));
}

DisentanglementReport disentanglement_report(const MapGerm& germ, GenericScalarStream& stream, unsigned n_max,
                                             const std::optional<Unfolding>& unfolding) {
  if (!germ.params.empty()) throw Error(ErrorKind::InvalidArgument, "the germ itself must not have parameters");
  const Presentation pres = pushforward_presentation(germ);
  const Context& tgt = pres.target;
  const std::size_t n = tgt->nvars();
  DisentanglementReport rep;
  rep.image = pres.f0;
  rep.conductor = pres.f1;
  const Submodule jf = jacobian_ideal(tgt, pres.f0);

  // The pair is taken in the smooth ambient O_3, as for the family over the unfolding base.
  rep.e_pair = pair_multiplicity(jf, pres.f1, n_max).value;

  constexpr unsigned kMaxRetries = 8;
  const auto cgens = pres.f1.ideal_generators();
  for (unsigned attempt = 0;; ++attempt) {
    std::vector<Polynomial> combos;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial acc(tgt->poly_ring());
      for (const auto& g : cgens) acc += g * stream.draw_one(tgt->field());
      combos.push_back(std::move(acc));
    }
    rep.conductor_p = Submodule::ideal(tgt, std::move(combos));
    const Length l = pair_length(rep.conductor_p, pres.f1);
    if (l.is_finite()) {
      rep.dim_c_over_cp = l.value();
      break;
    }
    if (attempt == kMaxRetries) throw Error(ErrorKind::InfiniteLength, "C/C_P stayed infinite after redraws");
  }
  if (!contains(pres.f1, jf)) throw Error(ErrorKind::NotContained, "J(f) is not contained in C");
  rep.dim_c_over_jf = finite_or(pair_length(jf, pres.f1), ErrorKind::InfiniteLength, "C/J(f)");

  const Context source = make_context(germ.source, MonomialOrder::local(), {}, germ.field);
  const auto& comps = germ.components;
  auto pull = [&](const Submodule& s) {
    std::vector<Polynomial> gens;
    for (const auto& g : s.ideal_generators()) gens.push_back(g.substitute(comps, source->poly_ring()));
    return Submodule::ideal(source, std::move(gens));
  };
  rep.dim_c_over_jf_pullback =
      finite_or(pair_length(pull(jf), pull(pres.f1)), ErrorKind::InfiniteLength, "pulled back C/J(f)");
  rep.mu = rep.e_pair + static_cast<std::int64_t>(rep.dim_c_over_cp) -
           static_cast<std::int64_t>(rep.dim_c_over_jf_pullback);
  rep.thm26_ii = rep.e_pair + static_cast<std::int64_t>(rep.dim_c_over_cp) ==
                 static_cast<std::int64_t>(rep.dim_c_over_jf);

  if (unfolding) {
    if (unfolding->germ.params.size() != 1) throw Error(ErrorKind::Unsupported, "unfolding needs one parameter");
    const Presentation up = pushforward_presentation(unfolding->germ);
    rep.census = pellikaan_report(up.f0, up.f1, unfolding->points, stream, n_max);
    rep.thm26_ii_count = rep.dim_c_over_jf == rep.census->d_infinity + rep.census->a1;
    rep.cor27_count = rep.mu == static_cast<std::int64_t>(rep.census->a1);
    const FamilySpec fam{up.target, up.f1, up.f1, {}};
    const PolarReport polar = polar_ideal(up.f1, n, stream);
    rep.polar_mult = polar_mult_over_base(polar, fam, stream).value;
    rep.thm26_i = *rep.polar_mult == rep.dim_c_over_cp;
  }
  return rep;
}

// ICIS invariants -----------------------------------------------------------

std::uint64_t milnor_icis(const Context& ctx, const std::vector<Polynomial>& equations) {
  const Context local = ctx->with_order(MonomialOrder::local())->with_quotient({}, 0);
  std::int64_t prev = 0;
  for (std::size_t i = 1; i <= equations.size(); ++i) {
    if (i > local->nspace()) throw Error(ErrorKind::NotICIS, "more equations than variables");
    const std::vector<Polynomial> head(equations.begin(), equations.begin() + static_cast<long>(i));
    const auto jac = jacobian_matrix(head, local->nparams(), local->nvars(), local->poly_ring());
    Submodule s = minors(local, jac, i);
    if (i > 1) s = ideal_sum(Submodule::ideal(local, {head.begin(), head.end() - 1}), s);
    const auto c = static_cast<std::int64_t>(finite_or(colength(s), ErrorKind::NotICIS, "Milnor algebra"));
    if (c < prev) throw Error(ErrorKind::NotICIS, "equations are not in a valid order for the recursion");
    prev = c - prev;
  }
  return static_cast<std::uint64_t>(prev);
}

OneFormReport one_form_index(const Context& ctx, const std::vector<Polynomial>& equations,
                             const std::vector<Polynomial>& omega, const std::optional<Polynomial>& linear_form,
                             GenericScalarStream& stream, unsigned n_max) {
  const Context local = ctx->with_order(MonomialOrder::local())->with_quotient({}, 0);
  const std::size_t first = local->nparams(), nv = local->nvars();
  if (omega.size() != nv - first) throw Error(ErrorKind::InvalidArgument, "need one 1-form coefficient per variable");
  require_icis(local, equations);
  const Context x = local->with_quotient(equations, static_cast<int>(nv - first - equations.size()));

  OneFormReport rep;
  Polynomial l(local->poly_ring());
  if (linear_form) {
    l = *linear_form;
  } else {
    for (std::size_t v = first; v < nv; ++v) l += local->var(v) * stream.draw_one(local->field());
    rep.assumptions.push_back("generic_linear_form: drawn from the seed");
  }
  for (std::size_t v = first; v < nv; ++v) rep.linear_form_coefficients.push_back(l.differentiate(v));

  auto e_br = [&](const std::vector<Polynomial>& form, const char* what) {
    std::vector<FreeElement> cols;
    for (std::size_t v = first; v < nv; ++v) {
      std::vector<Polynomial> comps;
      for (const auto& g : equations) comps.push_back(g.differentiate(v));
      comps.push_back(form[v - first]);
      cols.emplace_back(std::move(comps));
    }
    const Submodule jm(x, equations.size() + 1, std::move(cols));
    if (!colength(jm).is_finite()) throw Error(ErrorKind::NotIsolated, std::string(what) + " has no isolated zero on X");
    return buchsbaum_rim(jm, n_max).value;
  };
  rep.e_omega = e_br(omega, "the 1-form");
  rep.e_dl = e_br(rep.linear_form_coefficients, "dL");
  std::vector<Polynomial> sliced = equations;
  sliced.push_back(l);
  rep.slice_mu = milnor_icis(local, sliced);
  rep.index = rep.e_omega - rep.e_dl + static_cast<std::int64_t>(rep.slice_mu);
  rep.pair_terms_cancel = rep.e_omega == rep.e_dl;
  return rep;
}

WfReport wf_invariant(const Context& ctx, const std::vector<Polynomial>& equations, const Polynomial& f,
                      const Polynomial& l, GenericScalarStream& stream, unsigned n_max, std::vector<Scalar> samples) {
  if (ctx->nparams() != 1) throw Error(ErrorKind::Unsupported, "family needs exactly one parameter");
  const Field field = ctx->field();
  if (samples.empty()) samples = {Scalar::zero(field), nonzero_draw(stream, field)};
  const std::vector<Scalar> origin(ctx->nspace(), Scalar::zero(field));
  const Context total = ctx->with_quotient({}, 0);
  WfReport rep;
  for (const auto& y : samples) {
    const std::vector<Scalar> base{y};
    const Context fiber = fiber_context(total, base, origin, MonomialOrder::local());
    std::vector<Polynomial> fy;
    for (const auto& e : equations) fy.push_back(specialize(e, total, fiber, base, origin));
    require_icis(fiber, fy);
    const Context x = fiber->with_quotient(fy, static_cast<int>(fiber->nvars() - fy.size()));
    std::vector<Polynomial> vars;
    for (std::size_t v = 0; v < x->nvars(); ++v) vars.push_back(x->var(v));
    const Submodule m = Submodule::ideal(x, vars);
    auto e_of = [&](const Polynomial& g) {
      const Submodule jm = module_times_ideal(
          jacobian_module(x, fy, specialize(g, total, fiber, base, origin), Relative::Space), m);
      if (!colength(jm).is_finite()) throw Error(ErrorKind::NotIsolated, "function has no isolated critical point");
      return buchsbaum_rim(jm, n_max).value;
    };
    WfSample s{y, e_of(f), e_of(l), 0};
    s.difference = s.e_f - s.e_l;
    rep.samples.push_back(std::move(s));
  }
  auto same = [&](auto field_of) {
    return std::all_of(rep.samples.begin(), rep.samples.end(),
                       [&](const WfSample& s) { return field_of(s) == field_of(rep.samples.front()); });
  };
  rep.e_constant = same([](const WfSample& s) { return s.e_f; });
  rep.independent = same([](const WfSample& s) { return s.difference; });
  return rep;
}

}  // namespace pairmult
