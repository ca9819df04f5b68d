#include "pairmult/gb/transform.hpp"

#include "pairmult/error.hpp"

namespace pairmult {

namespace {

std::vector<Polynomial> images(const Context& total, const PolyRingPtr& target,
                               std::span<const Scalar> params, std::span<const Scalar> point) {
  if (params.size() != total->nparams() || point.size() != total->nspace()) {
    throw Error(ErrorKind::InvalidArgument, "specialization point has the wrong length");
  }
  std::vector<Polynomial> out;
  for (const auto& v : params) out.push_back(Polynomial::constant(target, v));
  for (std::size_t i = 0; i < point.size(); ++i) {
    out.push_back(Polynomial::variable(target, i) + Polynomial::constant(target, point[i]));
  }
  return out;
}

}  // namespace

Context fiber_context(const Context& total, std::span<const Scalar> params,
                      std::span<const Scalar> point, MonomialOrder order) {
  auto fiber = make_context(total->space_names(), std::move(order), {}, total->field());
  const auto imgs = images(total, fiber->poly_ring(), params, point);
  std::vector<Polynomial> quotient;
  for (const auto& q : total->quotient()) quotient.push_back(q.substitute(imgs, fiber->poly_ring()));
  return fiber->with_quotient(std::move(quotient), total->dim());
}

Polynomial specialize(const Polynomial& f, const Context& total, const Context& fiber,
                      std::span<const Scalar> params, std::span<const Scalar> point) {
  return f.substitute(images(total, fiber->poly_ring(), params, point), fiber->poly_ring());
}

Submodule specialize(const Submodule& s, const Context& fiber, std::span<const Scalar> params,
                     std::span<const Scalar> point) {
  const auto imgs = images(s.context(), fiber->poly_ring(), params, point);
  std::vector<FreeElement> gens;
  for (const auto& g : s.generators()) {
    std::vector<Polynomial> comps;
    for (const auto& c : g.components()) comps.push_back(c.substitute(imgs, fiber->poly_ring()));
    gens.emplace_back(std::move(comps));
  }
  return Submodule(fiber, s.rank(), std::move(gens));
}

Polynomial translate(const Polynomial& f, std::span<const Scalar> point) {
  const auto& ring = f.ring();
  if (point.size() != ring->nvars()) throw Error(ErrorKind::InvalidArgument, "point has the wrong length");
  std::vector<Polynomial> imgs;
  for (std::size_t i = 0; i < point.size(); ++i) {
    imgs.push_back(Polynomial::variable(ring, i) + Polynomial::constant(ring, point[i]));
  }
  return f.substitute(imgs, ring);
}

Submodule translate(const Submodule& s, const Context& target, std::span<const Scalar> point) {
  std::vector<FreeElement> gens;
  for (const auto& g : s.generators()) {
    std::vector<Polynomial> comps;
    for (const auto& c : g.components()) comps.push_back(translate(c, point));
    gens.emplace_back(std::move(comps));
  }
  return Submodule(target, s.rank(), std::move(gens));
}

}  // namespace pairmult
