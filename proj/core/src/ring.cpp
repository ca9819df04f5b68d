#include "pairmult/symcore/ring.hpp"

#include "pairmult/error.hpp"

namespace pairmult {

namespace {

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

RingContext::RingContext(std::vector<std::string> params, std::vector<std::string> space,
                         Field field, MonomialOrder order)
    : ring_(make_poly_ring(concat(params, space), field)),
      nparams_(params.size()),
      order_(std::move(order)),
      dim_(static_cast<int>(space.size())) {}

std::vector<std::string> RingContext::param_names() const {
  return {ring_->names().begin(), ring_->names().begin() + static_cast<std::ptrdiff_t>(nparams_)};
}

std::vector<std::string> RingContext::space_names() const {
  return {ring_->names().begin() + static_cast<std::ptrdiff_t>(nparams_), ring_->names().end()};
}

Context RingContext::with_order(MonomialOrder order) const {
  auto copy = std::make_shared<RingContext>(*this);
  copy->order_ = std::move(order);
  return copy;
}

Context RingContext::with_quotient(std::vector<Polynomial> quotient, int dim) const {
  auto copy = std::make_shared<RingContext>(*this);
  std::vector<Polynomial> kept;
  for (auto& q : quotient) {
    if (!q.ring()->compatible(*ring_)) {
      throw Error(ErrorKind::ContextMismatch, "quotient generator from a different ring");
    }
    if (!q.is_zero()) kept.push_back(std::move(q));
  }
  if (dim < 0) throw Error(ErrorKind::InvalidArgument, "dimension must be non-negative");
  copy->quotient_ = std::move(kept);
  copy->dim_ = dim;
  return copy;
}

Context RingContext::with_dim(int dim) const {
  auto copy = std::make_shared<RingContext>(*this);
  copy->dim_ = dim;
  return copy;
}

Context make_context(std::vector<std::string> space, MonomialOrder order,
                     std::vector<std::string> params, Field field) {
  return std::make_shared<const RingContext>(std::move(params), std::move(space), field,
                                             std::move(order));
}

}  // namespace pairmult
