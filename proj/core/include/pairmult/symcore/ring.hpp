#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pairmult/symcore/order.hpp"
#include "pairmult/symcore/polynomial.hpp"

namespace pairmult {

/// Ambient data shared by every polynomial and submodule of a computation:
/// variables split into base parameters (first) and fiber space variables
/// (last), the monomial order, and the optional ideal defining X.
class RingContext {
 public:
  RingContext(std::vector<std::string> params, std::vector<std::string> space, Field field,
              MonomialOrder order);

  const PolyRingPtr& poly_ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  std::size_t nparams() const noexcept { return nparams_; }
  std::size_t nspace() const noexcept { return ring_->nvars() - nparams_; }
  std::vector<std::string> param_names() const;
  std::vector<std::string> space_names() const;
  Field field() const noexcept { return ring_->field(); }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& quotient() const noexcept { return quotient_; }
  /// Declared fiber dimension d.
  int dim() const noexcept { return dim_; }

  Polynomial var(std::string_view name) const { return Polynomial::variable(ring_, name); }
  Polynomial var(std::size_t index) const { return Polynomial::variable(ring_, index); }
  Polynomial constant(long c) const { return Polynomial::constant(ring_, c); }
  Polynomial constant(const Scalar& c) const { return Polynomial::constant(ring_, c); }

  std::shared_ptr<const RingContext> with_order(MonomialOrder order) const;
  /// Replaces the quotient ideal; `dim` is the declared dimension of X.
  std::shared_ptr<const RingContext> with_quotient(std::vector<Polynomial> quotient, int dim) const;
  std::shared_ptr<const RingContext> with_dim(int dim) const;

 private:
  PolyRingPtr ring_;
  std::size_t nparams_ = 0;
  MonomialOrder order_;
  std::vector<Polynomial> quotient_;
  int dim_ = 0;
};

using Context = std::shared_ptr<const RingContext>;

/// Smooth ambient context: no quotient, d = number of space variables.
Context make_context(std::vector<std::string> space, MonomialOrder order = MonomialOrder::local(),
                     std::vector<std::string> params = {}, Field field = Field::rationals());

}  // namespace pairmult
