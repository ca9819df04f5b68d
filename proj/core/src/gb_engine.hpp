#pragma once

// Internal representation used by the basis algorithms: module vectors as a
// single term list sorted decreasingly by a module order.

#include <cstdint>
#include <vector>

#include "pairmult/gb/module.hpp"

namespace pairmult::detail {

struct MTerm {
  Monomial mono;
  std::uint32_t comp;
  Scalar coef;
};

struct Vec {
  std::vector<MTerm> terms;
  std::int64_t sugar = 0;

  bool is_zero() const noexcept { return terms.empty(); }
  const MTerm& lead() const { return terms.front(); }
};

/// Per-component degree bounds; empty when none is known.
using Bounds = std::vector<std::int64_t>;

class Engine {
 public:
  Engine(const MonomialOrder& order, std::size_t nvars, Field field)
      : order_(order), nvars_(nvars), field_(field) {}

  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return nvars_; }
  Field field() const noexcept { return field_; }

  Vec from_element(const FreeElement& v) const;
  FreeElement to_element(const Vec& v, const PolyRingPtr& ring, std::size_t rank) const;

  void sort(Vec& v) const;
  std::int64_t max_degree(const Vec& v) const;
  std::int64_t ecart(const Vec& v) const;
  void make_monic(Vec& v) const;

  /// h -= c * m * g.
  void sub_multiple(Vec& h, const Vec& g, const Monomial& m, const Scalar& c) const;
  Vec spoly(const Vec& f, const Vec& g) const;

  /// Full reduction (global): no term of the result is divisible by a lead of basis.
  Vec reduce_full(Vec h, const std::vector<Vec>& basis) const;
  /// Mora weak normal form (local). Terms at or beyond the per-component
  /// degree bounds (when given) are dropped as they go.
  Vec reduce_mora(Vec h, const std::vector<Vec>& basis, const Bounds* bounds = nullptr) const;

  /// Buchberger (global) or Mora (local) completion of the generators. For
  /// local orders, `bounds` receives degrees d_c with m^{d_c} e_c inside the
  /// module once pure powers show up in every component of the lead module.
  /// `seed` gives bounds known in advance; the caller vouches for them.
  std::vector<Vec> complete(std::vector<Vec> generators, bool use_product_criterion, std::size_t rank = 0,
                            Bounds* bounds = nullptr, const Bounds* seed = nullptr) const;

  /// Drops the terms of v, except the lead, at or beyond the bounds.
  static void truncate(Vec& v, const Bounds& bounds);

  /// Drop elements whose lead is divisible by another lead; for global orders
  /// also tail-reduce. Result is sorted by decreasing lead and monic.
  std::vector<Vec> interreduce(std::vector<Vec> basis) const;

 private:
  Bounds noether_bounds(const std::vector<std::vector<std::int64_t>>& pure, std::size_t rank) const;

  bool term_greater(const MTerm& a, const MTerm& b) const {
    return order_.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  }

  MonomialOrder order_;
  std::size_t nvars_;
  Field field_;
};

}  // namespace pairmult::detail
