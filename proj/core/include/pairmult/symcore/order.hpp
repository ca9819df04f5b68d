#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pairmult/symcore/monomial.hpp"

namespace pairmult {

enum class OrderKind {
  DegRevLex,       // global
  Lex,             // global
  Weighted,        // global, positive weights, degrevlex tie-break
  LocalDegRevLex,  // local: lower total degree is larger
  Elimination,     // global block order, degrevlex on vars [0, split) then on the rest
};

enum class ModuleExtension {
  PositionOverTerm,  // component first; component 0 is the largest
  TermOverPosition,  // (shifted) term first, then component
};

/// Monomial order on a polynomial ring, extended to free modules.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder local() { return MonomialOrder(OrderKind::LocalDegRevLex); }
  static MonomialOrder weighted(std::vector<std::int64_t> weights);
  static MonomialOrder elimination(std::size_t split);

  OrderKind kind() const noexcept { return kind_; }
  bool is_local() const noexcept { return kind_ == OrderKind::LocalDegRevLex; }
  bool is_global() const noexcept { return !is_local(); }
  std::size_t split() const noexcept { return split_; }
  ModuleExtension extension() const noexcept { return extension_; }

  MonomialOrder with_extension(ModuleExtension ext, std::vector<std::int64_t> shifts = {}) const;

  /// Monomial comparison; both arguments must have the same variable count.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  /// Comparison of module terms a*e_ca and b*e_cb.
  std::strong_ordering compare(const Monomial& a, std::size_t ca, const Monomial& b,
                               std::size_t cb) const;

  /// Degree used for ecart and sugar: total degree plus the component shift.
  std::int64_t term_degree(const Monomial& m, std::size_t component) const noexcept;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const noexcept;

  OrderKind kind_ = OrderKind::DegRevLex;
  std::vector<std::int64_t> weights_;
  std::size_t split_ = 0;
  ModuleExtension extension_ = ModuleExtension::PositionOverTerm;
  std::vector<std::int64_t> shifts_;
};

}  // namespace pairmult
