#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pairmult/symcore/monomial.hpp"
#include "pairmult/symcore/order.hpp"
#include "pairmult/symcore/scalar.hpp"

namespace pairmult {

/// Variable names plus coefficient field. Polynomials point at one of these;
/// two rings are compatible when names and field agree.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, Field field);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  Field field() const noexcept { return field_; }

  /// Index of a variable; throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
  bool has_variable(std::string_view name) const noexcept;

  bool compatible(const PolyRing& other) const noexcept {
    return this == &other || (field_ == other.field_ && names_ == other.names_);
  }

 private:
  std::vector<std::string> names_;
  Field field_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(std::vector<std::string> names, Field field = Field::rationals());

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

/// Sparse polynomial with exact coefficients. Terms are stored without zero
/// coefficients in lexicographically decreasing exponent order, which makes
/// the representation canonical regardless of the order used for leading terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(PolyRingPtr ring, const Scalar& c);
  static Polynomial constant(PolyRingPtr ring, long c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial variable(PolyRingPtr ring, std::string_view name);
  static Polynomial monomial(PolyRingPtr ring, Monomial m, const Scalar& c);
  /// Builds from arbitrary (possibly repeated, zero) terms.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Coefficient of the monomial 1.
  Scalar constant_term() const;
  std::int64_t degree() const noexcept;
  /// Lowest total degree of a term (order at the origin); -1 for zero.
  std::int64_t order_at_origin() const noexcept;

  /// Largest term under `ord`. Precondition: nonzero.
  const Term& leading_term(const MonomialOrder& ord) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned n) const;
  Polynomial differentiate(std::size_t var) const;
  Polynomial differentiate(std::string_view var) const;
  Polynomial mul_monomial(const Monomial& m, const Scalar& c) const;

  /// Ring homomorphism: variable i maps to images[i], which live in `target`.
  Polynomial substitute(std::span<const Polynomial> images, const PolyRingPtr& target) const;
  /// Scalar value at a point given by one scalar per variable.
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Canonical text: terms in decreasing `ord` order, e.g. "x^2*y - 3/2*z + 1".
  std::string to_string(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

 private:
  void check_ring(const Polynomial& other) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Monomial& m, const PolyRing& ring);

/// Parses sums of products of integers, fractions, variables and
/// parenthesized expressions with `^` powers. Division is allowed by nonzero
/// constants only. Throws Error(InvalidArgument) with the column of the fault.
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring);

}  // namespace pairmult
