#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace pairmult {

/// Coefficient field: the rationals (characteristic 0) or F_p with p < 2^31.
struct Field {
  std::uint32_t characteristic = 0;

  static Field rationals() { return {}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return characteristic == 0; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact field element. Rationals are kept canonical by GMP; F_p residues are
/// kept in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(long value, Field field);
  Scalar(const mpq_class& value, Field field);

  static Scalar zero(Field field) { return Scalar(0L, field); }
  static Scalar one(Field field) { return Scalar(1L, field); }

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Rational value; for F_p this is the canonical residue.
  mpq_class to_rational() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  /// this -= a * b without temporaries on the rational path.
  void sub_mul(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  std::variant<mpq_class, Residue> value_;
};

}  // namespace pairmult
