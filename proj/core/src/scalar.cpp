#include "pairmult/symcore/scalar.hpp"

#include "pairmult/error.hpp"

namespace pairmult {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce(const mpq_class& q, std::uint32_t p) {
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw Error(ErrorKind::InvalidArgument,
                "denominator " + q.get_den().get_str() + " vanishes modulo " + std::to_string(p));
  }
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
  mpz_class r = (num * inv) % p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "field characteristic must be a prime below 2^31, got " +
                                                std::to_string(p));
  }
  return Field{p};
}

std::string Field::to_string() const {
  return is_rational() ? std::string("QQ") : "FP:" + std::to_string(characteristic);
}

Scalar::Scalar(long value, Field field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    long r = value % static_cast<long>(field.characteristic);
    if (r < 0) r += field.characteristic;
    value_ = Residue{static_cast<std::uint32_t>(r), field.characteristic};
  }
}

Scalar::Scalar(const mpq_class& value, Field field) {
  if (field.is_rational()) {
    value_ = value;
  } else {
    value_ = Residue{reduce(value, field.characteristic), field.characteristic};
  }
}

Field Scalar::field() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field{r->modulus};
  return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

mpq_class Scalar::to_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  return mpq_class(std::get<Residue>(value_).value);
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_)) {
    mpq_neg(q->get_mpq_t(), q->get_mpq_t());
  } else {
    auto& res = std::get<Residue>(r.value_);
    if (res.value != 0) res.value = res.modulus - res.value;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Scalar r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_)) {
    mpq_inv(q->get_mpq_t(), q->get_mpq_t());
  } else {
    auto& res = std::get<Residue>(r.value_);
    res.value = pow_mod(res.value, res.modulus - 2, res.modulus);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(other.value_);
  } else {
    auto& a = std::get<Residue>(value_);
    const auto& b = std::get<Residue>(other.value_);
    a.value = static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % a.modulus);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(other.value_);
  } else {
    auto& a = std::get<Residue>(value_);
    const auto& b = std::get<Residue>(other.value_);
    a.value = static_cast<std::uint32_t>((std::uint64_t{a.value} + a.modulus - b.value) % a.modulus);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(other.value_);
  } else {
    auto& a = std::get<Residue>(value_);
    const auto& b = std::get<Residue>(other.value_);
    a.value = static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % a.modulus);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

void Scalar::sub_mul(const Scalar& a, const Scalar& b) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(a.value_).get_mpq_t(),
            std::get<mpq_class>(b.value_).get_mpq_t());
    mpq_sub(q->get_mpq_t(), q->get_mpq_t(), tmp.get_mpq_t());
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& x = std::get<Residue>(a.value_);
    const auto& y = std::get<Residue>(b.value_);
    std::uint64_t prod = std::uint64_t{x.value} * y.value % r.modulus;
    r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} + r.modulus - prod) % r.modulus);
  }
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

}  // namespace pairmult
