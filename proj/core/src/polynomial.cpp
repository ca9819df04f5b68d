#include "pairmult/symcore/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "pairmult/error.hpp"

namespace pairmult {

PolyRing::PolyRing(std::vector<std::string> names, Field field)
    : names_(std::move(names)), field_(field) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw Error(ErrorKind::InvalidArgument, "duplicate variable name " + names_[i]);
      }
    }
  }
}

std::size_t PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw Error(ErrorKind::UnknownVariable, "unknown variable " + std::string(name));
}

bool PolyRing::has_variable(std::string_view name) const noexcept {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

PolyRingPtr make_poly_ring(std::vector<std::string> names, Field field) {
  return std::make_shared<const PolyRing>(std::move(names), field);
}

// ---------------------------------------------------------------------------

namespace {

bool term_before(const Term& a, const Term& b) { return lex_greater(a.monomial, b.monomial); }

// Merge a + sign*b of two canonically sorted term lists.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && lex_greater(a[i].monomial, b[j].monomial))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || lex_greater(b[j].monomial, a[i].monomial)) {
      out.push_back(b[j++]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      Scalar c = a[i].coefficient;
      if (subtract) {
        c -= b[j].coefficient;
      } else {
        c += b[j].coefficient;
      }
      if (!c.is_zero()) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c) {
  return monomial(ring, Monomial(ring->nvars()), c);
}

Polynomial Polynomial::constant(PolyRingPtr ring, long c) {
  const Field f = ring->field();
  return constant(std::move(ring), Scalar(c, f));
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  const Field f = ring->field();
  const auto n = ring->nvars();
  return monomial(std::move(ring), Monomial::variable(n, index), Scalar::one(f));
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::string_view name) {
  const auto idx = ring->index_of(name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Monomial m, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (m.nvars() != p.ring_->nvars()) {
    throw Error(ErrorKind::ContextMismatch, "monomial variable count differs from ring");
  }
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  std::sort(terms.begin(), terms.end(), term_before);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Scalar::zero(ring_ ? ring_->field() : Field::rationals());
}

std::int64_t Polynomial::degree() const noexcept {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::int64_t Polynomial::order_at_origin() const noexcept {
  if (terms_.empty()) return -1;
  std::int64_t d = terms_[0].monomial.degree();
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
  return d;
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_) {
    if (ord.compare(t.monomial, best->monomial) > 0) best = &t;
  }
  return *best;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ && other.ring_ && !ring_->compatible(*other.ring_)) {
    throw Error(ErrorKind::ContextMismatch, "polynomials from different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  if (!ring_) ring_ = other.ring_;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  if (!ring_) ring_ = other.ring_;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_ ? a.ring_ : b.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = ta.monomial * tb.monomial;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), ta.coefficient * tb.coefficient);
      } else {
        Scalar prod = ta.coefficient * tb.coefficient;
        it->second += prod;
      }
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_before);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, 1L);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::differentiate(std::size_t var) const {
  if (!ring_ || var >= ring_->nvars()) {
    throw Error(ErrorKind::UnknownVariable, "differentiation variable out of range");
  }
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    Scalar c = t.coefficient * Scalar(static_cast<long>(e), ring_->field());
    if (!c.is_zero()) out.push_back({std::move(m), std::move(c)});
  }
  // Lowering one exponent keeps the lexicographic order strictly decreasing.
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::differentiate(std::string_view var) const {
  if (!ring_) throw Error(ErrorKind::UnknownVariable, "unknown variable " + std::string(var));
  return differentiate(ring_->index_of(var));
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images,
                                  const PolyRingPtr& target) const {
  if (images.size() != ring_->nvars()) {
    throw Error(ErrorKind::ContextMismatch, "substitution needs one image per variable");
  }
  // Cached powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1L));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, Scalar(t.coefficient.to_rational(), target->field()));
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i] > 0) term = term * power_of(i, t.monomial[i]);
    }
    result += term;
  }
  return result;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  const Field f = ring_->field();
  Scalar total = Scalar::zero(f);
  for (const auto& t : terms_) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? std::string("1") : s;
}

std::string Polynomial::to_string(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
    return ord.compare(a->monomial, b->monomial) > 0;
  });
  std::string out;
  bool first = true;
  for (const Term* t : sorted) {
    std::string coeff = t->coefficient.to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = coeff == "1";
    if (t->monomial.is_one()) {
      out += coeff;
    } else {
      if (!unit) out += coeff + '*';
      out += monomial_to_string(t->monomial, *ring_);
    }
  }
  return out;
}

}  // namespace pairmult
