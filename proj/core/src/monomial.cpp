#include "pairmult/symcore/monomial.hpp"

#include <algorithm>
#include <cassert>

#include "pairmult/error.hpp"
#include "pairmult/symcore/order.hpp"

namespace pairmult {

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (auto e : exps_) degree_ += e;
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent value) {
  degree_ += value - exps_[i];
  exps_[i] = value;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  assert(exps_.size() == other.exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ -= other.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool lex_greater(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i];
  }
  return false;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : exps_) {
    h ^= static_cast<std::size_t>(e);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------

namespace {

// Reverse-lex tie-break on the index range [lo, hi): the monomial with the
// smaller exponent in the last differing variable is larger.
std::strong_ordering revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i > lo; --i) {
    if (a[i - 1] != b[i - 1]) {
      return a[i - 1] < b[i - 1] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::int64_t block_degree(const Monomial& m, std::size_t lo, std::size_t hi) {
  std::int64_t d = 0;
  for (std::size_t i = lo; i < hi; ++i) d += m[i];
  return d;
}

}  // namespace

MonomialOrder MonomialOrder::weighted(std::vector<std::int64_t> weights) {
  for (auto w : weights) {
    if (w <= 0) throw Error(ErrorKind::InvalidArgument, "weighted order needs positive weights");
  }
  MonomialOrder o(OrderKind::Weighted);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t split) {
  MonomialOrder o(OrderKind::Elimination);
  o.split_ = split;
  return o;
}

MonomialOrder MonomialOrder::with_extension(ModuleExtension ext,
                                            std::vector<std::int64_t> shifts) const {
  MonomialOrder o = *this;
  o.extension_ = ext;
  o.shifts_ = std::move(shifts);
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorKind::ContextMismatch, "monomials with different variable counts");
  }
  if (kind_ == OrderKind::Weighted && weights_.size() != a.nvars()) {
    throw Error(ErrorKind::ContextMismatch, "weight vector length differs from variable count");
  }
  return compare_unchecked(a, b);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a,
                                                      const Monomial& b) const noexcept {
  const std::size_t n = a.nvars();
  switch (kind_) {
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex(a, b, 0, n);
    case OrderKind::LocalDegRevLex:
      if (a.degree() != b.degree()) return b.degree() <=> a.degree();
      return revlex(a, b, 0, n);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::Weighted: {
      std::int64_t wa = 0;
      std::int64_t wb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
      }
      if (wa != wb) return wa <=> wb;
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex(a, b, 0, n);
    }
    case OrderKind::Elimination: {
      const std::size_t s = std::min(split_, n);
      const auto da = block_degree(a, 0, s);
      const auto db = block_degree(b, 0, s);
      if (da != db) return da <=> db;
      if (auto c = revlex(a, b, 0, s); c != 0) return c;
      const auto ra = a.degree() - da;
      const auto rb = b.degree() - db;
      if (ra != rb) return ra <=> rb;
      return revlex(a, b, s, n);
    }
  }
  return std::strong_ordering::equal;
}

std::int64_t MonomialOrder::term_degree(const Monomial& m, std::size_t component) const noexcept {
  std::int64_t shift = component < shifts_.size() ? shifts_[component] : 0;
  return m.degree() + shift;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, std::size_t ca, const Monomial& b,
                                            std::size_t cb) const {
  if (extension_ == ModuleExtension::PositionOverTerm) {
    if (ca != cb) return cb <=> ca;
    return compare_unchecked(a, b);
  }
  if (!shifts_.empty()) {
    const auto da = term_degree(a, ca);
    const auto db = term_degree(b, cb);
    if (da != db) return is_local() ? db <=> da : da <=> db;
  }
  if (auto c = compare_unchecked(a, b); c != 0) return c;
  return cb <=> ca;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Weighted: return "weighted";
    case OrderKind::LocalDegRevLex: return "local_degrevlex";
    case OrderKind::Elimination: return "elimination(" + std::to_string(split_) + ")";
  }
  return "?";
}

}  // namespace pairmult
