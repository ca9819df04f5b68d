#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>

#include "gb_engine.hpp"
#include "pairmult/error.hpp"

namespace pairmult {

using detail::Engine;
using detail::Vec;
using detail::Bounds;

// FreeElement ---------------------------------------------------------------

FreeElement::FreeElement(PolyRingPtr ring, std::size_t rank) : ring_(std::move(ring)) {
  components_.assign(rank, Polynomial(ring_));
}

FreeElement::FreeElement(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) return;
  ring_ = components_.front().ring();
  for (auto& c : components_) {
    if (!c.ring()) c = Polynomial(ring_);
    if (!c.ring()->compatible(*ring_)) {
      throw Error(ErrorKind::ContextMismatch, "free element components from different rings");
    }
  }
}

FreeElement FreeElement::unit(PolyRingPtr ring, std::size_t rank, std::size_t index) {
  FreeElement e(ring, rank);
  e[index] = Polynomial::constant(ring, 1L);
  return e;
}

bool FreeElement::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  if (rank() != other.rank()) throw Error(ErrorKind::ContextMismatch, "rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] += other.components_[i];
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  if (rank() != other.rank()) throw Error(ErrorKind::ContextMismatch, "rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] -= other.components_[i];
  return *this;
}

FreeElement operator*(const Polynomial& f, const FreeElement& v) {
  FreeElement r = v;
  for (auto& c : r.components_) c = f * c;
  return r;
}

std::string FreeElement::to_string(const MonomialOrder& ord) const {
  std::string s = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) s += ", ";
    s += components_[i].to_string(ord);
  }
  return s + "]";
}

// PolyMatrix ----------------------------------------------------------------

PolyMatrix::PolyMatrix(PolyRingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::from_columns(PolyRingPtr ring, std::size_t rows,
                                    std::span<const FreeElement> columns) {
  PolyMatrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].rank() != rows) throw Error(ErrorKind::ContextMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

PolyMatrix PolyMatrix::from_rows(PolyRingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(ring, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Polynomial PolyMatrix::minor(std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols) const {
  const std::size_t t = rows.size();
  if (t != cols.size()) throw Error(ErrorKind::InvalidArgument, "minor needs a square selection");
  if (t == 0) return Polynomial::constant(ring_, 1L);
  if (t > 20) throw Error(ErrorKind::Overflow, "minor too large for cofactor expansion");
  // memo[mask] = determinant of rows [t - popcount(mask), t) on the columns in mask.
  std::map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::uint32_t)> det = [&](std::uint32_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(ring_, 1L);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
    const std::size_t row = rows[t - k];
    Polynomial acc(ring_);
    int sign = 1;
    for (std::size_t c = 0; c < t; ++c) {
      if (!(mask & (1U << c))) continue;
      const Polynomial& entry = (*this)(row, cols[c]);
      if (!entry.is_zero()) {
        Polynomial sub = det(mask & ~(1U << c));
        if (!sub.is_zero()) {
          if (sign > 0) {
            acc += entry * sub;
          } else {
            acc -= entry * sub;
          }
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return det((t == 32 ? 0U : (1U << t)) - 1U);
}

// Submodule -----------------------------------------------------------------

Submodule::Submodule(Context ctx, std::size_t rank, std::vector<FreeElement> generators)
    : ctx_(std::move(ctx)), rank_(rank), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.rank() != rank_) throw Error(ErrorKind::ContextMismatch, "generator rank mismatch");
    if (g.ring() && !g.ring()->compatible(*ctx_->poly_ring())) {
      throw Error(ErrorKind::ContextMismatch, "generator from a different ring");
    }
  }
}

Submodule Submodule::ideal(Context ctx, std::vector<Polynomial> generators) {
  std::vector<FreeElement> gens;
  gens.reserve(generators.size());
  for (auto& g : generators) {
    if (!g.ring()) g = Polynomial(ctx->poly_ring());
    gens.emplace_back(std::vector<Polynomial>{std::move(g)});
  }
  return Submodule(std::move(ctx), 1, std::move(gens));
}

Submodule Submodule::free(Context ctx, std::size_t rank) {
  std::vector<FreeElement> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(FreeElement::unit(ctx->poly_ring(), rank, i));
  return Submodule(std::move(ctx), rank, std::move(gens));
}

Submodule Submodule::from_matrix(Context ctx, const PolyMatrix& m) {
  std::vector<FreeElement> gens;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    FreeElement col(ctx->poly_ring(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
    gens.push_back(std::move(col));
  }
  return Submodule(std::move(ctx), m.rows(), std::move(gens));
}

std::vector<Polynomial> Submodule::ideal_generators() const {
  if (rank_ != 1) throw Error(ErrorKind::InvalidArgument, "submodule is not an ideal");
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g[0]);
  return out;
}

PolyMatrix Submodule::matrix() const {
  return PolyMatrix::from_columns(ctx_->poly_ring(), rank_, gens_);
}

Submodule Submodule::in_context(Context ctx) const {
  if (!ctx->poly_ring()->compatible(*ctx_->poly_ring())) {
    throw Error(ErrorKind::ContextMismatch, "context over different variables");
  }
  return Submodule(std::move(ctx), rank_, gens_);
}

// GBasis --------------------------------------------------------------------

GBasis::GBasis() : elements_(std::make_unique<std::vector<Vec>>()) {}

GBasis::GBasis(Context ctx, std::size_t rank, MonomialOrder order, std::vector<Vec> elements)
    : ctx_(std::move(ctx)),
      rank_(rank),
      order_(std::move(order)),
      elements_(std::make_unique<std::vector<Vec>>(std::move(elements))) {}

GBasis::GBasis(const GBasis& o)
    : ctx_(o.ctx_), rank_(o.rank_), order_(o.order_),
      elements_(std::make_unique<std::vector<Vec>>(*o.elements_)), bounds_(o.bounds_) {}
GBasis::GBasis(GBasis&&) noexcept = default;
GBasis& GBasis::operator=(const GBasis& o) {
  if (this != &o) *this = GBasis(o);
  return *this;
}
GBasis& GBasis::operator=(GBasis&&) noexcept = default;
GBasis::~GBasis() = default;

std::size_t GBasis::size() const noexcept { return elements_->size(); }

std::vector<FreeElement> GBasis::elements() const {
  Engine eng(order_, ctx_->nvars(), ctx_->field());
  std::vector<FreeElement> out;
  for (const auto& v : *elements_) out.push_back(eng.to_element(v, ctx_->poly_ring(), rank_));
  return out;
}

std::vector<std::pair<Monomial, std::size_t>> GBasis::leading_terms() const {
  std::vector<std::pair<Monomial, std::size_t>> out;
  for (const auto& v : *elements_) out.emplace_back(v.lead().mono, v.lead().comp);
  return out;
}

std::string GBasis::to_string() const {
  std::string s;
  for (const auto& e : elements()) {
    s += rank_ == 1 ? e[0].to_string(order_) : e.to_string(order_);
    s += '\n';
  }
  return s;
}

std::uint64_t Length::value() const {
  if (!value_) throw Error(ErrorKind::InfiniteColength, "length is infinite");
  return *value_;
}

namespace {

std::mutex& limits_mutex() {
  static std::mutex m;
  return m;
}
KernelLimits& limits_storage() {
  static KernelLimits l;
  return l;
}

std::vector<Vec> generator_vecs(const Submodule& s, const Engine& eng) {
  std::vector<Vec> out;
  for (const auto& g : s.generators()) {
    if (!g.is_zero()) out.push_back(eng.from_element(g));
  }
  const auto& ring = s.context()->poly_ring();
  for (const auto& q : s.context()->quotient()) {
    for (std::size_t i = 0; i < s.rank(); ++i) {
      FreeElement e(ring, s.rank());
      e[i] = q;
      out.push_back(eng.from_element(e));
    }
  }
  return out;
}

// Every monomial of degree k in every component is divisible by a lead.
bool covers_degree(const std::vector<Vec>& basis, std::size_t nvars, std::size_t rank, std::int64_t k) {
  std::vector<Monomial::Exponent> e(nvars, 0);
  std::function<bool(std::size_t, std::int64_t, std::size_t)> walk = [&](std::size_t i, std::int64_t left,
                                                                        std::size_t comp) {
    if (i + 1 == nvars) {
      e[i] = static_cast<Monomial::Exponent>(left);
      const Monomial m{std::span<const Monomial::Exponent>(e)};
      return std::any_of(basis.begin(), basis.end(), [&](const Vec& v) {
        return v.lead().comp == comp && v.lead().mono.divides(m);
      });
    }
    for (std::int64_t a = 0; a <= left; ++a) {
      e[i] = static_cast<Monomial::Exponent>(a);
      if (!walk(i + 1, left - a, comp)) return false;
    }
    return true;
  };
  for (std::size_t c = 0; c < rank; ++c) {
    if (!walk(0, k, c)) return false;
  }
  return true;
}

std::uint64_t monomial_count(std::size_t nvars, std::int64_t k) {
  std::uint64_t n = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    n = n * (static_cast<std::uint64_t>(i) + nvars - 1) / static_cast<std::uint64_t>(i);
    if (n > (1U << 20)) break;
  }
  return n;
}

// Over QQ, Mora's tails can swell before any highest corner is seen. A run
// modulo a prime guesses K with m^K e_c in the module; completing with the
// bound K+1 from the start and finding every degree K monomial among the
// leads gives m^K in M + m^{K+1}, hence in M by Nakayama.
std::optional<std::vector<Vec>> guided_local_basis(const Engine& eng, const std::vector<Vec>& gens, bool ideal,
                                                   std::size_t rank, Bounds& bounds) {
  constexpr std::uint32_t kGuidePrime = 2147483629U;
  const Engine mod(eng.order(), eng.nvars(), Field::prime(kGuidePrime));
  std::vector<Vec> reduced;
  try {
    for (const auto& g : gens) {
      Vec r;
      for (const auto& t : g.terms) {
        Scalar c(t.coef.to_rational(), mod.field());
        if (!c.is_zero()) r.terms.push_back({t.mono, t.comp, std::move(c)});
      }
      if (!r.terms.empty()) reduced.push_back(std::move(r));
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  Bounds guess;
  (void)mod.complete(std::move(reduced), ideal, rank, &guess);
  if (guess.empty()) return std::nullopt;
  const std::int64_t k = *std::max_element(guess.begin(), guess.end());
  if (eng.nvars() == 0 || monomial_count(eng.nvars(), k) * rank > 20000) return std::nullopt;
  const Bounds seed(rank, k + 1);
  auto raw = eng.complete(gens, ideal, rank, &bounds, &seed);
  if (!covers_degree(raw, eng.nvars(), rank, k)) return std::nullopt;
  return raw;
}

GBasis basis_with_order(const Submodule& s, const MonomialOrder& order) {
  Engine eng(order, s.context()->nvars(), s.context()->field());
  auto gens = generator_vecs(s, eng);
  Bounds bounds;
  std::optional<std::vector<Vec>> guided;
  if (order.is_local() && eng.field().is_rational() && s.rank() > 0) {
    guided = guided_local_basis(eng, gens, s.rank() == 1, s.rank(), bounds);
  }
  if (!guided) bounds.clear();
  auto raw = guided ? std::move(*guided) : eng.complete(std::move(gens), s.rank() == 1, s.rank(), &bounds);
  GBasis b(s.context(), s.rank(), order, eng.interreduce(std::move(raw)));
  b.set_noether_bounds(std::move(bounds));
  return b;
}

}  // namespace

KernelLimits kernel_limits() {
  std::lock_guard lock(limits_mutex());
  return limits_storage();
}

void set_kernel_limits(const KernelLimits& limits) {
  std::lock_guard lock(limits_mutex());
  limits_storage() = limits;
}

GBasis compute_basis(const Submodule& s) {
  const auto& order = s.context()->order();
  // Degree-first module orders keep Mora's tails short once a highest corner is known.
  if (order.is_local() && s.rank() > 1) {
    return basis_with_order(s, order.with_extension(ModuleExtension::TermOverPosition));
  }
  return basis_with_order(s, order);
}

GBasis groebner_basis(const Submodule& s) {
  if (s.context()->order().is_local()) {
    throw Error(ErrorKind::OrderMismatch, "groebner_basis needs a global order");
  }
  return compute_basis(s);
}

GBasis standard_basis(const Submodule& s) {
  if (s.context()->order().is_global()) {
    throw Error(ErrorKind::OrderMismatch, "standard_basis needs a local order");
  }
  return compute_basis(s);
}

FreeElement normal_form(const FreeElement& h, const GBasis& b) {
  if (h.rank() != b.rank()) throw Error(ErrorKind::ContextMismatch, "rank mismatch in normal form");
  Engine eng(b.order(), b.context()->nvars(), b.context()->field());
  Vec v = eng.from_element(h);
  const auto& bounds = b.noether_bounds();
  Vec r = b.flavor() == BasisFlavor::Local ? eng.reduce_mora(std::move(v), b.vecs(), bounds.empty() ? nullptr : &bounds)
                                           : eng.reduce_full(std::move(v), b.vecs());
  return eng.to_element(r, b.context()->poly_ring(), b.rank());
}

bool contains(const GBasis& b, const FreeElement& h) { return normal_form(h, b).is_zero(); }

bool contains(const Submodule& big, const Submodule& small) {
  if (big.rank() != small.rank()) throw Error(ErrorKind::ContextMismatch, "rank mismatch");
  const GBasis b = compute_basis(big);
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const FreeElement& g) { return contains(b, g); });
}

bool same_module(const Submodule& a, const Submodule& b) { return contains(a, b) && contains(b, a); }

// Module calculus -----------------------------------------------------------

GBasis preimage_basis(std::span<const FreeElement> h, const Submodule& target) {
  const Context& ctx = target.context();
  const std::size_t p = target.rank();
  const std::size_t s = h.size();
  const auto& ring = ctx->poly_ring();
  const MonomialOrder order = ctx->order().with_extension(ModuleExtension::PositionOverTerm);
  std::vector<FreeElement> gens;
  for (std::size_t i = 0; i < s; ++i) {
    if (h[i].rank() != p) throw Error(ErrorKind::ContextMismatch, "preimage element rank mismatch");
    FreeElement g(ring, p + s);
    for (std::size_t c = 0; c < p; ++c) g[c] = h[i][c];
    g[p + i] = Polynomial::constant(ring, 1L);
    gens.push_back(std::move(g));
  }
  for (const auto& t : target.generators()) {
    FreeElement g(ring, p + s);
    for (std::size_t c = 0; c < p; ++c) g[c] = t[c];
    gens.push_back(std::move(g));
  }
  const Submodule combined(ctx, p + s, std::move(gens));
  const GBasis full = basis_with_order(combined, order);
  std::vector<Vec> tagged;
  for (const auto& v : full.vecs()) {
    if (v.lead().comp < p) continue;
    Vec shifted = v;
    for (auto& t : shifted.terms) t.comp -= static_cast<std::uint32_t>(p);
    tagged.push_back(std::move(shifted));
  }
  GBasis out(ctx, s, order, std::move(tagged));
  if (!full.noether_bounds().empty()) {
    out.set_noether_bounds({full.noether_bounds().begin() + static_cast<long>(p), full.noether_bounds().end()});
  }
  return out;
}

Submodule preimage_submodule(std::span<const FreeElement> h, const Submodule& target) {
  const GBasis b = preimage_basis(h, target);
  return Submodule(target.context(), h.size(), b.elements());
}

Submodule ideal_sum(const Submodule& a, const Submodule& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::ContextMismatch, "rank mismatch in sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Submodule(a.context(), a.rank(), std::move(gens));
}

Submodule ideal_product(const Submodule& a, const Submodule& b) {
  if (a.rank() != 1 || b.rank() != 1) throw Error(ErrorKind::InvalidArgument, "product of ideals");
  std::vector<Polynomial> gens;
  for (const auto& f : a.ideal_generators()) {
    for (const auto& g : b.ideal_generators()) gens.push_back(f * g);
  }
  return Submodule::ideal(a.context(), std::move(gens));
}

Submodule module_times_ideal(const Submodule& m, const Submodule& ideal) {
  std::vector<FreeElement> gens;
  for (const auto& f : ideal.ideal_generators()) {
    for (const auto& g : m.generators()) gens.push_back(f * g);
  }
  return Submodule(m.context(), m.rank(), std::move(gens));
}

Submodule ideal_quotient(const Submodule& i, const Submodule& j) {
  if (i.rank() != 1 || j.rank() != 1) throw Error(ErrorKind::InvalidArgument, "ideal quotient of ideals");
  const auto jgens = j.ideal_generators();
  const std::size_t r = jgens.size();
  const auto& ring = i.context()->poly_ring();
  if (r == 0) return Submodule::ideal(i.context(), {Polynomial::constant(ring, 1L)});
  // (I : J) = {a : a * (j_1, ..., j_r) ∈ I ⊕ ... ⊕ I}
  FreeElement h(jgens);
  std::vector<FreeElement> sum_gens;
  for (const auto& g : i.ideal_generators()) {
    for (std::size_t k = 0; k < r; ++k) {
      FreeElement e(ring, r);
      e[k] = g;
      sum_gens.push_back(std::move(e));
    }
  }
  const Submodule target(i.context(), r, std::move(sum_gens));
  const std::vector<FreeElement> hs{h};
  return preimage_submodule(hs, target);
}

Submodule saturate(const Submodule& i, const Submodule& j) {
  Submodule current = i;
  for (int iter = 0; iter < 256; ++iter) {
    Submodule next = ideal_quotient(current, j);
    if (contains(current, next)) return current;
    current = std::move(next);
  }
  throw Error(ErrorKind::Overflow, "saturation did not stabilize");
}

Submodule eliminate(const Submodule& i, std::span<const std::string> vars) {
  const Context& ctx = i.context();
  if (ctx->order().is_local()) {
    throw Error(ErrorKind::OrderMismatch, "elimination requires a global block order");
  }
  if (i.rank() != 1) throw Error(ErrorKind::InvalidArgument, "eliminate expects an ideal");
  if (vars.empty()) return i;
  const auto& ring = ctx->poly_ring();
  std::vector<std::size_t> perm;  // new position -> old index
  std::vector<bool> eliminated(ring->nvars(), false);
  for (const auto& v : vars) {
    const auto idx = ring->index_of(v);
    if (!eliminated[idx]) {
      eliminated[idx] = true;
      perm.push_back(idx);
    }
  }
  const std::size_t split = perm.size();
  for (std::size_t k = 0; k < ring->nvars(); ++k) {
    if (!eliminated[k]) perm.push_back(k);
  }
  std::vector<std::string> names;
  for (auto k : perm) names.push_back(ring->name(k));
  auto elim_ctx = make_context(names, MonomialOrder::elimination(split), {}, ring->field());
  const auto& elim_ring = elim_ctx->poly_ring();
  std::vector<Polynomial> to_elim(ring->nvars());
  std::vector<Polynomial> back(ring->nvars());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) {
    to_elim[perm[pos]] = Polynomial::variable(elim_ring, pos);
    back[pos] = Polynomial::variable(ring, perm[pos]);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : i.ideal_generators()) gens.push_back(g.substitute(to_elim, elim_ring));
  for (const auto& q : ctx->quotient()) gens.push_back(q.substitute(to_elim, elim_ring));
  const GBasis b = groebner_basis(Submodule::ideal(elim_ctx, std::move(gens)));
  std::vector<Polynomial> kept;
  for (const auto& e : b.elements()) {
    bool free_of = true;
    for (const auto& t : e[0].terms()) {
      for (std::size_t k = 0; k < split && free_of; ++k) {
        if (t.monomial[k] != 0) free_of = false;
      }
    }
    if (free_of) kept.push_back(e[0].substitute(back, ring));
  }
  return Submodule::ideal(ctx, std::move(kept));
}

namespace {

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

Submodule minors(const Context& ctx, const PolyMatrix& a, std::size_t t) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "minor size must be positive");
  if (t > std::min(a.rows(), a.cols())) {
    throw Error(ErrorKind::InvalidArgument, "minor size exceeds matrix dimensions");
  }
  std::vector<Polynomial> gens;
  for_each_subset(a.rows(), t, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(a.cols(), t, [&](const std::vector<std::size_t>& cols) {
      Polynomial m = a.minor(rows, cols);
      if (!m.is_zero()) gens.push_back(std::move(m));
    });
  });
  return Submodule::ideal(ctx, std::move(gens));
}

std::vector<Monomial> sym_basis(std::size_t p, unsigned n) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(p, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == p) {
      e[pos] = left;
      out.emplace_back(std::span<const Monomial::Exponent>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  if (p == 0) return out;
  rec(0, static_cast<int>(n));
  return out;
}

Submodule power_in_sym(const Submodule& s, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "power_in_sym needs n >= 1");
  const std::size_t p = s.rank();
  const auto basis = sym_basis(p, n);
  if (basis.size() > kernel_limits().max_sym_rank) {
    throw Error(ErrorKind::Overflow, "symmetric power rank " + std::to_string(basis.size()) +
                                         " exceeds the configured bound");
  }
  std::map<std::vector<Monomial::Exponent>, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto ex = basis[k].exponents();
    index.emplace(std::vector<Monomial::Exponent>(ex.begin(), ex.end()), k);
  }
  const auto& ring = s.context()->poly_ring();
  const auto& gens = s.generators();
  const std::size_t g = gens.size();
  std::vector<FreeElement> out;
  // Multisets of n generator indices, nondecreasing.
  std::vector<std::size_t> choice(n, 0);
  if (g == 0) return Submodule(s.context(), basis.size(), {});
  while (true) {
    // Expand prod_k (sum_i gens[choice[k]][i] T_i).
    std::map<std::vector<Monomial::Exponent>, Polynomial> acc;
    acc.emplace(std::vector<Monomial::Exponent>(p, 0), Polynomial::constant(ring, 1L));
    for (std::size_t k = 0; k < n; ++k) {
      std::map<std::vector<Monomial::Exponent>, Polynomial> next;
      const auto& col = gens[choice[k]];
      for (const auto& [alpha, coeff] : acc) {
        for (std::size_t i = 0; i < p; ++i) {
          if (col[i].is_zero()) continue;
          auto beta = alpha;
          ++beta[i];
          Polynomial prod = coeff * col[i];
          auto it = next.find(beta);
          if (it == next.end()) {
            next.emplace(std::move(beta), std::move(prod));
          } else {
            it->second += prod;
          }
        }
      }
      acc = std::move(next);
    }
    FreeElement e(ring, basis.size());
    for (auto& [alpha, coeff] : acc) e[index.at(alpha)] = std::move(coeff);
    if (!e.is_zero()) out.push_back(std::move(e));
    // Advance the multiset.
    std::size_t pos = n;
    while (pos > 0 && choice[pos - 1] == g - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = choice[pos - 1] + 1;
    for (std::size_t k = pos - 1; k < n; ++k) choice[k] = v;
  }
  return Submodule(s.context(), basis.size(), std::move(out));
}

Length colength(const GBasis& b) {
  const std::size_t nvars = b.context()->nvars();
  const std::uint64_t bound = kernel_limits().max_colength;
  std::vector<std::vector<Monomial>> leads(b.rank());
  for (const auto& [m, c] : b.leading_terms()) leads[c].push_back(m);
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < b.rank(); ++c) {
    const auto& lc = leads[c];
    if (std::any_of(lc.begin(), lc.end(), [](const Monomial& m) { return m.is_one(); })) continue;
    if (nvars == 0 || lc.empty()) {
      if (nvars == 0) {
        total += 1;
        continue;
      }
      return Length::infinite();
    }
    // A pure power of every variable is needed for a bounded staircase.
    std::vector<Monomial::Exponent> box(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
      Monomial::Exponent best = 0;
      for (const auto& m : lc) {
        if (m.degree() == m[v] && (best == 0 || m[v] < best)) best = m[v];
      }
      if (best == 0) return Length::infinite();
      box[v] = best;
    }
    // Count monomials in the box not divisible by any lead.
    std::vector<Monomial::Exponent> cur(nvars, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
      if (v == nvars) {
        for (const auto& m : lc) {
          bool divides = true;
          for (std::size_t k = 0; k < nvars && divides; ++k) divides = m[k] <= cur[k];
          if (divides) return;
        }
        if (++total > bound) {
          throw Error(ErrorKind::ColengthBound,
                      "colength exceeds the configured bound " + std::to_string(bound));
        }
        return;
      }
      for (Monomial::Exponent e = 0; e < box[v]; ++e) {
        cur[v] = e;
        // Prune: if some lead divides the partial monomial with the remaining
        // exponents zero, every extension is divisible too.
        bool covered = false;
        for (const auto& m : lc) {
          bool ok = true;
          for (std::size_t k = 0; k < nvars && ok; ++k) ok = m[k] <= (k <= v ? cur[k] : 0);
          if (ok) {
            covered = true;
            break;
          }
        }
        if (covered) break;
        rec(v + 1);
      }
      cur[v] = 0;
    };
    rec(0);
  }
  return Length::finite(total);
}

Length colength(const Submodule& s) { return colength(compute_basis(s)); }

std::size_t generic_rank(const Submodule& s) {
  const Context& ctx = s.context();
  const auto& ring = ctx->poly_ring();
  const bool has_quotient = !ctx->quotient().empty();
  std::optional<GBasis> qbasis;
  if (has_quotient) {
    auto qctx = make_context(ring->names(), MonomialOrder::degrevlex(), {}, ring->field());
    qbasis = groebner_basis(Submodule::ideal(qctx, ctx->quotient()));
  }
  auto nonzero = [&](const Polynomial& f) {
    if (f.is_zero()) return false;
    if (!has_quotient) return true;
    return !contains(*qbasis, FreeElement(std::vector<Polynomial>{f}));
  };
  const PolyMatrix m = s.matrix();
  for (std::size_t t = std::min(m.rows(), m.cols()); t > 0; --t) {
    bool found = false;
    for_each_subset(m.rows(), t, [&](const std::vector<std::size_t>& rows) {
      if (found) return;
      for_each_subset(m.cols(), t, [&](const std::vector<std::size_t>& cols) {
        if (!found && nonzero(m.minor(rows, cols))) found = true;
      });
    });
    if (found) return t;
  }
  return 0;
}

}  // namespace pairmult
