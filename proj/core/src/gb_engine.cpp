#include "gb_engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace pairmult::detail {

Vec Engine::from_element(const FreeElement& v) const {
  Vec out;
  for (std::size_t c = 0; c < v.rank(); ++c) {
    for (const auto& t : v[c].terms()) {
      out.terms.push_back({t.monomial, static_cast<std::uint32_t>(c), t.coefficient});
    }
  }
  sort(out);
  out.sugar = max_degree(out);
  return out;
}

FreeElement Engine::to_element(const Vec& v, const PolyRingPtr& ring, std::size_t rank) const {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : v.terms) comps.at(t.comp).push_back({t.mono, t.coef});
  std::vector<Polynomial> polys;
  polys.reserve(rank);
  for (auto& c : comps) polys.push_back(Polynomial::from_terms(ring, std::move(c)));
  FreeElement e(ring, rank);
  for (std::size_t i = 0; i < rank; ++i) e[i] = std::move(polys[i]);
  return e;
}

void Engine::sort(Vec& v) const {
  std::sort(v.terms.begin(), v.terms.end(),
            [this](const MTerm& a, const MTerm& b) { return term_greater(a, b); });
}

std::int64_t Engine::max_degree(const Vec& v) const {
  std::int64_t d = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : v.terms) d = std::max(d, order_.term_degree(t.mono, t.comp));
  return v.terms.empty() ? 0 : d;
}

std::int64_t Engine::ecart(const Vec& v) const {
  if (v.terms.empty()) return 0;
  return max_degree(v) - order_.term_degree(v.lead().mono, v.lead().comp);
}

void Engine::make_monic(Vec& v) const {
  if (v.terms.empty() || v.lead().coef.is_one()) return;
  const Scalar inv = v.lead().coef.inverse();
  for (auto& t : v.terms) t.coef *= inv;
}

void Engine::sub_multiple(Vec& h, const Vec& g, const Monomial& m, const Scalar& c) const {
  std::vector<MTerm> out;
  out.reserve(h.terms.size() + g.terms.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& ht = h.terms;
  const auto& gt = g.terms;
  // Products m*g are computed lazily, one term at a time.
  MTerm pending;
  bool have_pending = false;
  auto load = [&]() {
    if (!have_pending && j < gt.size()) {
      pending.mono = gt[j].mono * m;
      pending.comp = gt[j].comp;
      have_pending = true;
    }
  };
  load();
  while (i < ht.size() || have_pending) {
    if (!have_pending) {
      out.push_back(ht[i++]);
      continue;
    }
    if (i == ht.size()) {
      Scalar coef = -(gt[j].coef * c);
      out.push_back({pending.mono, pending.comp, std::move(coef)});
      ++j;
      have_pending = false;
      load();
      continue;
    }
    const auto cmp = order_.compare(ht[i].mono, ht[i].comp, pending.mono, pending.comp);
    if (cmp > 0) {
      out.push_back(ht[i++]);
    } else if (cmp < 0) {
      Scalar coef = -(gt[j].coef * c);
      out.push_back({pending.mono, pending.comp, std::move(coef)});
      ++j;
      have_pending = false;
      load();
    } else {
      Scalar coef = ht[i].coef;
      coef.sub_mul(gt[j].coef, c);
      if (!coef.is_zero()) out.push_back({pending.mono, pending.comp, std::move(coef)});
      ++i;
      ++j;
      have_pending = false;
      load();
    }
  }
  h.terms = std::move(out);
}

Vec Engine::spoly(const Vec& f, const Vec& g) const {
  const Monomial l = lcm(f.lead().mono, g.lead().mono);
  const Monomial mf = l / f.lead().mono;
  const Monomial mg = l / g.lead().mono;
  Vec s;
  s.terms.reserve(f.terms.size());
  const Scalar inv = f.lead().coef.inverse();
  for (const auto& t : f.terms) s.terms.push_back({t.mono * mf, t.comp, t.coef * inv});
  sub_multiple(s, g, mg, g.lead().coef.inverse());
  s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
  return s;
}

Vec Engine::reduce_full(Vec h, const std::vector<Vec>& basis) const {
  Vec result;
  result.sugar = h.sugar;
  std::vector<MTerm> done;
  while (!h.terms.empty()) {
    const MTerm& lt = h.terms.front();
    const Vec* reducer = nullptr;
    for (const auto& g : basis) {
      if (g.terms.empty()) continue;
      const auto& gl = g.lead();
      if (gl.comp == lt.comp && gl.mono.divides(lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      done.push_back(lt);
      h.terms.erase(h.terms.begin());
      continue;
    }
    const Monomial q = lt.mono / reducer->lead().mono;
    const Scalar c = lt.coef / reducer->lead().coef;
    h.sugar = std::max(h.sugar, reducer->sugar + q.degree());
    sub_multiple(h, *reducer, q, c);
  }
  result.terms = std::move(done);
  result.sugar = std::max(result.sugar, h.sugar);
  return result;
}

void Engine::truncate(Vec& v, const Bounds& bounds) {
  if (bounds.empty() || v.terms.size() < 2) return;
  auto keep = [&](const MTerm& t) { return t.mono.degree() < bounds[t.comp]; };
  std::size_t out = 1;
  for (std::size_t i = 1; i < v.terms.size(); ++i) {
    if (keep(v.terms[i])) {
      if (out != i) v.terms[out] = std::move(v.terms[i]);
      ++out;
    }
  }
  v.terms.resize(out);
}

Bounds Engine::noether_bounds(const std::vector<std::vector<std::int64_t>>& pure, std::size_t rank) const {
  // K_c bounds the degrees outside the lead ideal of component c.
  std::vector<std::int64_t> k(rank, 0);
  for (std::size_t c = 0; c < rank; ++c) {
    std::int64_t sum = 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto a = pure[c][i];
      if (a < 0) return {};
      if (a == 0) {
        sum = 0;
        break;
      }
      sum += a - 1;
    }
    k[c] = sum;
  }
  Bounds out(rank, 0);
  if (order_.extension() == ModuleExtension::TermOverPosition || rank == 1) {
    const std::int64_t m = *std::max_element(k.begin(), k.end());
    std::fill(out.begin(), out.end(), m);
  } else {
    // Position first: component c is only bounded modulo the later ones.
    std::int64_t acc = 0;
    for (std::size_t c = rank; c-- > 0;) {
      acc += k[c];
      out[c] = acc;
    }
  }
  return out;
}

Vec Engine::reduce_mora(Vec h, const std::vector<Vec>& basis, const Bounds* bounds) const {
  if (bounds != nullptr) truncate(h, *bounds);
  struct Reducer {
    const Vec* vec;
    std::int64_t ecart;
  };
  std::vector<Reducer> reducers;
  reducers.reserve(basis.size());
  for (const auto& g : basis) {
    if (!g.terms.empty()) reducers.push_back({&g, ecart(g)});
  }
  std::deque<Vec> extra;
  while (!h.terms.empty()) {
    const MTerm& lt = h.terms.front();
    const Reducer* best = nullptr;
    for (const auto& r : reducers) {
      const auto& gl = r.vec->lead();
      if (gl.comp != lt.comp || !gl.mono.divides(lt.mono)) continue;
      if (best == nullptr || r.ecart < best->ecart) {
        best = &r;
        if (r.ecart == 0) break;
      }
    }
    if (best == nullptr) break;
    const Vec* g = best->vec;
    const std::int64_t eh = ecart(h);
    if (best->ecart > eh) {
      extra.push_back(h);
      // push_back may move `best` (it points into reducers); g stays valid.
      reducers.push_back({&extra.back(), eh});
    }
    const Monomial q = h.terms.front().mono / g->lead().mono;
    const Scalar c = h.terms.front().coef / g->lead().coef;
    h.sugar = std::max(h.sugar, g->sugar + q.degree());
    sub_multiple(h, *g, q, c);
    if (bounds != nullptr) truncate(h, *bounds);
  }
  return h;
}

namespace {

struct Pair {
  static constexpr std::size_t kGenerator = std::numeric_limits<std::size_t>::max();
  std::size_t i;  // kGenerator: j indexes the pending generator list
  std::size_t j;
  Monomial lcm;
  std::uint32_t comp;
  std::int64_t sugar;
};

}  // namespace

std::vector<Vec> Engine::complete(std::vector<Vec> generators, bool use_product_criterion, std::size_t rank,
                                  Bounds* bounds_out, const Bounds* seed) const {
  const bool local = order_.is_local();
  for (const auto& g : generators) {
    for (const auto& t : g.terms) rank = std::max<std::size_t>(rank, t.comp + 1);
  }
  // Smallest pure power of each variable among the leads, per component.
  std::vector<std::vector<std::int64_t>> pure(rank, std::vector<std::int64_t>(nvars_, -1));
  Bounds bounds;
  if (seed != nullptr) bounds = *seed;
  auto note_lead = [&](const MTerm& lt) {
    if (!local) return;
    std::size_t nonzero = 0, var = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (lt.mono[i] != 0) {
        ++nonzero;
        var = i;
      }
    }
    auto& row = pure[lt.comp];
    bool changed = false;
    if (nonzero == 0) {
      for (auto& a : row) {
        changed = changed || a != 0;
        a = 0;
      }
    } else if (nonzero == 1 && (row[var] < 0 || lt.mono[var] < row[var])) {
      row[var] = lt.mono[var];
      changed = true;
    }
    if (!changed) return;
    Bounds fresh = noether_bounds(pure, rank);
    if (fresh.empty()) return;
    if (seed != nullptr) {
      for (std::size_t c = 0; c < fresh.size(); ++c) fresh[c] = std::min(fresh[c], (*seed)[c]);
    }
    bounds = std::move(fresh);
  };
  std::vector<Vec> basis;
  std::vector<Pair> pairs;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    auto& g = generators[k];
    if (g.terms.empty()) continue;
    sort(g);
    g.sugar = max_degree(g);
    pairs.push_back({Pair::kGenerator, k, g.lead().mono, g.lead().comp, g.sugar});
  }

  auto better = [&](const Pair& a, const Pair& b) {
    if (local) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return order_.compare(a.lcm, a.comp, b.lcm, b.comp) > 0;
    }
    const auto c = order_.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c < 0;
    return a.sugar < b.sugar;
  };

  auto add_to_basis = [&](Vec h) {
    make_monic(h);
    const std::size_t k = basis.size();
    const auto& hl = h.lead();
    // New pairs (i, k) with matching component.
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& gl = basis[i].lead();
      if (gl.comp != hl.comp) continue;
      Monomial l = lcm(gl.mono, hl.mono);
      const Monomial mi = l / gl.mono;
      const Monomial mk = l / hl.mono;
      const std::int64_t sugar = std::max(basis[i].sugar + mi.degree(), h.sugar + mk.degree());
      fresh.push_back({i, k, std::move(l), hl.comp, sugar});
    }
    // Old pairs whose lcm is divisible by the new lead, with both lcms to
    // the new element different, are redundant.
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.i == Pair::kGenerator || p.comp != hl.comp) return false;
      if (!hl.mono.divides(p.lcm)) return false;
      const Monomial li = lcm(basis[p.i].lead().mono, hl.mono);
      const Monomial lj = lcm(basis[p.j].lead().mono, hl.mono);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    // Chain criterion among the new pairs.
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size() && !drop[a]; ++b) {
        if (a == b || drop[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm)) {
          if (!(fresh[b].lcm == fresh[a].lcm) || b < a) drop[a] = true;
        }
      }
    }
    if (use_product_criterion) {
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a]) continue;
        const auto& gl = basis[fresh[a].i].lead().mono;
        if (gcd(gl, hl.mono).is_one()) drop[a] = true;
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!drop[a]) pairs.push_back(std::move(fresh[a]));
    }
    note_lead(h.lead());
    basis.push_back(std::move(h));
    if (!bounds.empty()) {
      for (auto& b : basis) truncate(b, bounds);
    }
  };

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      if (better(pairs[k], pairs[best])) best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    Vec s = p.i == Pair::kGenerator ? std::move(generators[p.j]) : spoly(basis[p.i], basis[p.j]);
    if (s.terms.empty()) continue;
    if (!bounds.empty() && s.lead().mono.degree() >= bounds[s.lead().comp]) {
      // The whole lead component part lies in m^K; keep only what remains elsewhere.
      std::erase_if(s.terms, [&](const MTerm& t) { return t.mono.degree() >= bounds[t.comp]; });
      if (s.terms.empty()) continue;
    }
    Vec h = local ? reduce_mora(std::move(s), basis, bounds.empty() ? nullptr : &bounds)
                  : reduce_full(std::move(s), basis);
    if (!h.terms.empty()) add_to_basis(std::move(h));
  }
  if (bounds_out != nullptr) *bounds_out = bounds;
  return basis;
}

std::vector<Vec> Engine::interreduce(std::vector<Vec> basis) const {
  std::erase_if(basis, [](const Vec& v) { return v.terms.empty(); });
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const auto& la = basis[a].lead();
      const auto& lb = basis[b].lead();
      if (la.comp == lb.comp && lb.mono.divides(la.mono)) {
        if (!(la.mono == lb.mono) || b < a) keep[a] = false;
      }
    }
  }
  std::vector<Vec> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (keep[a]) minimal.push_back(std::move(basis[a]));
  }
  if (!order_.is_local()) {
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<Vec> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (b != a) others.push_back(minimal[b]);
      }
      minimal[a] = reduce_full(std::move(minimal[a]), others);
    }
  }
  for (auto& v : minimal) make_monic(v);
  std::sort(minimal.begin(), minimal.end(),
            [this](const Vec& a, const Vec& b) { return term_greater(a.lead(), b.lead()); });
  return minimal;
}

}  // namespace pairmult::detail
