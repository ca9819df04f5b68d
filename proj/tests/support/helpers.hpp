#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "pairmult/gb/module.hpp"
#include "pairmult/symcore/ring.hpp"

namespace testing_support {

using namespace pairmult;

inline Polynomial P(const Context& ctx, const std::string& text) {
  return parse_polynomial(text, ctx->poly_ring());
}

inline Submodule ideal(const Context& ctx, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(ctx, g));
  return Submodule::ideal(ctx, std::move(ps));
}

/// Columns given as lists of component expressions.
inline Submodule module(const Context& ctx, std::size_t rank,
                        std::initializer_list<std::initializer_list<const char*>> cols) {
  std::vector<FreeElement> gens;
  for (const auto& col : cols) {
    std::vector<Polynomial> comps;
    for (const char* c : col) comps.push_back(P(ctx, c));
    gens.emplace_back(std::move(comps));
  }
  return Submodule(ctx, rank, std::move(gens));
}

inline Context local_ctx(std::vector<std::string> vars, std::vector<std::string> params = {}) {
  return make_context(std::move(vars), MonomialOrder::local(), std::move(params));
}

inline Context global_ctx(std::vector<std::string> vars, std::vector<std::string> params = {}) {
  return make_context(std::move(vars), MonomialOrder::degrevlex(), std::move(params));
}

/// Small random polynomials for property tests.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Monomial monomial(std::size_t nvars, int max_deg) {
    Monomial m(nvars);
    int left = integer(0, max_deg);
    for (std::size_t v = 0; v < nvars && left > 0; ++v) {
      const int e = v + 1 == nvars ? left : integer(0, left);
      m.set(v, e);
      left -= e;
    }
    return m;
  }

  Polynomial poly(const PolyRingPtr& ring, int max_terms, int max_deg, int coef = 5) {
    Polynomial p(ring);
    const int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) {
      int c = integer(-coef, coef);
      if (c == 0) c = 1;
      p += Polynomial::monomial(ring, monomial(ring->nvars(), max_deg), Scalar(static_cast<long>(c), ring->field()));
    }
    return p;
  }

  /// Monomial ideal with a pure power of every variable, so the local and
  /// global colengths are finite.
  std::vector<Polynomial> zero_dim_monomials(const PolyRingPtr& ring, int max_pow, int extra) {
    std::vector<Polynomial> out;
    const Scalar one(1L, ring->field());
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      out.push_back(Polynomial::monomial(ring, Monomial::variable(ring->nvars(), v, integer(1, max_pow)), one));
    }
    for (int i = 0; i < extra; ++i) {
      out.push_back(Polynomial::monomial(ring, monomial(ring->nvars(), max_pow), one));
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
