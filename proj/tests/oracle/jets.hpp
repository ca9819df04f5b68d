#pragma once

// Brute-force linear algebra on truncated power series. Used only as an
// independent check of the basis engine: it never calls into gb.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pairmult/symcore/polynomial.hpp"

namespace oracle {

using pairmult::Monomial;
using pairmult::Polynomial;

using Vector = std::vector<Polynomial>;  // one polynomial per component

/// Incremental row echelon form over Q on sparse rows.
class Echelon {
 public:
  using Row = std::map<std::size_t, mpq_class>;

  /// Returns true if the row was independent of the rows seen so far.
  bool insert(Row row) {
    reduce(row);
    if (row.empty()) return false;
    const std::size_t piv = row.begin()->first;
    const mpq_class inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    pivots_.emplace(piv, std::move(row));
    return true;
  }

  bool in_span(Row row) const {
    reduce(row);
    return row.empty();
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  void reduce(Row& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const mpq_class factor = it->second;
      const std::size_t col = it->first;
      for (const auto& [c, v] : p->second) {
        mpq_class& slot = row[c];
        slot -= factor * v;
      }
      for (auto jt = row.begin(); jt != row.end();) {
        jt = sgn(jt->second) == 0 ? row.erase(jt) : std::next(jt);
      }
      it = row.upper_bound(col);
    }
  }

  std::map<std::size_t, Row> pivots_;
};

inline std::vector<Monomial> monomials_below(std::size_t nvars, int bound) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v == nvars) {
      out.emplace_back(std::span<const Monomial::Exponent>(e));
      return;
    }
    for (int k = 0; k < left; ++k) {
      e[v] = k;
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  if (nvars == 0) {
    out.emplace_back();
    return out;
  }
  rec(rec, 0, bound);
  return out;
}

/// dim O^p / (M + m^K O^p) in the local ring at the origin.
inline std::uint64_t truncated_colength(std::size_t nvars, std::size_t rank,
                                        const std::vector<Vector>& gens, int k) {
  const auto monos = monomials_below(nvars, k);
  std::map<std::vector<int>, std::size_t> index;
  for (const auto& m : monos) {
    for (std::size_t c = 0; c < rank; ++c) {
      std::vector<int> key(m.exponents().begin(), m.exponents().end());
      key.push_back(static_cast<int>(c));
      index.emplace(std::move(key), index.size());
    }
  }
  Echelon ech;
  for (const auto& g : gens) {
    for (const auto& m : monos) {
      Echelon::Row row;
      for (std::size_t c = 0; c < rank; ++c) {
        for (const auto& t : g[c].terms()) {
          Monomial prod = t.monomial * m;
          if (prod.degree() >= k) continue;
          std::vector<int> key(prod.exponents().begin(), prod.exponents().end());
          key.push_back(static_cast<int>(c));
          row[index.at(key)] += t.coefficient.to_rational();
        }
      }
      for (auto it = row.begin(); it != row.end();) {
        it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
      }
      if (!row.empty()) ech.insert(std::move(row));
    }
  }
  return index.size() - ech.rank();
}

/// Local colength, if it stabilizes for some truncation order up to k_max.
/// Equal values at k and k+1 prove m^k O^p ⊆ M by Nakayama.
inline std::optional<std::uint64_t> local_colength(std::size_t nvars, std::size_t rank,
                                                   const std::vector<Vector>& gens,
                                                   int k_max = 12) {
  std::uint64_t prev = truncated_colength(nvars, rank, gens, 1);
  for (int k = 2; k <= k_max; ++k) {
    const std::uint64_t cur = truncated_colength(nvars, rank, gens, k);
    if (cur == prev) return cur;
    prev = cur;
  }
  return std::nullopt;
}

/// length(N/M) for M ⊆ N when it is finite, read off from truncations as
/// dim O^p/(M + m^K) - dim O^p/(N + m^K) once it repeats `confirm` times.
inline std::optional<std::uint64_t> local_pair_length(std::size_t nvars, std::size_t rank,
                                                      const std::vector<Vector>& m,
                                                      const std::vector<Vector>& n, int k_max = 14,
                                                      int confirm = 2) {
  std::optional<std::int64_t> prev;
  int streak = 0;
  // Below the generator degrees both truncations are trivially equal.
  int k_min = 1;
  for (const auto* gens : {&m, &n}) {
    for (const auto& g : *gens) {
      for (const auto& c : g) k_min = std::max<int>(k_min, static_cast<int>(c.degree()) + 1);
    }
  }
  for (int k = k_min; k <= k_max; ++k) {
    const auto cur = static_cast<std::int64_t>(truncated_colength(nvars, rank, m, k)) -
                     static_cast<std::int64_t>(truncated_colength(nvars, rank, n, k));
    streak = (prev && *prev == cur) ? streak + 1 : 0;
    if (streak >= confirm) return static_cast<std::uint64_t>(cur);
    prev = cur;
  }
  return std::nullopt;
}

/// Backward differences of order `degree` of a table starting at n = 0.
inline std::vector<std::int64_t> differences(std::vector<std::int64_t> table, unsigned degree) {
  for (unsigned k = 0; k < degree; ++k) {
    for (std::size_t n = table.size() - 1; n > k; --n) table[n] -= table[n - 1];
  }
  return table;
}

/// Degree-bounded global membership: h = Σ a_i g_i with deg a_i ≤ bound.
inline bool bounded_member(std::size_t nvars, std::size_t rank, const std::vector<Vector>& gens,
                           const Vector& h, int bound) {
  std::map<std::vector<int>, std::size_t> index;
  auto key_of = [&](const Monomial& m, std::size_t c) {
    std::vector<int> key(m.exponents().begin(), m.exponents().end());
    key.push_back(static_cast<int>(c));
    auto it = index.find(key);
    if (it == index.end()) it = index.emplace(key, index.size()).first;
    return it->second;
  };
  const auto monos = monomials_below(nvars, bound + 1);
  Echelon ech;
  for (const auto& g : gens) {
    for (const auto& m : monos) {
      Echelon::Row row;
      for (std::size_t c = 0; c < rank; ++c) {
        for (const auto& t : g[c].terms()) row[key_of(t.monomial * m, c)] += t.coefficient.to_rational();
      }
      for (auto it = row.begin(); it != row.end();) {
        it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
      }
      if (!row.empty()) ech.insert(std::move(row));
    }
  }
  Echelon::Row target;
  for (std::size_t c = 0; c < rank; ++c) {
    for (const auto& t : h[c].terms()) target[key_of(t.monomial, c)] += t.coefficient.to_rational();
  }
  return ech.in_span(std::move(target));
}

}  // namespace oracle
