#include "pairmult/mult/multiplicity.hpp"

#include <algorithm>

#include "pairmult/error.hpp"

namespace pairmult {

std::string_view to_string(MultiplicityKind kind) noexcept {
  switch (kind) {
    case MultiplicityKind::Samuel: return "samuel";
    case MultiplicityKind::BuchsbaumRim: return "buchsbaum_rim";
    case MultiplicityKind::Pair: return "pair";
  }
  return "unknown";
}

MultiplicityResult stabilize(MultiplicityKind kind, std::vector<std::int64_t> lambda, unsigned degree) {
  MultiplicityResult r;
  r.kind = kind;
  r.degree = degree;
  r.lambda = std::move(lambda);
  const std::size_t len = r.lambda.size();
  if (len < degree + 2) {
    throw Error(ErrorKind::NotStabilized,
                "need lengths up to n = " + std::to_string(degree + 1) + " for degree " +
                    std::to_string(degree));
  }
  r.differences.push_back(r.lambda);
  for (unsigned k = 1; k <= degree + 1 && k < len; ++k) {
    const auto& prev = r.differences.back();
    std::vector<std::int64_t> next(len, 0);
    for (std::size_t n = k; n < len; ++n) next[n] = prev[n] - prev[n - 1];
    r.differences.push_back(std::move(next));
  }
  const auto& top = r.differences[degree];
  if (top[len - 1] != top[len - 2]) {
    throw Error(ErrorKind::NotStabilized,
                "last two differences of order " + std::to_string(degree) + " are " +
                    std::to_string(top[len - 2]) + " and " + std::to_string(top[len - 1]) +
                    "; raise nmax");
  }
  r.value = top[len - 1];
  std::size_t start = len - 1;
  while (start > degree && top[start - 1] == r.value) --start;
  r.stabilized_at = static_cast<unsigned>(start);
  return r;
}

namespace {

std::int64_t finite_or(const Length& l, ErrorKind kind, const std::string& what) {
  if (!l.is_finite()) throw Error(kind, what + " is infinite");
  return static_cast<std::int64_t>(l.value());
}

unsigned offset_degree(int d, std::size_t e) {
  const long deg = static_cast<long>(d) + static_cast<long>(e) - 1;
  if (deg < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplicity degree");
  return static_cast<unsigned>(deg);
}

}  // namespace

MultiplicityResult samuel_multiplicity(const Submodule& ideal, unsigned n_max) {
  if (ideal.rank() != 1) throw Error(ErrorKind::InvalidArgument, "samuel multiplicity of a non-ideal");
  finite_or(colength(ideal), ErrorKind::InfiniteColength, "colength of the ideal");
  std::vector<std::int64_t> lambda{0};
  for (unsigned n = 1; n <= n_max; ++n) {
    lambda.push_back(finite_or(colength(power_in_sym(ideal, n)), ErrorKind::InfiniteColength, "colength"));
  }
  return stabilize(MultiplicityKind::Samuel, std::move(lambda),
                   static_cast<unsigned>(std::max(0, ideal.context()->dim())));
}

MultiplicityResult buchsbaum_rim(const Submodule& m, unsigned n_max) {
  const std::size_t p = m.rank();
  if (generic_rank(m) < p) {
    throw Error(ErrorKind::RankDeficient, "generic rank below the ambient rank " + std::to_string(p));
  }
  finite_or(colength(m), ErrorKind::InfiniteColength, "colength of the module");
  std::vector<std::int64_t> lambda{0};
  for (unsigned n = 1; n <= n_max; ++n) {
    lambda.push_back(finite_or(colength(power_in_sym(m, n)), ErrorKind::InfiniteColength, "colength"));
  }
  return stabilize(MultiplicityKind::BuchsbaumRim, std::move(lambda), offset_degree(m.context()->dim(), p));
}

Length pair_length(const Submodule& m, const Submodule& n) {
  std::vector<FreeElement> hs;
  for (const auto& g : n.generators()) {
    if (!g.is_zero()) hs.push_back(g);
  }
  if (hs.empty()) return Length::finite(0);
  if (contains(n, m)) {
    // M inside N with finite colength: the length is a difference of colengths.
    const Length cm = colength(m);
    if (cm.is_finite()) return Length::finite(cm.value() - colength(n).value());
  }
  return colength(preimage_basis(hs, m));
}

MultiplicityResult pair_multiplicity(const Submodule& m, const Submodule& n, unsigned n_max) {
  if (m.rank() != n.rank()) throw Error(ErrorKind::ContextMismatch, "pair of different ambient ranks");
  if (!contains(n, m)) throw Error(ErrorKind::NotContained, "M is not contained in N");
  const std::size_t e = generic_rank(m);
  if (generic_rank(n) != e) throw Error(ErrorKind::RankMismatch, "generic ranks of M and N differ");
  std::vector<std::int64_t> lambda{0};
  for (unsigned k = 1; k <= n_max; ++k) {
    const Submodule mk = power_in_sym(m, k);
    const Submodule nk = power_in_sym(n, k);
    lambda.push_back(finite_or(pair_length(mk, nk), ErrorKind::InfiniteLength,
                               "length of N^" + std::to_string(k) + "/M^" + std::to_string(k)));
  }
  return stabilize(MultiplicityKind::Pair, std::move(lambda), offset_degree(m.context()->dim(), e));
}

bool reduction_check(const Submodule& m, const Submodule& n, unsigned n_max) {
  return pair_multiplicity(m, n, n_max).value == 0;
}

PerturbationCount generic_perturbation_count(const Submodule& m, GenericScalarStream& stream,
                                             bool check_transversality) {
  finite_or(colength(m), ErrorKind::InfiniteColength, "colength of the module");
  const Context global = m.context()->with_order(MonomialOrder::degrevlex());
  const auto& ring = global->poly_ring();
  const Field field = global->field();
  const std::size_t p = m.rank();
  const long kl = static_cast<long>(global->dim()) + static_cast<long>(p) - 1;
  if (kl < 1) throw Error(ErrorKind::InvalidArgument, "d + p - 1 must be positive");
  const auto k = static_cast<std::size_t>(kl);
  constexpr unsigned kMaxRetries = 8;

  PerturbationCount out;
  out.seed = stream.seed();
  for (unsigned attempt = 0; attempt <= kMaxRetries; ++attempt) {
    std::vector<FreeElement> cols = m.generators();
    if (cols.size() != k) {
      std::vector<FreeElement> mixed;
      for (std::size_t j = 0; j < k; ++j) {
        FreeElement acc(ring, p);
        for (const auto& g : m.generators()) {
          acc += Polynomial::constant(ring, stream.draw_one(field)) * g;
        }
        mixed.push_back(std::move(acc));
      }
      cols = std::move(mixed);
    }
    PolyMatrix a = PolyMatrix::from_columns(ring, p, cols);
    std::vector<std::vector<Scalar>> eps(p, std::vector<Scalar>(k));
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        eps[r][c] = stream.draw_one(field);
        a(r, c) += Polynomial::constant(ring, eps[r][c]);
      }
    }
    Submodule witness = minors(global, a, p);
    const Length count = colength(witness);
    if (!count.is_finite()) {
      ++out.retries;
      continue;
    }
    out.epsilon = std::move(eps);
    out.count = count.value();
    if (check_transversality) {
      const std::size_t nv = global->nvars();
      const auto gens = witness.ideal_generators();
      PolyMatrix jac(ring, gens.size(), nv);
      for (std::size_t r = 0; r < gens.size(); ++r) {
        for (std::size_t v = 0; v < nv; ++v) jac(r, v) = gens[r].differentiate(v);
      }
      bool simple = out.count == 0;
      if (!simple && gens.size() >= nv) {
        const Submodule sing = ideal_sum(witness, minors(global, jac, nv));
        simple = colength(sing).value() == 0;
      }
      out.transverse = simple;
    }
    out.witness_ideal = std::move(witness);
    return out;
  }
  throw Error(ErrorKind::InfiniteWitness,
              "perturbed minors stayed non-finite after " + std::to_string(kMaxRetries) + " redraws");
}

}  // namespace pairmult
