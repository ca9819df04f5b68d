#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pairmult/gb/module.hpp"
#include "pairmult/symcore/generic.hpp"

namespace pairmult {

enum class MultiplicityKind { Samuel, BuchsbaumRim, Pair };

std::string_view to_string(MultiplicityKind kind) noexcept;

constexpr unsigned kDefaultNMax = 6;

/// Length table and its finite differences. lambda[0] is the empty power
/// (length 0) so a degree D needs n_max >= D + 1.
struct MultiplicityResult {
  MultiplicityKind kind = MultiplicityKind::Samuel;
  std::vector<std::int64_t> lambda;
  unsigned degree = 0;
  /// differences[k][n] is the k-th backward difference at n (n >= k).
  std::vector<std::vector<std::int64_t>> differences;
  std::int64_t value = 0;
  unsigned stabilized_at = 0;
};

/// D-th differences of a length table. Throws NotStabilized unless the last
/// two agree.
MultiplicityResult stabilize(MultiplicityKind kind, std::vector<std::int64_t> lambda, unsigned degree);

MultiplicityResult samuel_multiplicity(const Submodule& ideal, unsigned n_max = kDefaultNMax);
MultiplicityResult buchsbaum_rim(const Submodule& m, unsigned n_max = kDefaultNMax);
/// e(M, N) from n -> length(N^n / M^n).
MultiplicityResult pair_multiplicity(const Submodule& m, const Submodule& n, unsigned n_max = kDefaultNMax);
bool reduction_check(const Submodule& m, const Submodule& n, unsigned n_max = kDefaultNMax);

/// Length of N/M computed as the colength of the preimage of M under the
/// generators of N.
Length pair_length(const Submodule& m, const Submodule& n);

struct PerturbationCount {
  std::uint64_t seed = 0;
  /// p x (d + p - 1) constants added to the generator matrix.
  std::vector<std::vector<Scalar>> epsilon;
  std::uint64_t count = 0;
  std::optional<Submodule> witness_ideal;
  unsigned retries = 0;
  /// Present when transversality was checked: all witness points simple.
  std::optional<bool> transverse;
};

PerturbationCount generic_perturbation_count(const Submodule& m, GenericScalarStream& stream,
                                             bool check_transversality = false);

}  // namespace pairmult
