#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairmult/gb/module.hpp"
#include "pairmult/mult/multiplicity.hpp"
#include "pairmult/symcore/generic.hpp"

namespace pairmult {

/// Family M ⊆ N over the base given by the context parameters. Fiber points
/// are the points of the generic fiber where N/M is supported, each given as
/// one polynomial in the parameters per space variable.
struct FamilySpec {
  Context ctx;
  Submodule m;
  Submodule n;
  std::vector<std::vector<Polynomial>> fiber_points;
};

struct PolarReport {
  std::size_t k = 0;
  /// Unit ideal when the polar is empty.
  Submodule gamma_ideal;
  bool empty = true;
  std::vector<std::vector<Scalar>> submersion_rows;
  std::size_t generic_rank = 0;
};

PolarReport polar_ideal(const Submodule& m, std::size_t k, GenericScalarStream& stream);

struct PolarMultiplicity {
  std::uint64_t value = 0;
  /// Base point used for the global count, and that count.
  std::optional<Scalar> base_point;
  std::optional<std::uint64_t> global_count;
};

/// Degree of the polar over a one-dimensional base at the origin.
PolarMultiplicity polar_mult_over_base(const PolarReport& rep, const FamilySpec& fam,
                                       GenericScalarStream& stream);

struct FiberContribution {
  std::vector<Scalar> point;
  std::int64_t pair_multiplicity = 0;
  std::uint64_t length = 0;
};

struct FamilyReport {
  std::int64_t e_origin = 0;
  Scalar base_point;
  std::vector<FiberContribution> fiber;
  std::uint64_t global_length = 0;
  PolarReport polar_m;
  PolarReport polar_n;
  PolarMultiplicity mult_m;
  PolarMultiplicity mult_n;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equal = false;
  std::vector<std::string> assumptions;
};

FamilyReport multiplicity_polar_check(const FamilySpec& fam, GenericScalarStream& stream,
                                      unsigned n_max = kDefaultNMax);

}  // namespace pairmult
