#pragma once

#include <cstdint>
#include <vector>

#include "pairmult/symcore/scalar.hpp"

namespace pairmult {

/// Deterministic source of "generic" constants. The generator is SplitMix64
/// with its published constants, so a seed produces the same draws on every
/// platform. Each draw is an integer in [1, 65536].
class GenericScalarStream {
 public:
  static constexpr std::uint64_t kMaxDraw = 65536;

  explicit GenericScalarStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<std::uint64_t>& draw_log() const noexcept { return log_; }

  std::uint64_t draw_integer();
  std::vector<Scalar> draw(std::size_t count, Field field);
  Scalar draw_one(Field field);

  /// Independent stream for sub-task `index`; used to keep parallel tasks
  /// reproducible.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t next();

  std::uint64_t seed_;
  std::uint64_t state_;
  std::vector<std::uint64_t> log_;
};

}  // namespace pairmult
