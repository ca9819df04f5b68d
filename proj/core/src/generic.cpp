#include "pairmult/symcore/generic.hpp"

namespace pairmult {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

}  // namespace

std::uint64_t GenericScalarStream::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

std::uint64_t GenericScalarStream::draw_integer() {
  const std::uint64_t v = 1 + next() % kMaxDraw;
  log_.push_back(v);
  return v;
}

Scalar GenericScalarStream::draw_one(Field field) {
  return Scalar(static_cast<long>(draw_integer()), field);
}

std::vector<Scalar> GenericScalarStream::draw(std::size_t count, Field field) {
  std::vector<Scalar> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw_one(field));
  return out;
}

std::uint64_t GenericScalarStream::derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix(seed ^ mix(index + 0x9e3779b97f4a7c15ULL));
}

}  // namespace pairmult
