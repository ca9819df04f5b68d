#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pairmult {

enum class ErrorKind {
  InvalidArgument,
  ContextMismatch,
  UnknownVariable,
  OrderMismatch,
  Overflow,
  ColengthBound,
  NotStabilized,
  InfiniteColength,
  InfiniteLength,
  RankDeficient,
  RankMismatch,
  NotContained,
  InfiniteWitness,
  NotFiniteOverBase,
  FiberPointDiscovery,
  NotCritical,
  IncompletePointList,
  NotFinite,
  NotCorank1,
  NotICIS,
  NotIsolated,
  Unsupported,
  MissingAssumption,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the kernel carries a machine-readable kind so the
/// session runner can report it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pairmult
