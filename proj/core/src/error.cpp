#include "pairmult/error.hpp"

namespace pairmult {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ColengthBound: return "ColengthBound";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::InfiniteColength: return "InfiniteColength";
    case ErrorKind::InfiniteLength: return "InfiniteLength";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::InfiniteWitness: return "InfiniteWitness";
    case ErrorKind::NotFiniteOverBase: return "NotFiniteOverBase";
    case ErrorKind::FiberPointDiscovery: return "FiberPointDiscovery";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::IncompletePointList: return "IncompletePointList";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NotCorank1: return "NotCorank1";
    case ErrorKind::NotICIS: return "NotICIS";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::MissingAssumption: return "MissingAssumption";
  }
  return "Unknown";
}

}  // namespace pairmult
