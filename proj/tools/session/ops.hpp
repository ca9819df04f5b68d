#pragma once

// Signatures of the session tasks, shared by the parser (name checks) and
// the runner.

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pairmult::session {

enum class ArgKind { None, Poly, Submodule, Ideal, Germ, Family, Int, Text, Point, Points };

std::string_view to_string(ArgKind k) noexcept;

struct OpSpec {
  std::string name;
  std::vector<ArgKind> positional;
  std::map<std::string, ArgKind> named;
  std::vector<std::string> required;

  ArgKind kind_of(const std::string& key) const {
    const auto it = named.find(key);
    return it == named.end() ? ArgKind::None : it->second;
  }
};

const OpSpec* find_op(std::string_view name);
const std::vector<OpSpec>& all_ops();

}  // namespace pairmult::session
