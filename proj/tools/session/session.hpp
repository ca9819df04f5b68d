#pragma once

// Line-oriented session files: a ring, named objects, options, assumptions
// and an ordered list of tasks.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairmult/germs/germs.hpp"

namespace pairmult::session {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct RingDecl {
  std::string name;
  std::vector<std::string> space;
  std::vector<std::string> params;
  Field field = Field::rationals();
  bool local = true;
  std::vector<std::string> quotient;  // canonical texts
  std::optional<int> dim;
  Context ctx;
};

enum class ObjectKind { Poly, Ideal, Module, Matrix, Germ, Family };
std::string_view to_string(ObjectKind k) noexcept;

struct Object {
  ObjectKind kind = ObjectKind::Poly;
  std::string name;
  std::size_t ring = 0;
  int line = 0;
  Polynomial poly;
  Submodule module;
  PolyMatrix matrix;
  MapGerm germ;
  // Families refer to two submodules by name; points are per-coordinate texts.
  std::string family_m;
  std::string family_n;
  std::vector<std::vector<Polynomial>> points;
};

struct Task {
  std::string op;
  std::vector<std::string> args;
  std::map<std::string, std::string> options;
  int line = 0;
};

struct Options {
  std::uint64_t seed = 0;
  unsigned n_max = kDefaultNMax;
  bool json = false;
};

/// Settings from the command line; they win over `option` lines.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> n_max;
  std::optional<Field> field;
  std::optional<bool> json;
};

struct Session {
  std::vector<RingDecl> rings;
  std::vector<Object> objects;
  std::map<std::string, std::size_t> names;
  std::vector<Task> tasks;
  Options options;
  std::vector<std::string> assumptions;

  const Object& object(const std::string& name) const;
  bool has(const std::string& name) const { return names.count(name) != 0; }
  bool assumed(const std::string& flag) const;
};

Session parse_session(const std::string& text, const Overrides& overrides = {});

/// Canonical text of a parsed session; parsing it again gives the same text.
std::string serialize_session(const Session& s);

Field parse_field(const std::string& text);

/// Canonical "[(a, b), (c, d)]" form of a point list.
std::string render_points(const std::vector<std::vector<Polynomial>>& pts);

/// Splits at top-level separators, ignoring those nested in brackets.
std::vector<std::string> split_top(const std::string& text, char sep);

}  // namespace pairmult::session
