#include "session.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "ops.hpp"
#include "pairmult/error.hpp"

namespace pairmult::session {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_open(char c) { return c == '[' || c == '('; }
bool is_close(char c) { return c == ']' || c == ')'; }

/// Words separated by top-level whitespace.
std::vector<std::string> words(const std::string& text, int line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (is_open(c)) ++depth;
    if (is_close(c) && --depth < 0) throw ParseError(line, "unbalanced brackets");
    if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError(line, "unbalanced brackets");
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string require_name(const std::string& s, int line) {
  if (!valid_name(s)) throw ParseError(line, "invalid name '" + s + "'");
  return s;
}

/// Content of a bracketed group, e.g. "[a, b]" -> "a, b".
std::string unwrap(const std::string& text, char open, char close, int line) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != open || t.back() != close) {
    throw ParseError(line, std::string("expected ") + open + "..." + close + " in '" + t + "'");
  }
  // The outer pair must enclose everything.
  int depth = 0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (is_open(t[i])) ++depth;
    if (is_close(t[i])) --depth;
    if (depth == 0) throw ParseError(line, "unexpected text after '" + t.substr(0, i + 1) + "'");
  }
  return t.substr(1, t.size() - 2);
}

std::vector<std::string> list_items(const std::string& inner) {
  if (trim(inner).empty()) return {};
  std::vector<std::string> out;
  for (auto& s : split_top(inner, ',')) out.push_back(trim(s));
  return out;
}

std::uint64_t parse_u64(const std::string& s, int line, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + s + "'");
  }
  return v;
}

std::vector<std::string> name_list(const std::string& s, int line) {
  std::vector<std::string> out;
  for (const auto& part : split_top(s, ',')) out.push_back(require_name(trim(part), line));
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += xs[i];
  }
  return out;
}

std::pair<std::string, std::string> key_value(const std::string& word, int line) {
  const auto eq = word.find('=');
  if (eq == std::string::npos || eq == 0) throw ParseError(line, "expected key=value, got '" + word + "'");
  return {word.substr(0, eq), word.substr(eq + 1)};
}

class Parser {
 public:
  explicit Parser(const Overrides& ov) : ov_(ov) {}

  Session run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool header = false;
    while (std::getline(in, raw)) {
      ++line;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const std::string stmt = trim(raw);
      if (stmt.empty()) continue;
      if (!header) {
        if (stmt != "format 1") throw ParseError(line, "expected header 'format 1'");
        header = true;
        continue;
      }
      statement(stmt, line);
    }
    if (!header) throw ParseError(line == 0 ? 1 : line, "expected header 'format 1'");
    if (ov_.seed) s_.options.seed = *ov_.seed;
    if (ov_.n_max) s_.options.n_max = *ov_.n_max;
    if (ov_.json) s_.options.json = *ov_.json;
    return std::move(s_);
  }

 private:
  void statement(const std::string& stmt, int line) {
    const auto sp = stmt.find_first_of(" \t");
    const std::string kw = stmt.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(stmt.substr(sp));
    if (kw == "ring") return ring(rest, line);
    if (kw == "quotient") return quotient(rest, line);
    if (kw == "poly" || kw == "ideal" || kw == "module" || kw == "matrix" || kw == "germ") {
      return object(kw, rest, line);
    }
    if (kw == "family") return family(rest, line);
    if (kw == "task") return task(rest, line);
    if (kw == "option") return option(rest, line);
    if (kw == "assume") return assume(rest, line);
    throw ParseError(line, "unknown statement '" + kw + "'");
  }

  RingDecl& current_ring(int line) {
    if (s_.rings.empty()) throw ParseError(line, "no ring declared");
    return s_.rings.back();
  }

  void ring(const std::string& rest, int line) {
    const auto w = words(rest, line);
    if (w.empty()) throw ParseError(line, "ring needs a name");
    RingDecl r;
    r.name = require_name(w[0], line);
    std::string order = "local";
    bool have_space = false;
    for (std::size_t i = 1; i < w.size(); i += 2) {
      if (i + 1 >= w.size()) throw ParseError(line, "missing value after '" + w[i] + "'");
      const std::string& key = w[i];
      const std::string& val = w[i + 1];
      if (key == "space") {
        r.space = name_list(val, line);
        have_space = true;
      } else if (key == "params") {
        r.params = name_list(val, line);
      } else if (key == "over") {
        try {
          r.field = parse_field(val);
        } catch (const Error& e) {
          throw ParseError(line, e.what());
        }
      } else if (key == "order") {
        if (val != "local" && val != "global") throw ParseError(line, "order must be local or global");
        order = val;
      } else {
        throw ParseError(line, "unknown ring attribute '" + key + "'");
      }
    }
    if (!have_space) throw ParseError(line, "ring needs 'space'");
    if (ov_.field) r.field = *ov_.field;
    r.local = order == "local";
    try {
      r.ctx = make_context(r.space, r.local ? MonomialOrder::local() : MonomialOrder::degrevlex(), r.params,
                           r.field);
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
    s_.rings.push_back(std::move(r));
  }

  void quotient(const std::string& rest, int line) {
    RingDecl& r = current_ring(line);
    const std::size_t idx = s_.rings.size() - 1;
    if (r.dim || !r.quotient.empty()) throw ParseError(line, "ring " + r.name + " already has a quotient");
    for (const auto& o : s_.objects) {
      if (o.ring == idx) throw ParseError(line, "quotient must precede the objects of ring " + r.name);
    }
    const auto w = words(rest, line);
    if (w.empty()) throw ParseError(line, "quotient needs a generator list");
    std::vector<Polynomial> gens;
    for (const auto& item : list_items(unwrap(w[0], '[', ']', line))) gens.push_back(poly(item, r.ctx, line));
    int dim = static_cast<int>(r.space.size()) - static_cast<int>(gens.size());
    if (w.size() == 3 && w[1] == "dim") {
      dim = static_cast<int>(parse_u64(w[2], line, "dimension"));
    } else if (w.size() != 1) {
      throw ParseError(line, "expected 'quotient [..] [dim d]'");
    }
    for (const auto& g : gens) r.quotient.push_back(g.to_string());
    r.dim = dim;
    r.ctx = r.ctx->with_quotient(std::move(gens), dim);
  }

  Polynomial poly(const std::string& text, const Context& ctx, int line) {
    return poly(text, ctx->poly_ring(), line);
  }

  Polynomial poly(const std::string& text, const PolyRingPtr& ring, int line) {
    try {
      return parse_polynomial(trim(text), ring);
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }

  std::pair<std::string, std::string> assignment(const std::string& rest, int line) {
    const auto eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected '<name> = <value>'");
    return {require_name(trim(rest.substr(0, eq)), line), trim(rest.substr(eq + 1))};
  }

  void declare(Object o, int line) {
    if (s_.names.count(o.name)) throw ParseError(line, "duplicate name " + o.name);
    for (const auto& r : s_.rings) {
      for (const auto& v : r.space) {
        if (v == o.name) throw ParseError(line, "name " + o.name + " clashes with a variable");
      }
    }
    o.line = line;
    s_.names[o.name] = s_.objects.size();
    s_.objects.push_back(std::move(o));
  }

  void object(const std::string& kw, const std::string& rest, int line) {
    const RingDecl& r = current_ring(line);
    auto [name, value] = assignment(rest, line);
    Object o;
    o.name = name;
    o.ring = s_.rings.size() - 1;
    const Context& ctx = r.ctx;
    if (kw == "poly") {
      o.kind = ObjectKind::Poly;
      o.poly = poly(value, ctx, line);
    } else if (kw == "ideal") {
      o.kind = ObjectKind::Ideal;
      std::vector<Polynomial> gens;
      for (const auto& item : list_items(unwrap(value, '[', ']', line))) gens.push_back(poly(item, ctx, line));
      o.module = Submodule::ideal(ctx, std::move(gens));
    } else if (kw == "module" || kw == "matrix") {
      std::vector<std::vector<Polynomial>> groups;
      for (const auto& item : list_items(unwrap(value, '[', ']', line))) {
        std::vector<Polynomial> g;
        for (const auto& c : list_items(unwrap(item, '[', ']', line))) g.push_back(poly(c, ctx, line));
        if (!groups.empty() && g.size() != groups.front().size()) {
          throw ParseError(line, "bracketed groups of different lengths");
        }
        if (g.empty()) throw ParseError(line, "empty bracketed group");
        groups.push_back(std::move(g));
      }
      if (groups.empty()) throw ParseError(line, kw + " needs at least one bracketed group");
      if (kw == "module") {
        o.kind = ObjectKind::Module;
        std::vector<FreeElement> gens;
        for (auto& g : groups) gens.emplace_back(std::move(g));
        const std::size_t rank = gens.front().rank();
        o.module = Submodule(ctx, rank, std::move(gens));
      } else {
        o.kind = ObjectKind::Matrix;
        o.matrix = PolyMatrix::from_rows(ctx->poly_ring(), groups);
        o.module = Submodule::from_matrix(ctx, o.matrix);
      }
    } else {
      o.kind = ObjectKind::Germ;
      const auto from = value.rfind(" from ");
      if (from == std::string::npos) throw ParseError(line, "germ needs 'from <source variables>'");
      const auto comps = list_items(unwrap(value.substr(0, from), '(', ')', line));
      const auto source = name_list(trim(value.substr(from + 6)), line);
      try {
        o.germ = make_map_germ(source, r.space, comps, r.params, r.field);
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
    }
    declare(std::move(o), line);
  }

  void family(const std::string& rest, int line) {
    const auto w = words(rest, line);
    if (w.empty()) throw ParseError(line, "family needs a name");
    Object o;
    o.kind = ObjectKind::Family;
    o.name = require_name(w[0], line);
    for (std::size_t i = 1; i < w.size(); ++i) {
      const auto [key, val] = key_value(w[i], line);
      if (key == "M") {
        o.family_m = val;
      } else if (key == "N") {
        o.family_n = val;
      } else if (key == "points") {
        pending_points_ = val;
      } else {
        throw ParseError(line, "unknown family attribute '" + key + "'");
      }
    }
    if (o.family_m.empty() || o.family_n.empty()) throw ParseError(line, "family needs M= and N=");
    const Object& m = submodule_ref(o.family_m, line);
    const Object& n = submodule_ref(o.family_n, line);
    if (m.ring != n.ring) throw ParseError(line, "family members live in different rings");
    o.ring = m.ring;
    if (!pending_points_.empty()) {
      o.points = points(pending_points_, s_.rings[o.ring].ctx, line);
      pending_points_.clear();
    }
    declare(std::move(o), line);
  }

  const Object& lookup(const std::string& name, int line) {
    const auto it = s_.names.find(name);
    if (it == s_.names.end()) throw ParseError(line, "undefined name " + name);
    return s_.objects[it->second];
  }

  const Object& submodule_ref(const std::string& name, int line) {
    const Object& o = lookup(name, line);
    if (o.kind != ObjectKind::Ideal && o.kind != ObjectKind::Module && o.kind != ObjectKind::Matrix) {
      throw ParseError(line, name + " is a " + std::string(to_string(o.kind)) + ", expected a submodule");
    }
    return o;
  }

  std::vector<Polynomial> point(const std::string& text, const Context& ctx, int line) {
    std::vector<Polynomial> out;
    for (const auto& c : list_items(unwrap(text, '(', ')', line))) out.push_back(poly(c, ctx, line));
    if (out.size() != ctx->nspace()) {
      throw ParseError(line, "point needs " + std::to_string(ctx->nspace()) + " coordinates");
    }
    return out;
  }

  std::vector<std::vector<Polynomial>> points(const std::string& text, const Context& ctx, int line) {
    std::vector<std::vector<Polynomial>> out;
    for (const auto& item : list_items(unwrap(text, '[', ']', line))) out.push_back(point(item, ctx, line));
    return out;
  }

  void check_kind(const Object& o, ArgKind want, const std::string& what, int line) {
    bool ok = false;
    switch (want) {
      case ArgKind::Poly: ok = o.kind == ObjectKind::Poly; break;
      case ArgKind::Submodule:
        ok = o.kind == ObjectKind::Ideal || o.kind == ObjectKind::Module || o.kind == ObjectKind::Matrix;
        break;
      case ArgKind::Ideal:
        ok = o.kind == ObjectKind::Ideal || (o.kind == ObjectKind::Module && o.module.rank() == 1);
        break;
      case ArgKind::Germ: ok = o.kind == ObjectKind::Germ; break;
      case ArgKind::Family: ok = o.kind == ObjectKind::Family; break;
      default: break;
    }
    if (!ok) {
      throw ParseError(line, what + " " + o.name + " is a " + std::string(to_string(o.kind)) + ", expected " +
                                 std::string(to_string(want)));
    }
  }

  void task(const std::string& rest, int line) {
    const auto w = words(rest, line);
    if (w.empty()) throw ParseError(line, "task needs an operation");
    Task t;
    t.op = w[0];
    t.line = line;
    const OpSpec* spec = find_op(t.op);
    if (!spec) throw ParseError(line, "unknown task '" + t.op + "'");
    std::vector<std::pair<std::string, std::string>> named;
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i].find('=') != std::string::npos) {
        named.push_back(key_value(w[i], line));
      } else {
        if (!named.empty()) throw ParseError(line, "positional argument after key=value");
        t.args.push_back(w[i]);
      }
    }
    if (t.args.size() != spec->positional.size()) {
      throw ParseError(line, "task " + t.op + " takes " + std::to_string(spec->positional.size()) + " argument(s)");
    }
    std::optional<std::size_t> ring;
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      const Object& o = lookup(t.args[i], line);
      check_kind(o, spec->positional[i], "argument", line);
      if (!ring) ring = o.ring;
    }
    // Names first so that point lists can use the ring of a named germ.
    std::stable_sort(named.begin(), named.end(), [&](const auto& a, const auto& b) {
      return spec->kind_of(a.first) != ArgKind::Points && spec->kind_of(b.first) == ArgKind::Points;
    });
    std::optional<std::size_t> points_ring = ring;
    for (auto& [key, val] : named) {
      if (t.options.count(key)) throw ParseError(line, "repeated option " + key);
      const ArgKind kind = spec->kind_of(key);
      switch (kind) {
        case ArgKind::None: throw ParseError(line, "task " + t.op + " has no option '" + key + "'");
        case ArgKind::Int: (void)parse_u64(val, line, key.c_str()); break;
        case ArgKind::Text: break;
        case ArgKind::Point: {
          const auto p = point(val, s_.rings[*ring].ctx, line);
          std::vector<std::string> cs;
          for (const auto& c : p) cs.push_back(c.to_string());
          val = "(" + join(cs, ", ") + ")";
          break;
        }
        case ArgKind::Points: {
          const auto ps = points(val, s_.rings[*points_ring].ctx, line);
          val = render_points(ps);
          break;
        }
        default: {
          const Object& o = lookup(val, line);
          check_kind(o, kind, "option " + key + ":", line);
          if (kind == ArgKind::Germ) points_ring = o.ring;
          break;
        }
      }
      t.options[key] = val;
    }
    for (const auto& req : spec->required) {
      if (!t.options.count(req)) throw ParseError(line, "task " + t.op + " needs " + req + "=");
    }
    s_.tasks.push_back(std::move(t));
  }

  void option(const std::string& rest, int line) {
    for (const auto& w : words(rest, line)) {
      const auto [key, val] = key_value(w, line);
      if (key == "seed") {
        s_.options.seed = parse_u64(val, line, "seed");
      } else if (key == "nmax") {
        s_.options.n_max = static_cast<unsigned>(parse_u64(val, line, "nmax"));
      } else if (key == "output") {
        if (val != "json" && val != "text") throw ParseError(line, "output must be json or text");
        s_.options.json = val == "json";
      } else {
        throw ParseError(line, "unknown option '" + key + "'");
      }
    }
  }

  void assume(const std::string& rest, int line) {
    const auto w = words(rest, line);
    if (w.size() != 1) throw ParseError(line, "assume takes one flag");
    const std::string flag = require_name(w[0], line);
    if (!std::count(s_.assumptions.begin(), s_.assumptions.end(), flag)) s_.assumptions.push_back(flag);
  }

  const Overrides& ov_;
  Session s_;
  std::string pending_points_;
};

}  // namespace

std::string_view to_string(ObjectKind k) noexcept {
  switch (k) {
    case ObjectKind::Poly: return "poly";
    case ObjectKind::Ideal: return "ideal";
    case ObjectKind::Module: return "module";
    case ObjectKind::Matrix: return "matrix";
    case ObjectKind::Germ: return "germ";
    case ObjectKind::Family: return "family";
  }
  return "?";
}

const Object& Session::object(const std::string& name) const {
  const auto it = names.find(name);
  if (it == names.end()) throw Error(ErrorKind::InvalidArgument, "undefined name " + name);
  return objects[it->second];
}

bool Session::assumed(const std::string& flag) const {
  return std::find(assumptions.begin(), assumptions.end(), flag) != assumptions.end();
}

std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (is_open(c)) ++depth;
    if (is_close(c)) --depth;
    if (depth == 0 && c == sep) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

Field parse_field(const std::string& text) {
  if (text == "QQ") return Field::rationals();
  if (text.rfind("FP:", 0) == 0) {
    std::uint32_t p = 0;
    const char* b = text.data() + 3;
    const char* e = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(b, e, p);
    if (ec == std::errc() && ptr == e) return Field::prime(p);
  }
  throw Error(ErrorKind::InvalidArgument, "field must be QQ or FP:<p>, got '" + text + "'");
}

std::string render_points(const std::vector<std::vector<Polynomial>>& pts) {
  std::vector<std::string> items;
  for (const auto& p : pts) {
    std::vector<std::string> cs;
    for (const auto& c : p) cs.push_back(c.to_string());
    items.push_back("(" + join(cs, ", ") + ")");
  }
  return "[" + join(items, ", ") + "]";
}

Session parse_session(const std::string& text, const Overrides& overrides) {
  return Parser(overrides).run(text);
}

std::string serialize_session(const Session& s) {
  std::ostringstream out;
  out << "format 1\n";
  std::size_t next_ring = 0;
  auto emit_ring = [&](const RingDecl& r) {
    out << "ring " << r.name << " space " << join(r.space, ",");
    if (!r.params.empty()) out << " params " << join(r.params, ",");
    out << " over " << r.field.to_string() << " order " << (r.local ? "local" : "global") << "\n";
    if (r.dim) out << "quotient [" << join(r.quotient, ", ") << "] dim " << *r.dim << "\n";
  };
  auto polys = [](const std::vector<Polynomial>& ps) {
    std::vector<std::string> xs;
    for (const auto& p : ps) xs.push_back(p.to_string());
    return join(xs, ", ");
  };
  for (const auto& o : s.objects) {
    while (next_ring <= o.ring) emit_ring(s.rings[next_ring++]);
    switch (o.kind) {
      case ObjectKind::Poly: out << "poly " << o.name << " = " << o.poly.to_string() << "\n"; break;
      case ObjectKind::Ideal:
        out << "ideal " << o.name << " = [" << polys(o.module.ideal_generators()) << "]\n";
        break;
      case ObjectKind::Module: {
        std::vector<std::string> gs;
        for (const auto& g : o.module.generators()) gs.push_back("[" + polys(g.components()) + "]");
        out << "module " << o.name << " = [" << join(gs, ", ") << "]\n";
        break;
      }
      case ObjectKind::Matrix: {
        std::vector<std::string> rows;
        for (std::size_t r = 0; r < o.matrix.rows(); ++r) {
          std::vector<Polynomial> row;
          for (std::size_t c = 0; c < o.matrix.cols(); ++c) row.push_back(o.matrix(r, c));
          rows.push_back("[" + polys(row) + "]");
        }
        out << "matrix " << o.name << " = [" << join(rows, ", ") << "]\n";
        break;
      }
      case ObjectKind::Germ:
        out << "germ " << o.name << " = (" << polys(o.germ.components) << ") from " << join(o.germ.source, ",")
            << "\n";
        break;
      case ObjectKind::Family:
        out << "family " << o.name << " M=" << o.family_m << " N=" << o.family_n;
        if (!o.points.empty()) out << " points=" << render_points(o.points);
        out << "\n";
        break;
    }
  }
  while (next_ring < s.rings.size()) emit_ring(s.rings[next_ring++]);
  out << "option seed=" << s.options.seed << " nmax=" << s.options.n_max;
  if (s.options.json) out << " output=json";
  out << "\n";
  for (const auto& a : s.assumptions) out << "assume " << a << "\n";
  for (const auto& t : s.tasks) {
    out << "task " << t.op;
    for (const auto& a : t.args) out << " " << a;
    for (const auto& [k, v] : t.options) out << " " << k << "=" << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace pairmult::session
