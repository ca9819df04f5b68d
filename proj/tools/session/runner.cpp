#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "pairmult/error.hpp"
#include "pairmult/germs/germs.hpp"

namespace pairmult::session {

using nlohmann::json;

namespace {

std::string compact(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string text(const Polynomial& p) { return compact(p.to_string()); }

json sorted_generators(const Submodule& m) {
  std::vector<std::string> out;
  for (const auto& g : m.generators()) {
    out.push_back(m.rank() == 1 ? text(g[0]) : compact(g.to_string()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

json polys(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(text(p));
  return out;
}

json length(const Length& l) {
  if (l.is_finite()) return l.value();
  return "inf";
}

/// Task-local view of the session: argument lookup and the output record.
class Job {
 public:
  Job(const Session& s, const Task& t, TaskResult& r) : s_(s), t_(t), r_(r) {}

  const Object& arg(std::size_t i) const { return s_.object(t_.args.at(i)); }
  const Object& object(const std::string& name) const { return s_.object(name); }
  const Object& named(const std::string& key) const { return s_.object(t_.options.at(key)); }
  bool has(const std::string& key) const { return t_.options.count(key) != 0; }
  const Context& ctx(const Object& o) const { return s_.rings.at(o.ring).ctx; }

  unsigned n_max() const {
    return has("nmax") ? static_cast<unsigned>(std::stoul(t_.options.at("nmax"))) : s_.options.n_max;
  }

  void require(const std::string& flag) {
    if (!s_.assumed(flag)) {
      throw Error(ErrorKind::MissingAssumption, "task " + t_.op + " needs 'assume " + flag + "'");
    }
    r_.assumptions.push_back(flag);
  }

  void note(const std::string& text) {
    r_.assumption_notes.push_back(text);
    const std::string flag = text.substr(0, text.find(':'));
    if (!std::count(r_.assumptions.begin(), r_.assumptions.end(), flag)) r_.assumptions.push_back(flag);
  }

  void put(const std::string& key, json value) { r_.fields.emplace_back(key, std::move(value)); }

  std::vector<std::vector<Polynomial>> points(const std::string& key, const Context& ctx) const {
    return parse_points(t_.options.at(key), ctx);
  }

  std::vector<Polynomial> point(const std::string& key, const Context& ctx) const {
    return parse_points("[" + t_.options.at(key) + "]", ctx).at(0);
  }

  static std::vector<std::vector<Polynomial>> parse_points(const std::string& raw, const Context& ctx) {
    std::vector<std::vector<Polynomial>> out;
    const std::string inner = raw.substr(1, raw.size() - 2);
    if (inner.empty()) return out;
    for (auto item : split_top(inner, ',')) {
      const auto b = item.find('('), e = item.rfind(')');
      std::vector<Polynomial> pt;
      for (const auto& c : split_top(item.substr(b + 1, e - b - 1), ',')) {
        pt.push_back(parse_polynomial(c, ctx->poly_ring()));
      }
      out.push_back(std::move(pt));
    }
    return out;
  }

 private:
  const Session& s_;
  const Task& t_;
  TaskResult& r_;
};

void put_multiplicity(Job& job, const MultiplicityResult& m) {
  job.put("value", m.value);
  job.put("degree", m.degree);
  job.put("lambda", m.lambda);
}

std::string verdict(bool ok, const char* pass, const char* fail) { return ok ? pass : fail; }

void put_census(Job& job, const PellikaanReport& rep) {
  job.put("parameter", rep.parameter.to_string());
  job.put("a1", rep.a1);
  job.put("d_inf", rep.d_infinity);
  job.put("a_inf", rep.a_infinity);
  job.put("other", rep.other);
  job.put("global_length", rep.global_length);
}

void dispatch(const Task& t, Job& job, GenericScalarStream& stream) {
  const std::string& op = t.op;
  if (op == "colength") {
    job.put("value", length(colength(job.arg(0).module)));
  } else if (op == "basis") {
    const GBasis b = compute_basis(job.arg(0).module);
    std::vector<std::string> els;
    for (const auto& e : b.elements()) els.push_back(b.rank() == 1 ? text(e[0]) : compact(e.to_string()));
    std::sort(els.begin(), els.end());
    job.put("size", els.size());
    job.put("basis", els);
  } else if (op == "jacobian") {
    const Object& f = job.arg(0);
    job.put("gens", sorted_generators(jacobian_ideal(job.ctx(f), f.poly)));
  } else if (op == "jacobian_module") {
    const Object& x = job.arg(0);
    Relative rel = Relative::Space;
    if (job.has("relative")) {
      const std::string& v = t.options.at("relative");
      if (v == "all") {
        rel = Relative::All;
      } else if (v == "params") {
        rel = Relative::Params;
      } else if (v != "space") {
        throw Error(ErrorKind::InvalidArgument, "relative must be all, space or params");
      }
    }
    std::optional<Polynomial> f;
    if (job.has("f")) f = job.named("f").poly;
    const Submodule jm = jacobian_module(job.ctx(x), x.module.ideal_generators(), f, rel);
    job.put("rank", jm.rank());
    job.put("columns", sorted_generators(jm));
  } else if (op == "samuel") {
    put_multiplicity(job, samuel_multiplicity(job.arg(0).module, job.n_max()));
  } else if (op == "buchsbaum_rim") {
    put_multiplicity(job, buchsbaum_rim(job.arg(0).module, job.n_max()));
  } else if (op == "pair_multiplicity") {
    put_multiplicity(job, pair_multiplicity(job.arg(0).module, job.arg(1).module, job.n_max()));
  } else if (op == "pair_length") {
    job.put("value", length(pair_length(job.arg(0).module, job.arg(1).module)));
  } else if (op == "reduction_check") {
    job.put("value", reduction_check(job.arg(0).module, job.arg(1).module, job.n_max()));
  } else if (op == "perturbation_count") {
    const Submodule& m = job.arg(0).module;
    const auto pc = generic_perturbation_count(m, stream);
    const auto br = buchsbaum_rim(m, job.n_max());
    job.put("count", pc.count);
    job.put("retries", pc.retries);
    job.put("e_br", br.value);
    job.put("verdict", verdict(static_cast<std::int64_t>(pc.count) == br.value, "equal", "unequal"));
  } else if (op == "polar") {
    const auto k = std::stoul(t.options.at("k"));
    const auto rep = polar_ideal(job.arg(0).module, k, stream);
    job.put("k", k);
    job.put("generic_rank", rep.generic_rank);
    job.put("empty", rep.empty);
    job.put("gamma", sorted_generators(rep.gamma_ideal));
  } else if (op == "multiplicity_polar_check") {
    job.require("specialization_condition");
    const Object& fam = job.arg(0);
    const Object& m = job.object(fam.family_m);
    const Object& n = job.object(fam.family_n);
    const FamilySpec spec{job.ctx(fam), m.module, n.module, fam.points};
    const auto rep = multiplicity_polar_check(spec, stream, job.n_max());
    for (const auto& a : rep.assumptions) job.note(a);
    job.put("e_origin", rep.e_origin);
    job.put("base_point", rep.base_point.to_string());
    json fiber = json::array();
    for (const auto& c : rep.fiber) fiber.push_back(c.pair_multiplicity);
    job.put("fiber", fiber);
    job.put("global_length", rep.global_length);
    job.put("polar_m_empty", rep.polar_m.empty);
    job.put("polar_n_empty", rep.polar_n.empty);
    job.put("mult_m", rep.mult_m.value);
    job.put("mult_n", rep.mult_n.value);
    job.put("lhs", rep.lhs);
    job.put("rhs", rep.rhs);
    job.put("verdict", verdict(rep.equal, "equal", "unequal"));
  } else if (op == "j_invariant") {
    job.put("value", j_invariant(job.arg(0).poly, job.arg(1).module));
  } else if (op == "classify") {
    const Object& f = job.arg(0);
    std::vector<Scalar> point;
    for (const auto& c : job.point("point", job.ctx(f))) {
      if (!c.is_constant()) throw Error(ErrorKind::InvalidArgument, "classify needs a numeric point");
      point.push_back(c.constant_term());
    }
    const auto cls = classify_singular_point(f.poly, job.arg(1).module, point);
    job.put("class", std::string(to_string(cls.kind)));
    job.put("on_sigma", cls.on_sigma);
    job.put("hessian_rank", cls.hessian_rank);
    if (cls.local_j) job.put("local_j", *cls.local_j);
  } else if (op == "pellikaan") {
    job.require("complete_intersection");
    const Object& f = job.arg(0);
    const auto rep = pellikaan_report(f.poly, job.arg(1).module, job.points("points", job.ctx(f)), stream,
                                      job.n_max());
    job.put("j", rep.j);
    job.put("e", rep.e);
    put_census(job, rep);
    job.put("e_equals_j", rep.e_equals_j);
    job.put("j_equals_count", rep.j_equals_count);
    job.put("verdict", verdict(rep.holds, "holds", "fails"));
  } else if (op == "presentation") {
    const auto pres = pushforward_presentation(job.arg(0).germ);
    json rows = json::array();
    for (std::size_t r = 0; r < pres.matrix.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < pres.matrix.cols(); ++c) row.push_back(text(pres.matrix(r, c)));
      rows.push_back(row);
    }
    job.put("degree", pres.degree);
    job.put("matrix", rows);
    job.put("f0", text(pres.f0));
    job.put("f1", sorted_generators(pres.f1));
  } else if (op == "image") {
    job.put("gens", sorted_generators(image_by_elimination(job.arg(0).germ)));
  } else if (op == "disentanglement") {
    job.require("finitely_determined");
    std::optional<Unfolding> unfolding;
    if (job.has("unfolding")) {
      const Object& g = job.named("unfolding");
      unfolding = Unfolding{g.germ, job.has("points") ? job.points("points", job.ctx(g))
                                                      : std::vector<std::vector<Polynomial>>{}};
    } else if (job.has("points")) {
      throw Error(ErrorKind::InvalidArgument, "points= needs unfolding=");
    }
    const auto rep = disentanglement_report(job.arg(0).germ, stream, job.n_max(), unfolding);
    job.put("image", text(rep.image));
    job.put("conductor", sorted_generators(rep.conductor));
    job.put("e_pair", rep.e_pair);
    job.put("dim_c_cp", rep.dim_c_over_cp);
    job.put("dim_c_j", rep.dim_c_over_jf);
    job.put("dim_c_j_source", rep.dim_c_over_jf_pullback);
    job.put("mu", rep.mu);
    job.put("mu_identity", rep.thm26_ii);
    bool holds = rep.thm26_ii;
    if (rep.census) put_census(job, *rep.census);
    if (rep.polar_mult) job.put("polar_mult", *rep.polar_mult);
    auto flag = [&](const char* key, const std::optional<bool>& v) {
      if (!v) return;
      job.put(key, *v);
      holds = holds && *v;
    };
    flag("polar_identity", rep.thm26_i);
    flag("count_identity", rep.thm26_ii_count);
    flag("census_identity", rep.cor27_count);
    job.put("verdict", verdict(holds, "holds", "fails"));
  } else if (op == "milnor") {
    const Object& x = job.arg(0);
    job.put("value", milnor_icis(job.ctx(x), x.module.ideal_generators()));
  } else if (op == "one_form") {
    const Object& x = job.arg(0);
    const Object& w = job.named("omega");
    std::vector<Polynomial> omega;
    if (w.module.rank() == 1) {
      omega = w.module.ideal_generators();
    } else if (w.module.size() == 1) {
      omega = w.module.generators().front().components();
    } else {
      throw Error(ErrorKind::InvalidArgument, "omega must be a list of coefficients or a single column");
    }
    std::optional<Polynomial> l;
    if (job.has("L")) {
      l = job.named("L").poly;
    } else {
      job.require("generic_linear_form");
    }
    const auto rep = one_form_index(job.ctx(x), x.module.ideal_generators(), omega, l, stream, job.n_max());
    for (const auto& a : rep.assumptions) job.note(a);
    job.put("linear_form", polys(rep.linear_form_coefficients));
    job.put("e_omega", rep.e_omega);
    job.put("e_dl", rep.e_dl);
    job.put("slice_mu", rep.slice_mu);
    job.put("index", rep.index);
    job.put("pair_terms_cancel", rep.pair_terms_cancel);
  } else if (op == "wf") {
    const Object& x = job.arg(0);
    const auto rep = wf_invariant(job.ctx(x), x.module.ideal_generators(), job.named("f").poly,
                                  job.named("l").poly, stream, job.n_max());
    json samples = json::array();
    for (const auto& s : rep.samples) {
      samples.push_back(json::array({s.y.to_string(), s.e_f, s.e_l, s.difference}));
    }
    job.put("mode", rep.mode);
    job.put("samples", samples);
    job.put("e_constant", rep.e_constant);
    job.put("independent", rep.independent);
  } else {
    throw Error(ErrorKind::Unsupported, "unknown task " + op);
  }
}

void render_value(std::string& out, const json& v) {
  if (v.is_array()) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ',';
      render_value(out, v[i]);
    }
    out += ']';
  } else if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const bool plain = !s.empty() && std::none_of(s.begin(), s.end(), [](char c) {
      return c == ' ' || c == '"' || c == '=' || c == '[' || c == ']' || c == ',';
    });
    out += plain ? s : v.dump();
  } else {
    out += v.dump();
  }
}

}  // namespace

bool TaskResult::identity_failed() const {
  for (const auto& [k, v] : fields) {
    if (k == "verdict" && v != "equal" && v != "holds") return true;
  }
  return false;
}

TaskResult run_task(const Session& s, std::size_t index) {
  const Task& t = s.tasks.at(index);
  TaskResult r;
  r.index = index;
  r.op = t.op;
  r.name = t.args.empty() ? "" : t.args.front();
  r.seed = GenericScalarStream::derive_seed(s.options.seed, index);
  GenericScalarStream stream(r.seed);
  Job job(s, t, r);
  try {
    dispatch(t, job, stream);
  } catch (const Error& e) {
    r.ok = false;
    r.error_kind = std::string(to_string(e.kind()));
    r.error_message = e.what();
  } catch (const std::exception& e) {
    r.ok = false;
    r.error_kind = "Internal";
    r.error_message = e.what();
  }
  if (!r.ok) r.fields.clear();
  r.draws = stream.draw_log();
  return r;
}

std::vector<TaskResult> run_session(const Session& s, unsigned jobs) {
  std::vector<TaskResult> results(s.tasks.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(s.tasks.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < s.tasks.size(); ++i) results[i] = run_task(s, i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < s.tasks.size();) results[i] = run_task(s, i);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

int exit_code(const std::vector<TaskResult>& results) {
  bool identity = false;
  for (const auto& r : results) {
    if (!r.ok) return kExitTaskError;
    identity = identity || r.identity_failed();
  }
  return identity ? kExitIdentity : kExitOk;
}

std::string to_text(const TaskResult& r) {
  std::string out = "task=" + r.op;
  if (!r.name.empty()) out += " name=" + r.name;
  for (const auto& [k, v] : r.fields) {
    out += ' ' + k + '=';
    render_value(out, v);
  }
  if (!r.assumptions.empty()) {
    out += " assumptions=";
    render_value(out, r.assumptions);
  }
  if (!r.draws.empty()) {
    out += " draws=";
    render_value(out, r.draws);
  }
  if (r.ok) {
    out += " status=ok";
  } else {
    out += " status=error kind=" + r.error_kind + " message=" + json(r.error_message).dump();
  }
  return out;
}

std::string to_json(const TaskResult& r) {
  json j;
  j["task"] = r.op;
  j["index"] = r.index;
  if (!r.name.empty()) j["name"] = r.name;
  j["status"] = r.ok ? "ok" : "error";
  if (!r.ok) j["error"] = {{"kind", r.error_kind}, {"message", r.error_message}};
  json payload = json::object();
  for (const auto& [k, v] : r.fields) payload[k] = v;
  j["payload"] = payload;
  j["assumption_log"] = r.assumptions;
  if (!r.assumption_notes.empty()) j["assumption_notes"] = r.assumption_notes;
  j["seed"] = r.seed;
  j["draw_log"] = r.draws;
  return j.dump();
}

std::string render(const Session& s, const std::vector<TaskResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += s.options.json ? to_json(r) : to_text(r);
    out += '\n';
  }
  return out;
}

}  // namespace pairmult::session
