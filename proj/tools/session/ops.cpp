#include "ops.hpp"

namespace pairmult::session {

std::string_view to_string(ArgKind k) noexcept {
  switch (k) {
    case ArgKind::None: return "nothing";
    case ArgKind::Poly: return "poly";
    case ArgKind::Submodule: return "ideal, module or matrix";
    case ArgKind::Ideal: return "ideal";
    case ArgKind::Germ: return "germ";
    case ArgKind::Family: return "family";
    case ArgKind::Int: return "integer";
    case ArgKind::Text: return "word";
    case ArgKind::Point: return "point";
    case ArgKind::Points: return "point list";
  }
  return "?";
}

const std::vector<OpSpec>& all_ops() {
  using K = ArgKind;
  static const std::vector<OpSpec> ops = {
      {"colength", {K::Submodule}, {}, {}},
      {"basis", {K::Submodule}, {}, {}},
      {"jacobian", {K::Poly}, {}, {}},
      {"jacobian_module", {K::Ideal}, {{"f", K::Poly}, {"relative", K::Text}}, {}},
      {"samuel", {K::Ideal}, {{"nmax", K::Int}}, {}},
      {"buchsbaum_rim", {K::Submodule}, {{"nmax", K::Int}}, {}},
      {"pair_multiplicity", {K::Submodule, K::Submodule}, {{"nmax", K::Int}}, {}},
      {"pair_length", {K::Submodule, K::Submodule}, {}, {}},
      {"reduction_check", {K::Submodule, K::Submodule}, {{"nmax", K::Int}}, {}},
      {"perturbation_count", {K::Submodule}, {{"nmax", K::Int}}, {}},
      {"polar", {K::Submodule}, {{"k", K::Int}}, {"k"}},
      {"multiplicity_polar_check", {K::Family}, {{"nmax", K::Int}}, {}},
      {"j_invariant", {K::Poly, K::Ideal}, {}, {}},
      {"classify", {K::Poly, K::Ideal}, {{"point", K::Point}}, {"point"}},
      {"pellikaan", {K::Poly, K::Ideal}, {{"points", K::Points}, {"nmax", K::Int}}, {"points"}},
      {"presentation", {K::Germ}, {}, {}},
      {"image", {K::Germ}, {}, {}},
      {"disentanglement",
       {K::Germ},
       {{"unfolding", K::Germ}, {"points", K::Points}, {"nmax", K::Int}},
       {}},
      {"milnor", {K::Ideal}, {}, {}},
      {"one_form", {K::Ideal}, {{"omega", K::Submodule}, {"L", K::Poly}, {"nmax", K::Int}}, {"omega"}},
      {"wf", {K::Ideal}, {{"f", K::Poly}, {"l", K::Poly}, {"nmax", K::Int}}, {"f", "l"}},
  };
  return ops;
}

const OpSpec* find_op(std::string_view name) {
  for (const auto& op : all_ops()) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

}  // namespace pairmult::session
