#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairmult/gb/module.hpp"
#include "pairmult/mult/multiplicity.hpp"
#include "pairmult/polar/polar.hpp"
#include "pairmult/symcore/generic.hpp"

namespace pairmult {

// Jacobian modules ----------------------------------------------------------

/// Which partial derivatives generate the module: all variables, the space
/// variables only (the r_k relative module) or the parameters only (r_n).
enum class Relative { All, Space, Params };

/// Columns of the Jacobian of (F, f) for the selected variables. With F
/// empty and f present this is the Jacobian ideal J(f).
Submodule jacobian_module(const Context& ctx, const std::vector<Polynomial>& big_f,
                          const std::optional<Polynomial>& f, Relative relative = Relative::Space);

/// Partials of f with respect to the space variables.
Submodule jacobian_ideal(const Context& ctx, const Polynomial& f);

/// dim I / J(f) in the local ring.
std::uint64_t j_invariant(const Polynomial& f, const Submodule& i);

// Singular points -----------------------------------------------------------

enum class PointClass { AInfinity, DInfinity, A1, Other };
std::string_view to_string(PointClass c) noexcept;

struct SingularPointClass {
  std::vector<Scalar> point;
  PointClass kind = PointClass::Other;
  bool on_sigma = false;
  std::optional<std::uint64_t> local_j;
  std::size_t hessian_rank = 0;
};

/// f and sigma live in a context whose variables are the space variables;
/// `point` has one coordinate per variable.
SingularPointClass classify_singular_point(const Polynomial& f, const Submodule& sigma,
                                           const std::vector<Scalar>& point);

struct PellikaanReport {
  std::uint64_t j = 0;
  std::int64_t e = 0;
  Scalar parameter;
  std::vector<SingularPointClass> points;
  std::uint64_t a1 = 0;
  std::uint64_t d_infinity = 0;
  std::uint64_t a_infinity = 0;
  std::uint64_t other = 0;
  std::uint64_t global_length = 0;
  bool e_equals_j = false;
  bool j_equals_count = false;
  bool holds = false;
};

/// f and I are the central germ; family_f and sigma_family live in the same
/// context with one parameter. Points are polynomials in the parameter.
PellikaanReport pellikaan_report(const Polynomial& family_f, const Submodule& sigma_family,
                                 const std::vector<std::vector<Polynomial>>& points,
                                 GenericScalarStream& stream, unsigned n_max = kDefaultNMax);

// Map germs -----------------------------------------------------------------

/// Corank-one germ (u_1..u_a, v) -> (x_1..x_a, y, z) of the shape
/// (u_1, ..., u_a, p, q). Components live in a ring over params + source.
struct MapGerm {
  std::vector<std::string> params;
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<Polynomial> components;
  Field field = Field::rationals();

  PolyRingPtr source_ring() const;
};

MapGerm make_map_germ(std::vector<std::string> source, std::vector<std::string> target,
                      const std::vector<std::string>& components, std::vector<std::string> params = {},
                      Field field = Field::rationals());

struct Presentation {
  /// Local target context: params followed by the target variables.
  Context target;
  unsigned degree = 0;
  PolyMatrix matrix;
  Polynomial f0;
  Submodule f1;
};

Presentation pushforward_presentation(const MapGerm& germ);

/// Image of the germ by elimination of the source variables from the graph.
Submodule image_by_elimination(const MapGerm& germ);

struct DisentanglementReport {
  Polynomial image;
  Submodule conductor;
  Submodule conductor_p;
  std::int64_t e_pair = 0;
  std::uint64_t dim_c_over_cp = 0;
  std::uint64_t dim_c_over_jf = 0;
  std::uint64_t dim_c_over_jf_pullback = 0;
  std::int64_t mu = 0;
  bool thm26_ii = false;
  /// Present when an unfolding was supplied.
  std::optional<bool> thm26_i;
  std::optional<bool> thm26_ii_count;
  std::optional<bool> cor27_count;
  std::optional<PellikaanReport> census;
  std::optional<std::uint64_t> polar_mult;
};

/// `unfolding` is a one-parameter stable perturbation of the germ; its
/// `points` are the singular points of the perturbed image equation, as
/// polynomials in the parameter.
struct Unfolding {
  MapGerm germ;
  std::vector<std::vector<Polynomial>> points;
};

DisentanglementReport disentanglement_report(const MapGerm& germ, GenericScalarStream& stream,
                                             unsigned n_max = kDefaultNMax,
                                             const std::optional<Unfolding>& unfolding = std::nullopt);

// ICIS invariants -----------------------------------------------------------

/// Milnor number of the ICIS (f_1, ..., f_r) by the Lê–Greuel recursion.
std::uint64_t milnor_icis(const Context& ctx, const std::vector<Polynomial>& equations);

struct OneFormReport {
  std::int64_t e_omega = 0;
  std::int64_t e_dl = 0;
  std::uint64_t slice_mu = 0;
  std::int64_t index = 0;
  bool pair_terms_cancel = false;
  std::vector<Polynomial> linear_form_coefficients;
  std::vector<std::string> assumptions;
};

/// Index of the 1-form sum omega_i dz_i on the ICIS X = V(equations) at the
/// origin. An empty `linear_form` draws a generic one.
OneFormReport one_form_index(const Context& ctx, const std::vector<Polynomial>& equations,
                             const std::vector<Polynomial>& omega,
                             const std::optional<Polynomial>& linear_form, GenericScalarStream& stream,
                             unsigned n_max = kDefaultNMax);

struct WfSample {
  Scalar y;
  std::int64_t e_f = 0;
  std::int64_t e_l = 0;
  std::int64_t difference = 0;
};

struct WfReport {
  std::vector<WfSample> samples;
  bool e_constant = false;
  bool independent = false;
  std::string mode = "icis_free_module";
};

/// Family over one parameter: X_y = V(equations), function f, linear form l.
WfReport wf_invariant(const Context& ctx, const std::vector<Polynomial>& equations, const Polynomial& f,
                      const Polynomial& l, GenericScalarStream& stream, unsigned n_max = kDefaultNMax,
                      std::vector<Scalar> samples = {});

}  // namespace pairmult
