#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pairmult/symcore/ring.hpp"

namespace pairmult {

/// Element of the free module O^p: one polynomial per component.
class FreeElement {
 public:
  FreeElement() = default;
  FreeElement(PolyRingPtr ring, std::size_t rank);
  explicit FreeElement(std::vector<Polynomial> components);

  static FreeElement unit(PolyRingPtr ring, std::size_t rank, std::size_t index);

  std::size_t rank() const noexcept { return components_.size(); }
  const PolyRingPtr& ring() const noexcept { return ring_; }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }
  Polynomial& operator[](std::size_t i) { return components_.at(i); }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  bool is_zero() const noexcept;

  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const Polynomial& f, const FreeElement& v);
  friend bool operator==(const FreeElement& a, const FreeElement& b) = default;

  std::string to_string(const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> components_;
};

/// Dense matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(PolyRingPtr ring, std::size_t rows, std::size_t cols);
  /// Columns become the matrix columns.
  static PolyMatrix from_columns(PolyRingPtr ring, std::size_t rows,
                                 std::span<const FreeElement> columns);
  static PolyMatrix from_rows(PolyRingPtr ring, const std::vector<std::vector<Polynomial>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const PolyRingPtr& ring() const noexcept { return ring_; }

  /// Determinant of the submatrix on the given rows and columns, by cofactor
  /// expansion (no division).
  Polynomial minor(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

 private:
  PolyRingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Finitely generated submodule of O_X^p given by generators. When the
/// context carries a quotient ideal, every basis computation also includes
/// quotient * e_i for each unit vector e_i.
class Submodule {
 public:
  Submodule() = default;
  Submodule(Context ctx, std::size_t rank, std::vector<FreeElement> generators);

  static Submodule ideal(Context ctx, std::vector<Polynomial> generators);
  static Submodule free(Context ctx, std::size_t rank);
  static Submodule from_matrix(Context ctx, const PolyMatrix& m);

  const Context& context() const noexcept { return ctx_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const std::vector<FreeElement>& generators() const noexcept { return gens_; }
  /// Polynomial generators of a rank-one submodule.
  std::vector<Polynomial> ideal_generators() const;
  PolyMatrix matrix() const;

  /// Same generators in another context over the same variables.
  Submodule in_context(Context ctx) const;

 private:
  Context ctx_;
  std::size_t rank_ = 0;
  std::vector<FreeElement> gens_;
};

namespace detail {
struct Vec;
}

enum class BasisFlavor { Global, Local };

/// Interreduced Gröbner basis (global order) or minimal Mora standard basis
/// (local order) of a submodule, quotient generators included.
class GBasis {
 public:
  GBasis();
  GBasis(Context ctx, std::size_t rank, MonomialOrder order, std::vector<detail::Vec> elements);
  GBasis(const GBasis&);
  GBasis(GBasis&&) noexcept;
  GBasis& operator=(const GBasis&);
  GBasis& operator=(GBasis&&) noexcept;
  ~GBasis();

  const Context& context() const noexcept { return ctx_; }
  std::size_t rank() const noexcept { return rank_; }
  const MonomialOrder& order() const noexcept { return order_; }
  BasisFlavor flavor() const noexcept {
    return order_.is_local() ? BasisFlavor::Local : BasisFlavor::Global;
  }
  std::size_t size() const noexcept;
  std::vector<FreeElement> elements() const;
  /// Leading terms as (monomial, component).
  std::vector<std::pair<Monomial, std::size_t>> leading_terms() const;
  const std::vector<detail::Vec>& vecs() const noexcept { return *elements_; }
  /// Local bases: degrees d_c with m^{d_c} e_c inside the module, when known.
  const std::vector<std::int64_t>& noether_bounds() const noexcept { return bounds_; }
  void set_noether_bounds(std::vector<std::int64_t> bounds) { bounds_ = std::move(bounds); }

  /// One element per line, canonical text.
  std::string to_string() const;

 private:
  Context ctx_;
  std::size_t rank_ = 0;
  MonomialOrder order_;
  std::unique_ptr<std::vector<detail::Vec>> elements_;
  std::vector<std::int64_t> bounds_;
};

/// Colength of a submodule: a natural number or infinity.
class Length {
 public:
  static Length infinite() { return Length(); }
  static Length finite(std::uint64_t v) { return Length(v); }

  bool is_finite() const noexcept { return value_.has_value(); }
  std::uint64_t value() const;
  std::string to_string() const { return is_finite() ? std::to_string(*value_) : "inf"; }
  friend bool operator==(const Length&, const Length&) = default;

 private:
  Length() = default;
  explicit Length(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

/// Process-wide safety valves.
struct KernelLimits {
  std::uint64_t max_colength = 2'000'000;
  std::size_t max_sym_rank = 4096;
};
KernelLimits kernel_limits();
void set_kernel_limits(const KernelLimits& limits);

// Basis computations -------------------------------------------------------

/// Basis in the flavor of the context order.
GBasis compute_basis(const Submodule& s);
/// Buchberger with the normal strategy and sugar tie-break; global order only.
GBasis groebner_basis(const Submodule& s);
/// Mora tangent-cone algorithm with ecart-controlled reduction; local order only.
GBasis standard_basis(const Submodule& s);

/// Remainder with respect to B. For local bases this is Mora's weak normal
/// form: zero iff h lies in the localized module.
FreeElement normal_form(const FreeElement& h, const GBasis& b);
bool contains(const GBasis& b, const FreeElement& h);
/// small ⊆ big in the flavor of big's context.
bool contains(const Submodule& big, const Submodule& small);
bool same_module(const Submodule& a, const Submodule& b);

// Module calculus ----------------------------------------------------------

/// {a ∈ O^s : Σ a_i h_i ∈ T}, with s = h.size().
Submodule preimage_submodule(std::span<const FreeElement> h, const Submodule& target);
/// Same, returned as a basis (position-over-term order) ready for colength.
GBasis preimage_basis(std::span<const FreeElement> h, const Submodule& target);

Submodule ideal_sum(const Submodule& a, const Submodule& b);
Submodule ideal_product(const Submodule& a, const Submodule& b);
/// Module times ideal: products of every ideal generator with every generator.
Submodule module_times_ideal(const Submodule& m, const Submodule& ideal);
Submodule ideal_quotient(const Submodule& i, const Submodule& j);
Submodule saturate(const Submodule& i, const Submodule& j);
/// Ideal intersected with the subring free of `vars`; needs a global order.
Submodule eliminate(const Submodule& i, std::span<const std::string> vars);
/// Ideal of all t×t minors.
Submodule minors(const Context& ctx, const PolyMatrix& a, std::size_t t);
/// Degree-n piece of the Rees algebra of S inside Sym^n(O^p). Components are
/// indexed by the degree-n monomials in T_1..T_p in decreasing lex order.
Submodule power_in_sym(const Submodule& s, unsigned n);
std::vector<Monomial> sym_basis(std::size_t p, unsigned n);

Length colength(const GBasis& b);
Length colength(const Submodule& s);

/// Largest t with a t×t minor of the generator matrix nonzero modulo the
/// quotient ideal.
std::size_t generic_rank(const Submodule& s);

}  // namespace pairmult
