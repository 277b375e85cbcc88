#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grgrad/exactla.hpp"
#include "grgrad/groupoid.hpp"

namespace grgrad {

struct BasisElement {
  std::string name;
  Morphism degree;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// A subspace spanned by homogeneous vectors, with the degree of each echelon
/// basis row. The reduced echelon basis of a graded subspace is itself
/// homogeneous, so homogeneity is checked row by row.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  /// Throws InputError if some echelon row mixes degrees.
  GradedSubspace(Subspace space, const std::vector<Morphism>& ambient_degrees);

  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::size_t ambient() const { return space_.ambient(); }
  const std::vector<Morphism>& degrees() const { return degrees_; }
  std::map<Morphism, std::size_t> dims_by_degree() const;

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.space_ == b.space_;
  }

 private:
  Subspace space_;
  std::vector<Morphism> degrees_;
};

/// Degree of a nonzero homogeneous vector; nullopt for zero or mixed support.
std::optional<Morphism> homogeneous_degree(const std::vector<Morphism>& degrees,
                                           std::span<const Elem> v);

/// An object-unital groupoid-graded F_p-algebra in structure-constant form.
///
/// products[i*dim + j] holds the coordinates of b_i * b_j. units maps each
/// object e to the coordinates of 1_e; objects absent from the map have 1_e = 0.
class GradedRing {
 public:
  GradedRing(Groupoid groupoid, std::uint32_t p, std::vector<BasisElement> basis,
             std::vector<Vector> products, std::map<Morphism, Vector> units);

  const Groupoid& groupoid() const { return groupoid_; }
  std::uint32_t prime() const { return field_.p(); }
  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  Morphism degree(std::size_t i) const { return basis_.at(i).degree; }
  const std::vector<Morphism>& degrees() const { return degrees_; }
  std::size_t index_of(const std::string& name) const;

  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vector multiply(const Vector& a, const Vector& b) const;
  /// a * b_k.
  Vector product_vector(const Vector& a, std::size_t k) const { return vec_times(a, right_mult_[k]); }

  /// Row i is b_i * b_j.
  const Matrix& right_mult(std::size_t j) const { return right_mult_[j]; }
  /// Row j is b_i * b_j.
  const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
  const std::vector<Matrix>& right_mults() const { return right_mult_; }
  /// Matrix of v -> v*a.
  Matrix right_mult_by(const Vector& a) const;
  /// Matrix of v -> a*v.
  Matrix left_mult_by(const Vector& a) const;

  const std::map<Morphism, Vector>& units() const { return units_; }
  Vector unit(Morphism e) const;
  /// Objects whose unit is nonzero, in index order (Gamma_0'(R)).
  std::vector<Morphism> support_objects() const;

  std::vector<std::size_t> indices_of_degree(Morphism g) const;
  Subspace component(Morphism g) const;
  /// Degrees carrying at least one basis vector, sorted.
  std::vector<Morphism> support() const;

  ValidationReport validate() const;

  friend bool operator==(const GradedRing& a, const GradedRing& b) {
    return a.groupoid_ == b.groupoid_ && a.prime() == b.prime() && a.basis_ == b.basis_ &&
           a.products_ == b.products_ && a.units_ == b.units_;
  }

 private:
  Groupoid groupoid_;
  PrimeField field_;
  std::vector<BasisElement> basis_;
  std::vector<Morphism> degrees_;
  std::vector<Vector> products_;
  std::map<Morphism, Vector> units_;
  std::vector<Matrix> right_mult_;
  std::vector<Matrix> left_mult_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

// ------------------------------------------------------------------ algebras
//
// Unital algebras are GradedRings over the one-morphism groupoid.

bool is_ungraded(const GradedRing& a);

/// products[i][j] = coordinates of b_i*b_j.
GradedRing make_algebra(std::uint32_t p, std::vector<std::string> names,
                        const std::vector<std::vector<Vector>>& products, Vector unit);
GradedRing field_algebra(std::uint32_t p);
/// F_p[x]/(x^k) with basis 1, x, ..., x^{k-1}.
GradedRing truncated_polynomial_algebra(std::uint32_t p, std::size_t k);
/// M_n(F_p) as an ungraded algebra.
GradedRing matrix_algebra(std::uint32_t p, std::size_t n);

// ------------------------------------------------------------------ posets

/// Finite partial order; leq[i][j] means labels[i] <= labels[j].
struct Poset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);
  /// Reflexive-transitive closure of the cover relations (lower, upper).
  static Poset from_hasse(std::vector<std::string> labels,
                          const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  std::size_t size() const { return labels.size(); }
  /// Throws InputError unless reflexive, antisymmetric and transitive.
  void validate() const;
  bool is_total() const;
};

// ------------------------------------------------------------------ builders

/// M_I(A), graded by the pair groupoid on I with M_I(A)_(i,j) = A E_ij.
GradedRing build_pair_matrix_ring(const GradedRing& a, const std::vector<std::string>& index);
GradedRing build_pair_matrix_ring(const GradedRing& a, std::size_t n);

/// UT_I(A): the subring of M_I(A) supported on pairs i <= j.
GradedRing build_ut(const GradedRing& a, const Poset& poset);

/// M_n(A) graded by the pair groupoid on `block_labels`, where matrix index k
/// lies in block block_of[k] and E_kl has degree (block_of[k], block_of[l]).
GradedRing build_block_matrix_ring(const GradedRing& a, const std::vector<std::string>& block_labels,
                                   const std::vector<std::size_t>& block_of);

/// Groupoid algebra F_p[G]: one basis vector per morphism, products follow
/// composition (zero when undefined), 1_e = e.
GradedRing groupoid_algebra(const Groupoid& g, std::uint32_t p);

/// A right module over an ungraded algebra: action[k] is the matrix of m -> m*a_k.
struct AlgebraModule {
  std::string name;
  std::vector<Matrix> action;
  std::size_t dim() const { return action.empty() ? 0 : action.front().rows(); }
};

/// Throws InputError unless the action satisfies A's multiplication and unit.
void validate_algebra_module(const GradedRing& a, const AlgebraModule& m);

/// A-module endomorphism-style maps Hom_A(src, dst) as matrices acting on rows.
std::vector<Matrix> algebra_module_homs(const GradedRing& a, const AlgebraModule& src,
                                        const AlgebraModule& dst);

/// Category ring: component (i,j) is Hom_A(M_j, M_i), products are composition.
/// Basis of component (i,j) is algebra_module_homs(a, modules[j], modules[i]).
GradedRing build_category_ring(const GradedRing& a, const std::vector<AlgebraModule>& modules);

/// Standard modules over F_p[x]/(x^k).
AlgebraModule free_module(const GradedRing& a, std::size_t rank, std::string name = "");
/// F_p[x]/(x^j) as a module over F_p[x]/(x^k), j <= k.
AlgebraModule truncated_cyclic_module(const GradedRing& poly, std::size_t j, std::string name = "");

// ------------------------------------------------------------------ operations

/// Homogeneous subspace 1_e R 1_f.
Subspace corner(const GradedRing& r, Morphism e, Morphism f);
/// R_Delta: basis elements with source and target in `objects`, regraded over
/// the full subgroupoid on those objects.
GradedRing full_subring(const GradedRing& r, const std::vector<Morphism>& objects);

enum class Side { Right, Left, TwoSided };

/// Smallest subspace containing `gens` and closed under multiplication by
/// ring basis elements on the given side(s).
Subspace ideal_closure(const GradedRing& r, const std::vector<Vector>& gens, Side side);
bool is_ideal(const GradedRing& r, const Subspace& s, Side side);

/// Quotient by a two-sided graded ideal. The basis is the complement of the
/// ideal's pivots; the projection matrix has one row per basis vector of R.
GradedRing quotient_ring(const GradedRing& r, const Subspace& ideal);
Matrix quotient_projection(const Subspace& sub);

/// Products reversed, degree g replaced by g^{-1}.
GradedRing opposite_ring(const GradedRing& r);

/// Two-sided graded inverse b of degree g^{-1}, if any. Throws InputError on
/// non-homogeneous or zero input.
std::optional<Vector> gr_inverse(const GradedRing& r, const Vector& a);

/// Right inverse of x inside R_e (both factors in R_e), if any.
std::optional<Vector> right_inverse_in_component(const GradedRing& r, Morphism e, const Vector& x);

/// Same groupoid, degrees, structure constants and units; basis names ignored.
bool same_structure(const GradedRing& a, const GradedRing& b);

/// Ungraded algebra R_e (component of an object) with basis from R.
GradedRing component_algebra(const GradedRing& r, Morphism e);

}  // namespace grgrad
