#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grgrad/ring.hpp"

namespace grgrad {

/// A graded right module with a homogeneous basis.
///
/// action[j] is the matrix of m -> m*b_j for the ring basis element b_j, so
/// row i of action[j] holds the coordinates of m_i*b_j.
class GradedModule {
 public:
  GradedModule(RingPtr ring, std::vector<BasisElement> basis, std::vector<Matrix> action);

  const GradedRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::uint32_t prime() const { return ring_->prime(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  Morphism degree(std::size_t i) const { return basis_.at(i).degree; }
  const std::vector<Morphism>& degrees() const { return degrees_; }

  const Matrix& action(std::size_t j) const { return action_[j]; }
  const std::vector<Matrix>& actions() const { return action_; }
  /// Matrix of m -> m*a for a ring element a.
  Matrix action_by(const Vector& a) const;
  Vector act(const Vector& m, const Vector& a) const;

  std::vector<std::size_t> indices_of_degree(Morphism g) const;
  /// Degrees carrying at least one basis vector, sorted.
  std::vector<Morphism> support() const;

  ValidationReport validate() const;

  friend bool operator==(const GradedModule& a, const GradedModule& b) {
    return *a.ring_ == *b.ring_ && a.basis_ == b.basis_ && a.action_ == b.action_;
  }

 private:
  RingPtr ring_;
  std::vector<BasisElement> basis_;
  std::vector<Morphism> degrees_;
  std::vector<Matrix> action_;
};

/// Graded submodules are graded subspaces of the module's coordinate space.
using GradedSubmodule = GradedSubspace;

GradedModule regular_module(const RingPtr& r);
GradedModule zero_module(const RingPtr& r);

/// M(e): basis vectors whose degree has range e.
GradedSubmodule component_module(const GradedModule& m, Morphism e);
/// Objects e with M(e) != 0.
std::vector<Morphism> gamma0_support(const GradedModule& m);
/// Gamma_0'-support of the subquotient top/bottom.
std::vector<Morphism> gamma0_support(const GradedModule& m, const Subspace& top, const Subspace& bottom);

/// Smallest graded submodule containing the (homogeneous) generators.
GradedSubmodule spin(const GradedModule& m, const std::vector<Vector>& generators);
/// spin without the homogeneity check or the graded wrapper.
Subspace spin_space(const GradedModule& m, const std::vector<Vector>& generators);
bool is_submodule(const GradedModule& m, const Subspace& s);
/// Validates s as a graded submodule.
GradedSubmodule submodule(const GradedModule& m, const Subspace& s);

/// N as a module in its own right; basis = echelon basis of N.
GradedModule submodule_as_module(const GradedModule& m, const Subspace& n);

struct Quotient {
  GradedModule module;
  /// One row per basis vector of M: its image in the quotient.
  Matrix projection;
  /// Index in M of each quotient basis vector (coset representatives).
  std::vector<std::size_t> representatives;
  /// Embeds a quotient vector into M via the representatives.
  Vector lift(const Vector& q) const;
};
Quotient quotient(const GradedModule& m, const Subspace& n);

struct DirectSum {
  GradedModule module;
  /// First basis index of each summand.
  std::vector<std::size_t> offsets;
};
DirectSum direct_sum(const std::vector<GradedModule>& summands);

struct Shift {
  GradedModule module;
  /// Index in M of each basis vector of the shift.
  std::vector<std::size_t> kept;
};
/// M(sigma): keeps the vectors of degree delta with r(delta) = r(sigma) and
/// gives them degree sigma^{-1}delta.
Shift shift(const GradedModule& m, Morphism sigma);
/// Image of a subspace of M under the relabeling of shift(m, sigma).
Subspace shift_subspace(const Shift& s, const Subspace& sub);

/// Basis of HOM_R(M,N)_gamma: maps m -> m*G with G(M_sigma) in N_{gamma sigma}.
std::vector<Matrix> hom_gamma(const GradedModule& m, const GradedModule& n, Morphism gamma);
/// Basis of Homgr(M,N): degree-preserving module maps.
std::vector<Matrix> homgr(const GradedModule& m, const GradedModule& n);
/// True when G is an R-linear map of degree gamma.
bool is_hom_of_degree(const GradedModule& m, const GradedModule& n, const Matrix& g, Morphism gamma);
bool is_gr_hom(const GradedModule& m, const GradedModule& n, const Matrix& g);

struct IsoResult {
  bool isomorphic = false;
  std::optional<Matrix> witness;
};
/// Searches Homgr(M,N) for an invertible element. Coefficient vectors are
/// tried in lexicographic order after the basis maps themselves; throws
/// ResourceError when p^{dim Homgr} exceeds `budget` and nothing was found.
/// With assume_simple, a nonzero gr-hom is accepted as the witness.
IsoResult is_gr_isomorphic(const GradedModule& m, const GradedModule& n, std::uint64_t budget,
                           bool assume_simple = false);

/// Projection onto M(e) as an endomorphism (1_e in END(M)).
Matrix component_projection(const GradedModule& m, Morphism e);

}  // namespace grgrad
