#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grgrad/radical.hpp"

namespace grgrad {

// ------------------------------------------------------------------ composition series

struct CompositionFactor {
  /// M_j / M_{j-1} on its own presentation.
  GradedModule module;
  /// d(gamma) over the factor's degrees, sorted.
  std::vector<Morphism> objects;
  /// Carrying object: d of the factor's lowest degree.
  Morphism object;
  std::map<Morphism, std::size_t> dims;
};

struct CompositionSeries {
  /// 0 = M_0 < M_1 < ... < M_n = M.
  std::vector<GradedSubmodule> chain;
  std::vector<CompositionFactor> factors;
  std::size_t length() const { return factors.size(); }
};

/// Peels a minimal cyclic graded submodule of M/M_j at each step. Ties in
/// spin dimension go to the lexicographically first homogeneous vector when
/// seed == 0; other seeds pick uniformly among the tied candidates.
CompositionSeries composition_series(const GradedModule& m, std::uint64_t seed = 0,
                                     std::uint64_t budget = kDefaultBudget);
std::size_t gr_length(const GradedModule& m, std::uint64_t budget = kDefaultBudget);
/// e -> c_gr(M(e)) for every object e of the groupoid.
std::map<Morphism, std::size_t> gamma0_length(const GradedModule& m, std::uint64_t budget = kDefaultBudget);

/// Same length and a bijection of factors matching gr-isomorphism classes.
bool jordan_holder_equivalent(const CompositionSeries& a, const CompositionSeries& b,
                              std::uint64_t budget = kDefaultBudget);
/// Gr-isomorphism of gr-simple modules: dim Homgr > 0 after the degree pre-filter.
bool simple_modules_isomorphic(const GradedModule& s, const GradedModule& t);

// ------------------------------------------------------------------ semisimple / semilocal

struct SemisimpleVerdict {
  bool semisimple = false;
  RadicalReport radical;
  /// soc^gr(R) = R, checked independently.
  bool socle_is_whole = false;
  /// For gr-semisimple R: minimal right ideals whose direct sum is R.
  std::vector<GradedSubspace> decomposition;
};
/// rad^gr(R) = 0; throws ConsistencyError when soc^gr(R) = R disagrees.
SemisimpleVerdict is_gr_semisimple(const GradedRing& r, std::uint64_t budget = kDefaultBudget);

struct SemilocalVerdict {
  bool semilocal = false;
  /// R / rad^gr(R) is gr-semisimple.
  bool via_quotient = false;
  /// Every R_e / rad(R_e) is semisimple.
  bool via_components = false;
  std::map<Morphism, bool> per_object;
};
/// Both routes; throws ConsistencyError when they disagree.
SemilocalVerdict is_gr_semilocal(const GradedRing& r, std::uint64_t budget = kDefaultBudget);

// ------------------------------------------------------------------ Fitting

struct FittingResult {
  std::size_t n = 0;
  GradedSubmodule kernel;  // ker g^n
  GradedSubmodule image;   // im g^n
  bool direct_sum = false;
  bool bijective_on_image = false;
  bool injective_on_component = false;
  bool surjective_onto_component = false;
  /// h in END(M)_{gamma^-1} with gh = hg = 1_e, when g is gr-invertible.
  std::optional<Matrix> inverse;
};

/// g in END(M)_gamma with d(gamma) = r(gamma); throws InputError otherwise.
FittingResult fitting(const GradedModule& m, const Matrix& g, Morphism gamma);
std::optional<Matrix> gr_inverse_endomorphism(const GradedModule& m, const Matrix& g, Morphism gamma);

// ------------------------------------------------------------------ superfluous / essential

struct PredicateVerdict {
  bool value = false;
  /// The lattice oracle agreed (false when it was over budget).
  bool verified = false;
};
PredicateVerdict is_gr_superfluous(const GradedModule& m, const Subspace& n, std::uint64_t budget = kDefaultBudget);
PredicateVerdict is_gr_essential(const GradedModule& m, const Subspace& n, std::uint64_t budget = kDefaultBudget);
bool superfluous_in_lattice(const SubmoduleLattice& lat, const Subspace& n);
bool essential_in_lattice(const SubmoduleLattice& lat, const Subspace& n);

// ------------------------------------------------------------------ Baer

struct BaerResult {
  bool injective = true;
  std::size_t ideals_checked = 0;
  std::optional<Subspace> witness_ideal;
  std::optional<Morphism> witness_degree;
  /// A map U -> E of the witness degree with no extension to R.
  std::optional<Matrix> witness_map;
};
/// Extends a basis of HOM(U,E)_gamma to R for every graded right ideal U and
/// every gamma.
BaerResult baer_gr_injective(const GradedModule& e, std::uint64_t budget = kDefaultBudget);

// ------------------------------------------------------------------ projective category rings

struct CategoryComponentCheck {
  Morphism degree;
  Subspace engine;        // rad^gr(R_C)_(i,j)
  Subspace superfluous;   // {g : im g inside rad(M_i)}
};
struct CategoryRadicalCheck {
  bool equal = true;
  std::string engine;
  std::vector<CategoryComponentCheck> components;
};
/// Compares rad^gr(R_C) with {g : im g inside rad(codomain)} componentwise.
CategoryRadicalCheck projective_category_radical_check(const GradedRing& a, const std::vector<AlgebraModule>& modules,
                                                       std::uint64_t budget = kDefaultBudget);

// ------------------------------------------------------------------ Dedekind finiteness

struct DedekindFailure {
  Morphism gamma;
  Vector a;  // degree gamma
  Vector b;  // degree gamma^-1, ab = 1_{r(gamma)}, ba != 1_{d(gamma)}
};
/// Every homogeneous pair (a,b) in non-identity components violating
/// ab = 1 => ba = 1.
std::vector<DedekindFailure> dedekind_failures(const GradedRing& r, std::uint64_t budget = kDefaultBudget);

}  // namespace grgrad
