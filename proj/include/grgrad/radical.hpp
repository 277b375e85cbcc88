#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grgrad/module.hpp"

namespace grgrad {

/// Default enumeration budget (vectors per degree, lattice elements, oracle pairs).
inline constexpr std::uint64_t kDefaultBudget = 1u << 16;

// ------------------------------------------------------------------ lattice oracle

struct SubmoduleLattice {
  /// Every graded submodule, sorted by dimension then basis.
  std::vector<Subspace> elements;
  /// Cyclic submodules spin(v), v nonzero homogeneous.
  std::vector<Subspace> cyclic;
  /// Indices of maximal proper elements.
  std::vector<std::size_t> maximal;
  /// Indices of minimal nonzero elements.
  std::vector<std::size_t> minimal;

  std::size_t size() const { return elements.size(); }
  /// Intersection of the maximal elements (M itself when there are none).
  Subspace radical() const;
  /// Sum of the minimal elements.
  Subspace socle() const;
};

/// Nonzero homogeneous vectors up to scalars, degree by degree in lexicographic
/// order. Throws ResourceError when some p^{dim M_gamma} exceeds the budget.
std::vector<Vector> homogeneous_representatives(const GradedModule& m, std::uint64_t budget);

/// All graded submodules, by spinning every homogeneous vector and closing
/// under sums. The number of elements is also capped by `budget`.
SubmoduleLattice submodule_lattice(const GradedModule& m, std::uint64_t budget = kDefaultBudget);

/// soc(M) as the sum of minimal cyclic submodules (no lattice closure).
Subspace socle_by_spinning(const GradedModule& m, std::uint64_t budget = kDefaultBudget);

/// Distinct cyclic submodules spin(v), sorted by dimension then basis.
std::vector<Subspace> cyclic_submodules(const GradedModule& m, std::uint64_t budget = kDefaultBudget);
/// The gr-simple submodules: cyclic submodules containing no smaller nonzero one.
std::vector<Subspace> simple_submodules(const GradedModule& m, std::uint64_t budget = kDefaultBudget);

/// True when every degree slice of M is enumerable within the budget.
bool lattice_within_budget(const GradedModule& m, std::uint64_t budget);

// ------------------------------------------------------------------ rings

struct RadicalReport {
  GradedSubspace subspace;
  /// Engine that produced `subspace`.
  std::string engine;
  /// Independent engines that reproduced it.
  std::vector<std::string> confirmed_by;
  /// Engines that were not run, with the reason.
  std::vector<std::string> skipped;

  std::map<Morphism, std::size_t> dims() const { return subspace.dims_by_degree(); }
  std::size_t dim() const { return subspace.dim(); }
  bool oracle_confirmed() const { return !confirmed_by.empty(); }
};

/// rad^gr(R) = (+)_e rad(R(e)).  Uses the lattice oracle when every R(e) is
/// within budget and the trace-chain engine otherwise; each result is
/// cross-checked by the other when possible and verified two-sided.
RadicalReport rad_gr_ring(const GradedRing& r, std::uint64_t budget = kDefaultBudget);
/// soc^gr(R_R), by minimal cyclic right ideals or as the left annihilator of J.
RadicalReport soc_gr_ring(const GradedRing& r, std::uint64_t budget = kDefaultBudget);

/// rad^gr(R) from the lattice of each R(e); throws ResourceError past budget.
Subspace lattice_ring_radical(const GradedRing& r, std::uint64_t budget = kDefaultBudget);
Subspace lattice_ring_socle(const GradedRing& r, std::uint64_t budget = kDefaultBudget);

/// {a in R_gamma : 1_{r(gamma)} - ax right invertible in R_{r(gamma)} for all x in R_{gamma^-1}},
/// by exhaustive enumeration (p^{dim R_gamma + dim R_{gamma^-1}} pairs).
Subspace carac_component_oracle(const GradedRing& r, Morphism gamma, std::uint64_t budget = kDefaultBudget);

/// Dickson: rad(A) = {x : tr(L_{xy}) = 0 for all y}. Requires p > dim A
/// (throws InputError otherwise). A must be ungraded.
Subspace trace_form_radical(const GradedRing& a);

/// Radical of an ungraded algebra for any p, by the chain of ideals
/// I_i = {a in I_{i-1} : g_i(ab) = 0 for all b}, g_i(x) = tr(lift(x)^{p^i}) / p^i mod p.
Subspace trace_chain_radical(const GradedRing& a);

/// rad(A) by exhaustive quasi-regularity over A x A.
Subspace quasi_regular_radical(const GradedRing& a, std::uint64_t budget = kDefaultBudget);

/// J from the diagonal radicals: J_e = rad_e (given in R's coordinates) and
/// J_gamma = {a in R_gamma : a R_{gamma^-1} inside J_{r(gamma)}}.
Subspace lift_diagonal_radical(const GradedRing& r, const std::map<Morphism, Subspace>& diagonal);
/// lift_diagonal_radical with each rad(R_e) from trace_chain_radical.
Subspace trace_chain_ring_radical(const GradedRing& r);

/// Span of all products ab, a in x, b in y.
Subspace ideal_product(const GradedRing& r, const Subspace& x, const Subspace& y);
Subspace ideal_power(const GradedRing& r, const Subspace& j, std::size_t n);

// ------------------------------------------------------------------ modules

/// M*J.
GradedSubmodule rad_gr_module(const GradedModule& m, const Subspace& j);
/// {m : mJ = 0}.
GradedSubmodule soc_gr_module(const GradedModule& m, const Subspace& j);
GradedSubmodule rad_gr_module(const GradedModule& m, std::uint64_t budget = kDefaultBudget);
GradedSubmodule soc_gr_module(const GradedModule& m, std::uint64_t budget = kDefaultBudget);
/// {m : m x = 0 for all x in I}.
Subspace annihilated_by(const GradedModule& m, const Subspace& ideal);

struct LoewySeries {
  /// soc^0 = 0, soc^1, ..., soc^n = M.
  std::vector<GradedSubmodule> terms;
  /// Gamma_0'-support of soc^{k+1}/soc^k.
  std::vector<std::vector<Morphism>> profiles;
  /// Engine used for the socles of the quotients.
  std::string socle_engine;
  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

/// Iterated soc of M/soc^k, each socle computed on the quotient's own
/// presentation (spinning within budget, annihilator of J otherwise).
std::vector<GradedSubmodule> loewy_by_socles(const GradedModule& m, const Subspace& j,
                                             std::uint64_t budget, std::string* engine = nullptr);
/// {m : m J^n = 0}, n = 0, 1, ... until M.
std::vector<GradedSubmodule> loewy_by_annihilators(const GradedModule& m, const Subspace& j);
/// Both computations; throws ConsistencyError when they differ.
LoewySeries loewy_series(const GradedModule& m, const Subspace& j, std::uint64_t budget = kDefaultBudget);
LoewySeries loewy_series(const GradedModule& m, std::uint64_t budget = kDefaultBudget);

/// M, MJ, MJ^2, ... ending with the first repeated (for finite R: zero) term.
std::vector<GradedSubmodule> radical_series(const GradedModule& m, const Subspace& j);

}  // namespace grgrad
