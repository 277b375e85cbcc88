#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grgrad/module.hpp"

namespace grgrad {

// ------------------------------------------------------------------ posets

/// Element w*a + n of an ordinal descriptor.
struct OrdinalElement {
  std::size_t a = 0;
  std::size_t n = 0;
  friend auto operator<=>(const OrdinalElement&, const OrdinalElement&) = default;
};
std::string ordinal_name(const OrdinalElement& x);
/// Parses "3", "w", "w+2", "w*2+1"; throws InputError.
OrdinalElement parse_ordinal_element(const std::string& s);

/// A finite Hasse diagram or an ordinal w*K + M, optionally order-reversed.
///
/// Grammar: `finite:<items>` with comma-separated items `a<b<c` or bare `a`,
/// or `ordinal:w*K+M[:reversed]` (also `w+M`, `w*K`, `M`).
struct PosetSpec {
  enum class Kind { Finite, Ordinal };
  Kind kind = Kind::Finite;
  Poset finite;
  std::size_t omega = 0;  // K
  std::size_t tail = 0;   // M
  bool reversed = false;

  static PosetSpec parse(const std::string& text);
  static PosetSpec from_poset(Poset p);
  static PosetSpec ordinal(std::size_t k, std::size_t m, bool reversed = false);

  bool is_finite() const { return kind == Kind::Finite || omega == 0; }
  bool is_total() const;
  /// Canonical descriptor text.
  std::string to_string() const;
  /// The order-reversed poset.
  PosetSpec opposite() const;
  /// x < y in this poset (ordinal kind only).
  bool less(const OrdinalElement& x, const OrdinalElement& y) const;
  bool contains(const OrdinalElement& x) const;
};

// ------------------------------------------------------------------ UT classification

enum class ChainSide { Right = 0, Left = 1 };
enum class ChainLevel { Gr = 0, StronglyGamma0 = 1, Gamma0 = 2 };
enum class ChainCondition { Artinian = 0, Noetherian = 1 };

std::string to_string(ChainSide s);
std::string to_string(ChainLevel l);
std::string to_string(ChainCondition c);

struct CoefficientFlags {
  bool right_artinian = true;
  bool right_noetherian = true;
  bool left_artinian = true;
  bool left_noetherian = true;
};

struct VerdictEntry {
  bool holds = true;
  /// False for "holds" answers on non-total posets, where only failures are certified.
  bool certain = true;
  /// Item 1-4 of the triangular criterion whose chain shape refutes it (0: none or coefficients).
  int item = 0;
  std::string witness;
};

struct ChainVerdict {
  PosetSpec poset;
  /// [side][level][condition]
  std::array<std::array<std::array<VerdictEntry, 2>, 3>, 2> entries{};
  bool complete = true;

  const VerdictEntry& at(ChainSide s, ChainLevel l, ChainCondition c) const {
    return entries[static_cast<int>(s)][static_cast<int>(l)][static_cast<int>(c)];
  }
  VerdictEntry& at(ChainSide s, ChainLevel l, ChainCondition c) {
    return entries[static_cast<int>(s)][static_cast<int>(l)][static_cast<int>(c)];
  }
  bool holds(ChainSide s, ChainLevel l, ChainCondition c) const { return at(s, l, c).holds; }
};

/// Item of the triangular criterion: 1 right artinian, 2 right noetherian,
/// 3 left artinian, 4 left noetherian.
int criterion_item(ChainSide s, ChainCondition c);

/// True when I contains the infinite chain shape of the given item.
bool has_infinite_chain(const PosetSpec& i, int item);

ChainVerdict classify_ut(const PosetSpec& i, const CoefficientFlags& a = {});

// ------------------------------------------------------------------ witnesses

struct WitnessChain {
  int item = 0;
  ChainSide side = ChainSide::Right;
  /// The chain of one-sided ideals grows (true) or shrinks along the list.
  bool ascending = false;
  std::string base;
  /// Indices j_1, j_2, ... (or i_1, i_2, ...).
  std::vector<std::string> indices;
  /// "E(i,j)R" or "RE(i,j)".
  std::vector<std::string> ideals;
  /// Labels of the finite truncation, in increasing order.
  std::vector<std::string> truncation;
  std::vector<std::size_t> ideal_dims;
  bool certified = false;

  std::string to_string() const;
};

/// Explicit strict chain for a failing item, certified on UT over the finite
/// chain of all named indices (coefficients F_2). `base` defaults to the
/// least admissible base point. Throws InputError when the item does not fail.
WitnessChain witness_chain(const PosetSpec& i, int item, std::size_t length,
                           const std::optional<std::string>& base = std::nullopt);

// ------------------------------------------------------------------ strong profiles

/// gr-length of a component; nullopt is infinite length, with the chain
/// conditions it still satisfies.
struct ComponentLength {
  std::optional<std::size_t> length;
  bool artinian = false;
  bool noetherian = false;
  static ComponentLength finite(std::size_t n) { return {n, true, true}; }
  static ComponentLength infinite(bool art = false, bool noeth = false) { return {std::nullopt, art, noeth}; }
};

/// Object index -> gr-length of M(e_n) over objects n = 0, 1, ...
struct FamilyProfile {
  enum class Tail { None, Constant, Identity };
  /// Values at finitely many indices; with Tail::None these are the whole support.
  std::map<std::size_t, ComponentLength> exceptions;
  Tail tail = Tail::None;
  std::size_t constant = 0;

  static FamilyProfile constant_profile(std::size_t c);
  static FamilyProfile identity_profile();
  static FamilyProfile finite_profile(std::vector<std::size_t> lengths);
  /// Length at index n (tail value outside the exceptions; 0 means no support).
  ComponentLength at(std::size_t n) const;
};

struct StrongVerdict {
  bool gamma0_artinian = false, gamma0_noetherian = false;
  bool strongly_artinian = false, strongly_noetherian = false;
  bool gr_artinian = false, gr_noetherian = false;
};
StrongVerdict strong_classify(const FamilyProfile& profile);

// ------------------------------------------------------------------ tight chains

/// Gamma_0'-profiles of successive quotients are nested. `chain` is
/// M_1 >= M_2 >= ... (descending) or M_1 <= M_2 <= ... (ascending);
/// throws InputError when it is not nested.
bool is_tight(const GradedModule& m, const std::vector<Subspace>& chain, bool descending);

}  // namespace grgrad
