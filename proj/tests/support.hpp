#pragma once

// Shared fixtures: a catalog of small graded rings.

#include <string>
#include <vector>

#include "grgrad/random.hpp"
#include "grgrad/ring.hpp"

namespace grgrad::testing {

struct NamedRing {
  std::string name;
  RingPtr ring;
};

inline RingPtr share(GradedRing r) { return std::make_shared<const GradedRing>(std::move(r)); }

inline Poset v_poset() {
  // 1 < 3, 2 < 3
  return Poset::from_hasse({"1", "2", "3"}, {{0, 2}, {1, 2}});
}

inline Poset diamond_poset() {
  // 1 < 2, 1 < 3, 2 < 4, 3 < 4
  return Poset::from_hasse({"1", "2", "3", "4"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

/// M_3(F_2) graded by the pair groupoid on {1,2} with blocks {1,2},{3}.
inline GradedRing dedekind_ring() { return build_block_matrix_ring(field_algebra(2), {"1", "2"}, {0, 0, 1}); }

inline GradedRing category_ring_a_top(std::uint32_t p) {
  const GradedRing a = truncated_polynomial_algebra(p, 2);
  return build_category_ring(a, {truncated_cyclic_module(a, 2), truncated_cyclic_module(a, 1)});
}

/// Builder outputs whose degree components are small enough for every oracle.
inline std::vector<NamedRing> base_rings() {
  std::vector<NamedRing> out;
  auto add = [&](std::string n, GradedRing r) { out.push_back({std::move(n), share(std::move(r))}); };
  add("F_5", field_algebra(5));
  add("F_2[x]/(x^2)", truncated_polynomial_algebra(2, 2));
  add("F_3[x]/(x^3)", truncated_polynomial_algebra(3, 3));
  add("F_2[x]/(x^4)", truncated_polynomial_algebra(2, 4));
  add("M_2(F_3) ungraded", matrix_algebra(3, 2));
  add("M_2(F_2)", build_pair_matrix_ring(field_algebra(2), 2));
  add("M_2(F_3)", build_pair_matrix_ring(field_algebra(3), 2));
  add("M_3(F_2)", build_pair_matrix_ring(field_algebra(2), 3));
  add("M_2(F_2[x]/(x^2))", build_pair_matrix_ring(truncated_polynomial_algebra(2, 2), 2));
  add("M_3(F_5[x]/(x^2))", build_pair_matrix_ring(truncated_polynomial_algebra(5, 2), 3));
  for (std::uint32_t q : {2u, 3u, 5u})
    for (std::size_t n : {2u, 3u, 4u})
      add("UT_" + std::to_string(n) + "(F_" + std::to_string(q) + ")", build_ut(field_algebra(q), Poset::chain(n)));
  add("UT_antichain2(F_2)", build_ut(field_algebra(2), Poset::antichain(2)));
  add("UT_V(F_2)", build_ut(field_algebra(2), v_poset()));
  add("UT_diamond(F_3)", build_ut(field_algebra(3), diamond_poset()));
  add("UT_2(F_2[x]/(x^2))", build_ut(truncated_polynomial_algebra(2, 2), Poset::chain(2)));
  add("UT_2(F_5[x]/(x^2))", build_ut(truncated_polynomial_algebra(5, 2), Poset::chain(2)));
  add("F_2[Z/2] graded", groupoid_algebra(group_groupoid(cyclic_group_table(2)), 2));
  add("F_3[Z/3] graded", groupoid_algebra(group_groupoid(cyclic_group_table(3)), 3));
  add("F_2[{1,2}xZ/2x{1,2}]", groupoid_algebra(product_groupoid({"1", "2"}, cyclic_group_table(2)), 2));
  add("dedekind M_3(F_2) blocks [1,1,2]", dedekind_ring());
  add("R_C{A,A/(x)} over F_5[x]/(x^2)", category_ring_a_top(5));
  add("R_C{A,A/(x)} over F_2[x]/(x^2)", category_ring_a_top(2));
  {
    const GradedRing a = truncated_polynomial_algebra(3, 2);
    add("R_C{A} over F_3[x]/(x^2)", build_category_ring(a, {free_module(a, 1)}));
  }
  return out;
}

/// base_rings plus one random graded quotient of each ring that has one.
inline std::vector<NamedRing> test_rings(std::uint64_t seed = 7) {
  auto out = base_rings();
  Rng rng(seed);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (out[i].ring->dim() < 2) continue;
    try {
      out.push_back({out[i].name + " / random ideal", share(random_graded_quotient(*out[i].ring, rng))});
    } catch (const std::exception&) {
    }
  }
  return out;
}

}  // namespace grgrad::testing
