#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "grgrad/errors.hpp"
#include "grgrad/radical.hpp"
#include "grgrad/random.hpp"
#include "support.hpp"

using namespace grgrad;
using grgrad::testing::share;

namespace {

Subspace strict_upper(const GradedRing& r) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const Morphism d = r.degree(i);
    if (!r.groupoid().is_object(d)) vs.push_back(unit_vector(r.dim(), i));
  }
  return Subspace::span(r.prime(), r.dim(), vs);
}

}  // namespace

TEST_CASE("radical of a field and of a truncated polynomial ring") {
  CHECK(rad_gr_ring(field_algebra(7)).dim() == 0);
  const GradedRing a = truncated_polynomial_algebra(3, 3);
  const RadicalReport rep = rad_gr_ring(a);
  CHECK(rep.dim() == 2);
  CHECK(rep.oracle_confirmed());
  CHECK(trace_chain_radical(a) == rep.subspace.space());
}

TEST_CASE("trace form needs p above the dimension") {
  CHECK_THROWS_AS(trace_form_radical(truncated_polynomial_algebra(2, 2)), InputError);
  CHECK(trace_form_radical(truncated_polynomial_algebra(5, 3)).dim() == 2);
}

TEST_CASE("UT over chains: radical is the strict upper part") {
  for (std::uint32_t q : {2u, 3u}) {
    const GradedRing r = build_ut(field_algebra(q), Poset::chain(3));
    CHECK(rad_gr_ring(r).subspace.space() == strict_upper(r));
    CHECK(lattice_ring_radical(r) == strict_upper(r));
    CHECK(trace_chain_ring_radical(r) == strict_upper(r));
  }
}

TEST_CASE("UT over a non-total poset") {
  const GradedRing r = build_ut(field_algebra(2), grgrad::testing::v_poset());
  CHECK(rad_gr_ring(r).subspace.space() == strict_upper(r));
}

TEST_CASE("pair matrix ring: radical is M(rad A)") {
  const GradedRing r = build_pair_matrix_ring(truncated_polynomial_algebra(2, 2), 2);
  const RadicalReport rep = rad_gr_ring(r);
  CHECK(rep.dim() == 4);
  for (const auto& [g, d] : rep.dims()) CHECK(d == 1);
}

TEST_CASE("carac oracle matches on small components") {
  const GradedRing r = build_ut(field_algebra(3), Poset::chain(2));
  const Subspace j = rad_gr_ring(r).subspace.space();
  for (std::uint32_t m = 0; m < r.groupoid().size(); ++m) {
    const Morphism g{m};
    CHECK(carac_component_oracle(r, g) == j.intersect(r.component(g)));
  }
}

TEST_CASE("quasi-regular radical agrees with the trace chain") {
  for (const auto& a : {truncated_polynomial_algebra(2, 3), matrix_algebra(2, 2), field_algebra(3)})
    CHECK(quasi_regular_radical(a) == trace_chain_radical(a));
}

TEST_CASE("socle of UT_3 regular module") {
  const GradedRing r = build_ut(field_algebra(2), Poset::chain(3));
  const RadicalReport soc = soc_gr_ring(r);
  // Right socle: the last column, E13, E23, E33.
  CHECK(soc.dim() == 3);
  CHECK(soc.subspace.space() == lattice_ring_socle(r));
}

TEST_CASE("lattice of UT_2 regular module") {
  const RingPtr r = share(build_ut(field_algebra(2), Poset::chain(2)));
  const SubmoduleLattice lat = submodule_lattice(regular_module(r));
  CHECK(lat.radical() == strict_upper(*r));
  CHECK(lat.socle() == socle_by_spinning(regular_module(r)));
}

TEST_CASE("budget exhaustion raises a resource error") {
  const RingPtr r = share(build_pair_matrix_ring(truncated_polynomial_algebra(5, 2), 3));
  CHECK_THROWS_AS(submodule_lattice(regular_module(r), 10), ResourceError);
  // rad_gr_ring falls back to the trace chain.
  const RadicalReport rep = rad_gr_ring(*r, 10);
  CHECK(rep.dim() == 9);
  CHECK_FALSE(rep.skipped.empty());
}

TEST_CASE("Loewy series of UT_3") {
  const RingPtr r = share(build_ut(field_algebra(2), Poset::chain(3)));
  const LoewySeries l = loewy_series(regular_module(r));
  CHECK(l.length() == 3);
  CHECK(l.terms.back().dim() == 6);
  const auto rs = radical_series(regular_module(r), rad_gr_ring(*r).subspace.space());
  CHECK(rs.size() == 4);
}

TEST_CASE("module radical and socle via J and via the lattice") {
  Rng rng(5);
  const RingPtr r = share(build_ut(field_algebra(3), Poset::chain(3)));
  const Subspace j = rad_gr_ring(*r).subspace.space();
  for (int t = 0; t < 10; ++t) {
    const GradedModule m = random_module(r, rng, 6);
    const SubmoduleLattice lat = submodule_lattice(m);
    CHECK(rad_gr_module(m, j).space() == lat.radical());
    CHECK(soc_gr_module(m, j).space() == lat.socle());
    CHECK(annihilated_by(m, j) == lat.socle());
  }
}
