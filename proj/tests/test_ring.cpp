#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "grgrad/errors.hpp"
#include "grgrad/ring.hpp"
#include "support.hpp"

using namespace grgrad;
using grgrad::testing::base_rings;

TEST_CASE("every builder output validates") {
  for (const auto& [name, r] : base_rings()) {
    INFO(name);
    CHECK(r->validate().ok());
  }
}

TEST_CASE("UT over a chain of three") {
  const GradedRing r = build_ut(field_algebra(2), Poset::chain(3));
  CHECK(r.dim() == 6);
  CHECK(r.support_objects().size() == 3);
  const Morphism g13 = r.groupoid().find("(1,3)");
  CHECK(r.component(g13).dim() == 1);
  CHECK(r.component(r.groupoid().find("(3,1)")).dim() == 0);
  // E12 * E23 = E13
  const auto e12 = unit_vector(6, r.index_of("E12"));
  const auto e23 = unit_vector(6, r.index_of("E23"));
  CHECK(r.multiply(e12, e23) == unit_vector(6, r.index_of("E13")));
  CHECK(vec_is_zero(r.multiply(e23, e12)));
}

TEST_CASE("matrix ring component dimensions") {
  const GradedRing r = build_pair_matrix_ring(truncated_polynomial_algebra(5, 2), 3);
  CHECK(r.dim() == 18);
  for (std::uint32_t m = 0; m < r.groupoid().size(); ++m) CHECK(r.component(Morphism{m}).dim() == 2);
}

TEST_CASE("a corrupted product table is rejected with the violated instance") {
  const GradedRing r = build_pair_matrix_ring(field_algebra(2), 2);
  std::vector<Vector> products;
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) products.push_back(r.product(i, j));
  const std::size_t i12 = r.index_of("E12"), i21 = r.index_of("E21");
  products[i12 * r.dim() + i21] = Vector(r.dim(), 0);
  const GradedRing bad(r.groupoid(), 2, r.basis(), products, r.units());
  const ValidationReport rep = bad.validate();
  REQUIRE_FALSE(rep.ok());
  bool mentions = false;
  for (const auto& v : rep.violations) mentions = mentions || v.find("E12") != std::string::npos;
  CHECK(mentions);
}

TEST_CASE("products across undefined compositions must vanish") {
  const GradedRing r = build_pair_matrix_ring(field_algebra(3), 2);
  std::vector<Vector> products;
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) products.push_back(r.product(i, j));
  const std::size_t i11 = r.index_of("E11"), i22 = r.index_of("E22");
  products[i11 * r.dim() + i22] = unit_vector(r.dim(), i11);
  CHECK_FALSE(GradedRing(r.groupoid(), 3, r.basis(), products, r.units()).validate().ok());
}

TEST_CASE("posets") {
  CHECK(Poset::chain(4).is_total());
  CHECK_FALSE(Poset::antichain(2).is_total());
  CHECK_NOTHROW(grgrad::testing::diamond_poset().validate());
  Poset bad = Poset::chain(2);
  bad.leq[1][0] = true;
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("ideal closure and quotient") {
  const GradedRing r = build_ut(field_algebra(2), Poset::chain(3));
  const Vector e12 = unit_vector(6, r.index_of("E12"));
  const Subspace right = ideal_closure(r, {e12}, Side::Right);
  CHECK(right.dim() == 2);  // E12, E13
  const Subspace two = ideal_closure(r, {e12}, Side::TwoSided);
  CHECK(is_ideal(r, two, Side::TwoSided));
  const GradedRing q = quotient_ring(r, two);
  CHECK(q.dim() == r.dim() - two.dim());
  CHECK(q.validate().ok());
}

TEST_CASE("opposite ring reverses degrees") {
  const GradedRing r = build_ut(field_algebra(3), Poset::chain(2));
  const GradedRing o = opposite_ring(r);
  CHECK(o.validate().ok());
  CHECK(same_structure(opposite_ring(o), r));
  const std::size_t i12 = r.index_of("E12");
  CHECK(o.degree(i12) == r.groupoid().inverse(r.degree(i12)));
}

TEST_CASE("graded inverses") {
  const GradedRing r = build_pair_matrix_ring(field_algebra(5), 2);
  const auto b = gr_inverse(r, unit_vector(4, r.index_of("E12")));
  REQUIRE(b);
  CHECK(*b == unit_vector(4, r.index_of("E21")));
  const GradedRing ut = build_ut(field_algebra(5), Poset::chain(2));
  CHECK_FALSE(gr_inverse(ut, unit_vector(3, ut.index_of("E12"))));
}

TEST_CASE("category ring of A and A/(x)") {
  const GradedRing rc = grgrad::testing::category_ring_a_top(5);
  CHECK(rc.validate().ok());
  // Hom(A,A)=A (2), Hom(A/(x),A) = soc A (1), Hom(A, A/(x)) (1), Hom(A/(x),A/(x)) (1).
  CHECK(rc.dim() == 5);
}

TEST_CASE("groupoid algebra and full subring") {
  const GradedRing r = groupoid_algebra(pair_groupoid({"1", "2", "3"}), 2);
  CHECK(r.validate().ok());
  const auto& g = r.groupoid();
  const GradedRing sub = full_subring(r, {g.find("(1,1)"), g.find("(3,3)")});
  CHECK(sub.dim() == 4);
  CHECK(sub.validate().ok());
}
