#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "grgrad/chains.hpp"
#include "grgrad/errors.hpp"
#include "grgrad/radical.hpp"
#include "grgrad/random.hpp"
#include "grgrad/structure.hpp"
#include "support.hpp"

using namespace grgrad;
using grgrad::testing::share;

namespace {

constexpr ChainSide kSides[] = {ChainSide::Right, ChainSide::Left};
constexpr ChainCondition kConds[] = {ChainCondition::Artinian, ChainCondition::Noetherian};

bool g0(const ChainVerdict& v, ChainSide s, ChainCondition c) { return v.holds(s, ChainLevel::Gamma0, c); }

}  // namespace

TEST_CASE("poset descriptors round-trip") {
  for (const char* text : {"ordinal:w", "ordinal:w+1", "ordinal:w*2+3", "ordinal:w+1:reversed", "ordinal:4",
                           "finite:1<2<3", "finite:a<c,b<c"}) {
    INFO(text);
    const PosetSpec p = PosetSpec::parse(text);
    CHECK(PosetSpec::parse(p.to_string()).to_string() == p.to_string());
  }
  CHECK(PosetSpec::parse("ordinal:w*1+1").to_string() == "ordinal:w+1");
  CHECK_THROWS_AS(PosetSpec::parse("ordinal:w^2"), InputError);
  CHECK_THROWS_AS(PosetSpec::parse("finite:a<b,b<a"), InputError);
  CHECK_THROWS_AS(PosetSpec::parse("lattice:x"), InputError);
}

TEST_CASE("ordinal elements") {
  const PosetSpec w1 = PosetSpec::ordinal(1, 1);
  CHECK(w1.contains({1, 0}));
  CHECK_FALSE(w1.contains({1, 1}));
  CHECK(w1.less({0, 5}, {1, 0}));
  CHECK(w1.opposite().less({1, 0}, {0, 5}));
  CHECK(parse_ordinal_element("w*2+1") == OrdinalElement{2, 1});
  CHECK(ordinal_name({1, 3}) == "w+3");
}

TEST_CASE("omega plus one over a division ring") {
  const ChainVerdict v = classify_ut(PosetSpec::parse("ordinal:w+1"));
  CHECK_FALSE(g0(v, ChainSide::Right, ChainCondition::Artinian));
  CHECK_FALSE(g0(v, ChainSide::Left, ChainCondition::Noetherian));
  CHECK(g0(v, ChainSide::Right, ChainCondition::Noetherian));
  CHECK(g0(v, ChainSide::Left, ChainCondition::Artinian));
}

TEST_CASE("naturals over a division ring") {
  const ChainVerdict v = classify_ut(PosetSpec::parse("ordinal:w"));
  CHECK(g0(v, ChainSide::Left, ChainCondition::Noetherian));
  CHECK_FALSE(g0(v, ChainSide::Right, ChainCondition::Artinian));
}

TEST_CASE("finite chains satisfy everything") {
  const ChainVerdict v = classify_ut(PosetSpec::from_poset(Poset::chain(4)));
  for (auto s : kSides)
    for (auto c : kConds)
      for (auto l : {ChainLevel::Gr, ChainLevel::StronglyGamma0, ChainLevel::Gamma0}) CHECK(v.holds(s, l, c));
}

TEST_CASE("implications and reversal symmetry") {
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t m = 0; m <= 2; ++m) {
      const PosetSpec p = PosetSpec::ordinal(k, m);
      const ChainVerdict v = classify_ut(p), r = classify_ut(p.opposite());
      for (auto s : kSides)
        for (auto c : kConds) {
          if (v.holds(s, ChainLevel::Gr, c)) CHECK(v.holds(s, ChainLevel::StronglyGamma0, c));
          if (v.holds(s, ChainLevel::StronglyGamma0, c)) CHECK(v.holds(s, ChainLevel::Gamma0, c));
        }
      // Items (1)/(3) and (2)/(4) swap under reversal.
      CHECK(g0(v, ChainSide::Right, ChainCondition::Artinian) == g0(r, ChainSide::Left, ChainCondition::Artinian));
      CHECK(g0(v, ChainSide::Right, ChainCondition::Noetherian) ==
            g0(r, ChainSide::Left, ChainCondition::Noetherian));
    }
}

TEST_CASE("coefficient flags propagate") {
  CoefficientFlags f;
  f.right_noetherian = false;
  const ChainVerdict v = classify_ut(PosetSpec::from_poset(Poset::chain(2)), f);
  CHECK_FALSE(g0(v, ChainSide::Right, ChainCondition::Noetherian));
  CHECK(g0(v, ChainSide::Right, ChainCondition::Artinian));
}

TEST_CASE("witness chain on the naturals") {
  const WitnessChain w = witness_chain(PosetSpec::parse("ordinal:w"), 1, 4, std::string("1"));
  CHECK(w.certified);
  CHECK(w.ideals == std::vector<std::string>{"E(1,2)R", "E(1,3)R", "E(1,4)R", "E(1,5)R"});
  for (std::size_t k = 1; k < w.ideal_dims.size(); ++k) CHECK(w.ideal_dims[k - 1] > w.ideal_dims[k]);
}

TEST_CASE("witness chains of length ten for every failing item") {
  for (const char* text : {"ordinal:w", "ordinal:w+1", "ordinal:w*2", "ordinal:w+1:reversed"}) {
    const PosetSpec p = PosetSpec::parse(text);
    for (int item = 1; item <= 4; ++item) {
      INFO(text << " item " << item);
      if (!has_infinite_chain(p, item)) {
        CHECK_THROWS_AS(witness_chain(p, item, 10), InputError);
        continue;
      }
      const WitnessChain w = witness_chain(p, item, 10);
      CHECK(w.certified);
      CHECK(w.ideals.size() == 10);
    }
  }
  CHECK_THROWS_AS(witness_chain(PosetSpec::from_poset(Poset::chain(3)), 1, 3), InputError);
}

TEST_CASE("strong profiles") {
  const StrongVerdict c = strong_classify(FamilyProfile::constant_profile(1));
  CHECK(c.strongly_artinian);
  CHECK(c.strongly_noetherian);
  CHECK_FALSE(c.gr_artinian);
  CHECK_FALSE(c.gr_noetherian);
  const StrongVerdict id = strong_classify(FamilyProfile::identity_profile());
  CHECK(id.gamma0_artinian);
  CHECK(id.gamma0_noetherian);
  CHECK_FALSE(id.strongly_artinian);
  CHECK_FALSE(id.strongly_noetherian);
  const StrongVerdict fin = strong_classify(FamilyProfile::finite_profile({2, 3}));
  CHECK(fin.gr_artinian);
  CHECK(fin.gr_noetherian);
  CHECK(fin.strongly_artinian == fin.gr_artinian);
}

TEST_CASE("tight chains") {
  const RingPtr r = share(build_ut(field_algebra(2), Poset::chain(3)));
  const GradedModule m = regular_module(r);
  const Subspace j = rad_gr_ring(*r).subspace.space();
  const auto rs = radical_series(m, j);
  std::vector<Subspace> chain;
  for (std::size_t k = 0; k < 3; ++k) chain.push_back(rs[k].space());
  CHECK(is_tight(m, chain, true));
  CHECK_THROWS_AS(is_tight(m, {chain[2], chain[0]}, true), InputError);

  // ker g <= ker g^2 <= ker g^3 for a random degree-e endomorphism.
  Rng rng(2);
  const Morphism e = r->groupoid().find("(1,1)");
  const Matrix g = random_endomorphism(m, e, rng);
  std::vector<Subspace> kers;
  Matrix pw = g;
  for (int k = 0; k < 3; ++k, pw = pw * g) kers.push_back(left_kernel(pw));
  CHECK(is_tight(m, kers, false));
}

TEST_CASE("a chain gaining a new object is not tight") {
  // UT over an antichain of two, M > R(e_2) > 0:
  // the quotients live at e_1 then e_2, which are not nested.
  const RingPtr r = share(build_ut(field_algebra(2), Poset::antichain(2)));
  const GradedModule m = regular_module(r);
  const Subspace second = component_module(m, r->groupoid().find("(2,2)")).space();
  CHECK_FALSE(is_tight(m, {Subspace::full(2, 2), second, Subspace::zero(2, 2)}, true));
}
