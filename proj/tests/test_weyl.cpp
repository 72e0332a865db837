#include <doctest.h>

#include "cohint/weyl.hpp"

using namespace cohint;

namespace {

GroupElement swap2() { return make_element({{0, 1}, {1, 0}}); }
GroupElement diag_sign() { return make_element({{1, 0}, {0, -1}}); }

}  // namespace

TEST_CASE("generate: S2, trivial, B2") {
  auto s2 = FiniteGroup::generate({swap2()}, 2);
  CHECK(s2.order() == 2);

  auto triv = FiniteGroup::generate({}, 2);
  CHECK(triv.order() == 1);

  // Signed permutations of rank 2: order 8 by brute-force closure.
  auto b2 = FiniteGroup::generate({swap2(), diag_sign()}, 2);
  CHECK(b2.order() == 8);
}

TEST_CASE("generate is idempotent and caps") {
  auto b2 = FiniteGroup::generate({swap2(), diag_sign()}, 2);
  auto again = FiniteGroup::generate(b2.elements(), 2);
  CHECK(again.order() == b2.order());
  for (const auto& e : b2.elements()) CHECK(again.contains(e));

  CHECK_THROWS_WITH_AS(FiniteGroup::generate({swap2(), diag_sign()}, 2, 4),
                       "group too large (cap exceeded)", std::runtime_error);
  CHECK_THROWS_AS(make_element({{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("pointwise stabilizers") {
  auto s2 = FiniteGroup::generate({swap2()}, 2);
  CHECK(pointwise_stabilizer(s2, RationalSubspace::span_z({{1, 1}}, 2)).order() == 2);
  CHECK(pointwise_stabilizer(s2, RationalSubspace::full(2)).order() == 1);

  auto b2 = FiniteGroup::generate({swap2(), diag_sign()}, 2);
  auto stab = pointwise_stabilizer(b2, RationalSubspace::span_z({{1, 0}}, 2));
  CHECK(stab.order() == 2);
  CHECK(stab.contains(diag_sign()));
}

TEST_CASE("setwise stabilizer through a key action") {
  auto s2 = FiniteGroup::generate({swap2()}, 2);
  std::function<ZVec(const GroupElement&, const ZVec&)> on_axis =
      [](const GroupElement& g, const ZVec& v) { return act(g, Cocharacter{v}).coords; };

  // Stabilizer of one coordinate axis is trivial; a swap-fixed key keeps all.
  CHECK(setwise_stabilizer(s2, ZVec{1, 0}, on_axis).order() == 1);
  CHECK(setwise_stabilizer(s2, ZVec{1, 1}, on_axis).order() == 2);
  CHECK(setwise_stabilizer(s2, ZVec{0, 0}, on_axis).order() == 2);
}

TEST_CASE("coset representatives") {
  auto s2 = FiniteGroup::generate({swap2()}, 2);
  CHECK(coset_representatives(s2, s2).size() == 1);
  CHECK(coset_representatives(s2, trivial_group(2)).size() == 2);

  auto b2 = FiniteGroup::generate({swap2(), diag_sign()}, 2);
  auto h = pointwise_stabilizer(b2, RationalSubspace::span_z({{1, 0}}, 2));
  auto reps = coset_representatives(b2, h);
  CHECK(reps.size() == 4);
  CHECK(reps.size() * h.order() == b2.order());

  CHECK_THROWS_AS(coset_representatives(s2, b2), std::invalid_argument);
}

TEST_CASE("normality checks") {
  auto b2 = FiniteGroup::generate({swap2(), diag_sign()}, 2);
  auto center = FiniteGroup::generate({make_element({{-1, 0}, {0, -1}})}, 2);
  CHECK(is_normal_in(center, b2));
  auto axis_stab = pointwise_stabilizer(b2, RationalSubspace::span_z({{1, 0}}, 2));
  CHECK_FALSE(is_normal_in(axis_stab, b2));
}

TEST_CASE("weight action matches the inverse transpose convention") {
  auto s = swap2();
  CHECK(act(s, Weight{{1, -1}}) == Weight{{-1, 1}});
  CHECK(act(s, Cocharacter{{1, 0}}) == Cocharacter{{0, 1}});
  // Pairing invariance <w·λ, w·β> = <λ, β>.
  auto b2 = FiniteGroup::generate({swap2(), diag_sign()}, 2);
  for (const auto& g : b2.elements())
    CHECK(pair(act(g, Cocharacter{{2, -1}}), act(g, Weight{{1, 3}})) ==
          pair(Cocharacter{{2, -1}}, Weight{{1, 3}}));
}
