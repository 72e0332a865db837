#include <doctest.h>

#include "cohint/group_data.hpp"
#include "cohint/poset.hpp"

using namespace cohint;

namespace {

SymmetricRep adjoint_gl2() {
  SymmetricRep v;
  v.weights = {Weight{{0, 0}}, Weight{{0, 0}}, Weight{{1, -1}}, Weight{{-1, 1}}};
  v.sort_weights();
  return v;
}

SymmetricRep tstar_c() {
  SymmetricRep v;
  v.weights = {Weight{{1}}, Weight{{-1}}};
  v.sort_weights();
  return v;
}

}  // namespace

TEST_CASE("standard builders") {
  auto t1 = build_torus(1);
  CHECK(t1.rank == 1);
  CHECK(t1.roots.empty());
  CHECK(t1.weyl.order() == 1);
  CHECK(t1.dim == 1);

  auto gl2 = build_gl(2);
  CHECK(gl2.rank == 2);
  CHECK(gl2.roots.size() == 2);
  CHECK(gl2.weyl.order() == 2);
  CHECK(gl2.dim == 4);
  CHECK(gl2.roots_symmetric());

  auto prod = build_product({build_gl(2), build_torus(1)});
  CHECK(prod.rank == 3);
  CHECK(prod.dim == 5);
  CHECK(prod.weyl.order() == 2);

  auto sl2 = build_sl(2);
  CHECK(sl2.rank == 2);
  CHECK(sl2.dim == 3);
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(tstar_c()));
  SymmetricRep bad;
  bad.weights = {Weight{{1}}};
  CHECK_FALSE(is_symmetric(bad));
  CHECK(is_symmetric(adjoint_gl2()));
}

TEST_CASE("levi subgroups of gl") {
  auto gl2 = build_gl(2);
  auto regular = levi(gl2, Cocharacter{{1, -1}});
  CHECK(regular.roots.empty());
  CHECK(regular.weyl.order() == 1);
  CHECK(regular.dim == 2);

  auto central = levi(gl2, Cocharacter{{1, 1}});
  CHECK(central.roots.size() == 2);
  CHECK(central.weyl.order() == 2);
  CHECK(central.dim == 4);

  auto gl3 = build_gl(3);
  auto l = levi(gl3, Cocharacter{{1, 1, 0}});
  CHECK(l.roots.size() == 2);
  CHECK(l.weyl.order() == 2);
  CHECK(l.dim == 5);  // gl(2) x gl(1)
}

TEST_CASE("levi roots stay symmetric and Weyl-stable") {
  auto gl3 = build_gl(3);
  for (const ZVec& lam : {ZVec{1, 1, 0}, ZVec{1, 0, 0}, ZVec{2, 1, 0}}) {
    auto l = levi(gl3, Cocharacter{lam});
    CHECK(l.roots_symmetric());
    for (const auto& g : l.weyl.elements()) {
      std::vector<Weight> moved;
      for (const auto& r : l.roots) moved.push_back(act(g, r));
      std::sort(moved.begin(), moved.end());
      CHECK(moved == l.roots);
    }
  }
}

TEST_CASE("fixed_and_attracting") {
  auto t1 = build_torus(1);
  auto fa = fixed_and_attracting(tstar_c(), t1, Cocharacter{{1}});
  CHECK(fa.fixed.weights.empty());
  CHECK(fa.d == -1);
  CHECK(fa.r == 1);
  CHECK(fa.d + 2 * fa.r == 1);  // dim V − dim G

  auto gl2 = build_gl(2);
  auto fb = fixed_and_attracting(adjoint_gl2(), gl2, Cocharacter{{1, -1}});
  CHECK(fb.fixed.weights.size() == 2);
  CHECK(fb.d == 0);
  CHECK(fb.r == 0);

  auto fc = fixed_and_attracting(adjoint_gl2(), gl2, Cocharacter{{0, 0}});
  CHECK(fc.fixed.weights.size() == 4);
  CHECK(fc.d == 0);
  CHECK(fc.r == 0);
}

TEST_CASE("fixed locus and r are symmetric in λ vs −λ") {
  auto gl2 = build_gl(2);
  auto v = adjoint_gl2();
  for (const ZVec& lam : {ZVec{1, 0}, ZVec{1, -1}, ZVec{2, 1}}) {
    ZVec neg{-lam[0], -lam[1]};
    auto a = fixed_and_attracting(v, gl2, Cocharacter{lam});
    auto b = fixed_and_attracting(v, gl2, Cocharacter{neg});
    CHECK(a.fixed.weights == b.fixed.weights);
    CHECK(a.r == b.r);
  }
}

TEST_CASE("central quotient of the adjoint pair") {
  PairVG p{adjoint_gl2(), build_gl(2)};
  auto cq = central_quotient(p);
  CHECK(cq.g0_dim == 1);
  CHECK(cq.pair.rank() == 1);
  CHECK(cq.pair.group.weyl.order() == 2);
  REQUIRE(cq.pair.group.roots.size() == 2);
  // Roots come out as ±s for one positive scale s (basis-dependent).
  auto lo = cq.pair.group.roots[0].coords[0];
  auto hi = cq.pair.group.roots[1].coords[0];
  CHECK(lo == -hi);
  CHECK(hi > 0);
  CHECK(cq.pair.group.dim == 3);

  // Idempotence: the quotient acts faithfully.
  auto again = central_quotient(cq.pair);
  CHECK(again.g0_dim == 0);
  CHECK(again.pair.rank() == cq.pair.rank());
}

TEST_CASE("central quotient: faithful and zero actions") {
  PairVG faithful{tstar_c(), build_torus(1)};
  auto cq = central_quotient(faithful);
  CHECK(cq.g0_dim == 0);
  CHECK(cq.pair.rep.weights == faithful.rep.weights);

  PairVG zero{SymmetricRep{}, build_torus(1)};
  auto cz = central_quotient(zero);
  CHECK(cz.g0_dim == 1);
  CHECK(cz.pair.rank() == 0);
}

TEST_CASE("Lemma d+2r=d over all classes of several fixtures") {
  std::vector<PairVG> fixtures;
  fixtures.push_back({tstar_c(), build_torus(1)});
  fixtures.push_back({adjoint_gl2(), build_gl(2)});
  SymmetricRep std_plus_dual;
  std_plus_dual.weights = {Weight{{1, 0}}, Weight{{0, 1}}, Weight{{-1, 0}}, Weight{{0, -1}}};
  std_plus_dual.sort_weights();
  fixtures.push_back({std_plus_dual, build_sl(2)});
  fixtures.push_back({std_plus_dual, build_torus(2)});
  for (const auto& p : fixtures) {
    Z d = p.d();
    for (const auto& c : enumerate_classes(p)) CHECK(c.d + 2 * c.r == d);
  }
}
