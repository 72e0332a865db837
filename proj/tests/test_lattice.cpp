#include <doctest.h>

#include <random>

#include "cohint/lattice.hpp"

using namespace cohint;

namespace {

Weight w(const ZVec& v) { return Weight{v}; }
Cocharacter cc(const ZVec& v) { return Cocharacter{v}; }

}  // namespace

TEST_CASE("pairing basics") {
  CHECK(pair(cc({1, 0}), w({0, 1})) == 0);
  CHECK(pair(cc({2, -1}), w({1, 1})) == 1);
  CHECK(pair(cc({1}), w({-1})) == -1);
  CHECK_THROWS_AS(pair(cc({1, 0}), w({1})), std::invalid_argument);
}

TEST_CASE("pairing is bilinear over Z") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Z> dist(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    Z a = dist(rng), b = dist(rng);
    ZVec l(3), m(3), beta(3);
    for (auto* v : {&l, &m, &beta})
      for (auto& x : *v) x = dist(rng);
    Cocharacter combo{{a * l[0] + b * m[0], a * l[1] + b * m[1], a * l[2] + b * m[2]}};
    CHECK(pair(combo, w(beta)) == a * pair(cc(l), w(beta)) + b * pair(cc(m), w(beta)));
  }
}

TEST_CASE("common_kernel examples") {
  auto s = common_kernel({w({1, -1})}, 2);
  CHECK(s.dim() == 1);
  CHECK(s.contains({Q(1), Q(1)}));

  CHECK(common_kernel({}, 2).dim() == 2);

  auto z = common_kernel({w({1, 0}), w({0, 1})}, 2);
  CHECK(z.dim() == 0);
}

TEST_CASE("common_kernel is order-insensitive") {
  std::vector<Weight> forms{w({1, -1, 0}), w({0, 1, -1}), w({2, 0, 1})};
  auto a = common_kernel(forms, 3);
  std::swap(forms[0], forms[2]);
  auto b = common_kernel(forms, 3);
  std::swap(forms[1], forms[2]);
  auto c = common_kernel(forms, 3);
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("generic_point examples") {
  auto p1 = generic_point(RationalSubspace::full(1), {w({1})});
  CHECK(p1 == cc({1}));

  auto diag = RationalSubspace::span_z({{1, 1}}, 2);
  CHECK_THROWS_AS(generic_point(diag, {w({1, -1})}), std::invalid_argument);

  // Frozen value of the documented search order: heights 1,2,...,
  // descending-lex coefficient tuples with max coordinate = height.
  auto p2 = generic_point(RationalSubspace::full(2), {w({1, 0}), w({0, 1}), w({1, -1})});
  CHECK(p2 == cc({2, 1}));
}

TEST_CASE("generic_point satisfies its avoidance constraints") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<Z> dist(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Weight> avoid;
    for (int i = 0; i < 4; ++i) {
      ZVec v(3);
      for (auto& x : v) x = dist(rng);
      Weight f{v};
      if (!f.is_zero()) avoid.push_back(f);
    }
    auto p = generic_point(RationalSubspace::full(3), avoid);
    for (const auto& f : avoid) CHECK(pair(p, f) != 0);
  }
}

TEST_CASE("subspace canonical form is an equality key") {
  auto a = RationalSubspace::span_z({{2, 2}}, 2);
  auto b = RationalSubspace::span_z({{1, 1}}, 2);
  auto c = RationalSubspace::span_z({{3, 3}, {1, 1}}, 2);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.dim() == 1);
}
