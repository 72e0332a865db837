/*
  Acceptance suite: end-to-end checks of the integrality engine against the
  frozen expected values, one pass/fail line per criterion. Exits nonzero if
  any criterion fails. Runtime limits are asserted per criterion.
*/

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cohint/bps.hpp"
#include "cohint/cli.hpp"
#include "oracles.hpp"

using namespace cohint;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<void(std::ostream&)> body;  // throws on failure
};

PairVG tstar_c_pair() {
  SymmetricRep v;
  v.weights = {Weight{{-1}}, Weight{{1}}};
  return {v, build_torus(1)};
}

PairVG tstar_c2_pair() {
  SymmetricRep v;
  v.weights = {Weight{{-1}}, Weight{{-1}}, Weight{{1}}, Weight{{1}}};
  return {v, build_torus(1)};
}

PairVG adjoint_gl2_pair() {
  SymmetricRep v;
  v.weights = {Weight{{-1, 1}}, Weight{{0, 0}}, Weight{{0, 0}}, Weight{{1, -1}}};
  return {v, build_gl(2)};
}

PairVG std_dual_sl2_pair() {
  SymmetricRep v;
  v.weights = {Weight{{-1, 0}}, Weight{{0, -1}}, Weight{{0, 1}}, Weight{{1, 0}}};
  return {v, build_sl(2)};
}

PairVG torus2_pair() {
  SymmetricRep v;
  v.weights = {Weight{{-1, 0}}, Weight{{0, -1}}, Weight{{0, 1}}, Weight{{1, 0}}};
  return {v, build_torus(2)};
}

std::vector<PairVG> property_fixtures() {
  return {tstar_c_pair(), tstar_c2_pair(), adjoint_gl2_pair(), std_dual_sl2_pair(), torus2_pair()};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

template <typename T>
std::string show_map(const std::map<Z, T>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) os << ", ";
    os << k << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

// Coefficients of 1/((1-t^2)(1-t^4)) on even degrees 0..cutoff.
std::map<Z, Z> bgl2_series(Z cutoff) {
  std::map<Z, Z> out;
  for (Z i = 0; 2 * i <= cutoff; ++i)
    for (Z j = 0; 2 * i + 4 * j <= cutoff; ++j) ++out[2 * i + 4 * j];
  return out;
}

void criterion_b1(std::ostream& log) {
  Engine engine;
  auto pair = tstar_c_pair();
  auto classes = enumerate_classes(pair);
  require(classes.size() == 2, "expected 2 partition classes");
  auto rec = engine.bps_character(pair, 21);
  std::map<Z, Z> expect{{-1, 1}};
  require(rec.p_char.dims() == expect,
          "BPS dims " + show_map(rec.p_char.dims()) + " != " + show_map(expect));
  auto report = engine.verify_integrality(pair, 21);
  require(report.pass && report.residual.empty(), "integrality residual nonzero");
  log << "2 classes, BPS {-1:1}, residual zero to degree 21";
}

void criterion_b2(std::ostream& log) {
  Engine engine;
  auto pair = tstar_c2_pair();
  auto rec = engine.bps_character(pair, 21);
  std::map<Z, Z> expect{{-3, 1}, {-1, 1}};
  require(rec.p_char.dims() == expect,
          "BPS dims " + show_map(rec.p_char.dims()) + " != " + show_map(expect));
  require(engine.verify_integrality(pair, 21).pass, "integrality failed");
  log << "BPS {-3:1, -1:1}, identity passes";
}

void criterion_rank1_battery(std::ostream& log) {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> count_dist(1, 5);
  std::uniform_int_distribution<int> weight_dist(1, 5);
  std::uniform_int_distribution<int> zeros_dist(0, 2);
  Engine engine;
  for (int trial = 0; trial < 20; ++trial) {
    SymmetricRep v;
    int positives = count_dist(rng);
    for (int i = 0; i < positives; ++i) {
      Z k = weight_dist(rng);
      v.weights.push_back(Weight{{k}});
      v.weights.push_back(Weight{{-k}});
    }
    int zeros = zeros_dist(rng);
    for (int i = 0; i < zeros && v.weights.size() + 1 <= 12; ++i) v.weights.push_back(Weight{{0}});
    v.sort_weights();

    auto report = engine.rank1_conjecture_check(v, 21);
    require(!report.degenerate, "degenerate fixture generated");
    require(report.dims_match, "closed-form mismatch: expected " + show_map(report.expected) +
                                   " computed " + show_map(report.computed));
    require(report.integrality_pass, "integrality failed on a rank-1 fixture");
  }
  log << "20 random rank-1 fixtures: closed form and identity both hold";
}

void criterion_gl2_adjoint(std::ostream& log) {
  Engine engine;
  auto pair = adjoint_gl2_pair();
  auto rec = engine.bps_character(pair, 20);
  require(rec.p_char.dims().empty(), "trivial-class BPS should vanish");
  auto report = engine.verify_integrality(pair, 20);
  require(report.pass, "integrality failed");
  auto expect = bgl2_series(20);
  require(report.target == expect, "target " + show_map(report.target) + " != Poincare series of BGL2");
  bool found = false;
  for (const auto& c : report.contributions) {
    if (c.dims.empty()) continue;
    require(c.dims == expect, "regular-class contribution mismatch: " + show_map(c.dims));
    found = true;
  }
  require(found, "no nonzero orbit contribution");
  log << "BPS(trivial) = 0, regular orbit carries 1/((1-t^2)(1-t^4))";
}

void property_d_plus_2r(const PairVG& pair) {
  Z d = pair.d();
  for (const auto& c : enumerate_classes(pair))
    require(c.d + 2 * c.r == d, "d + 2r mismatch on a class");
}

void property_epsilon(const PairVG& pair) {
  auto classes = enumerate_classes(pair);
  auto poset = weyl_structure(classes, pair);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& stab = poset.weyl[i].stabilizer;
    for (const auto& a : stab.elements())
      for (const auto& b : stab.elements())
        require(epsilon(classes[i], product(a, b), pair) ==
                    epsilon(classes[i], a, pair) * epsilon(classes[i], b, pair),
                "epsilon is not multiplicative");
    for (const auto& u : poset.weyl[i].pointwise.elements())
      require(epsilon(classes[i], u, pair) == 1, "epsilon not trivial on the Levi Weyl group");
  }
}

void property_associativity(const PairVG& pair) {
  auto classes = enumerate_classes(pair);
  for (const auto& upper : classes) {
    if (upper.is_trivial(pair)) continue;
    PairVG sub = sub_pair(upper, pair);
    auto inner_classes = enumerate_classes(sub);
    InductionOperator outer = make_induction(upper, pair);
    for (const auto& inner : inner_classes) {
      if (inner.key == upper.key) continue;
      const PartitionClass* ambient = nullptr;
      for (const auto& c : classes)
        if (c.key == inner.key) ambient = &c;
      require(ambient != nullptr, "sub-pair class missing from the ambient poset");
      InductionOperator direct = make_induction(*ambient, pair);
      InductionOperator first = make_induction(inner, sub);
      auto src_group = pointwise_stabilizer(pair.group.weyl, ambient->torus);
      for (Z d = 0; d <= 10; ++d) {
        auto mons = monomials_of_degree(pair.rank(), d);
        auto basis = invariant_basis(src_group, d, mons);
        std::size_t k = basis.empty() ? 0 : basis[0].size();
        for (std::size_t j = 0; j < k; ++j) {
          QVec col(basis.size());
          for (std::size_t i = 0; i < basis.size(); ++i) col[i] = basis[i][j];
          Poly f = from_coefficients(pair.rank(), mons, col);
          require(induce(outer, induce(first, f)) == induce(direct, f),
                  "induction composition differs from the direct map");
        }
      }
    }
  }
}

void property_normality(const PairVG& pair) {
  auto classes = enumerate_classes(pair);
  auto poset = weyl_structure(classes, pair);
  for (std::size_t i = 0; i < classes.size(); ++i)
    require(is_normal_in(poset.weyl[i].pointwise, poset.weyl[i].stabilizer),
            "W^lambda is not normal in W_lambda");
}

void property_preferred_representative(const PairVG& pair) {
  for (const auto& c : enumerate_classes(pair)) {
    std::vector<Weight> vanishing = c.key.v_fixed;
    vanishing.insert(vanishing.end(), c.key.roots.begin(), c.key.roots.end());
    require(common_kernel(vanishing, pair.rank()) == c.torus,
            "class is not its own preferred representative");
  }
}

void property_molien(const PairVG& pair) {
  for (Z d = 0; d <= 10; ++d) {
    auto mons = monomials_of_degree(pair.rank(), d);
    auto basis = invariant_basis(pair.group.weyl, d, mons);
    Z dim = basis.empty() ? 0 : static_cast<Z>(basis[0].size());
    require(molien_invariant_dimension(pair.group.weyl, d) == Q(static_cast<long>(dim)),
            "Molien average disagrees with the Reynolds basis");
    require(cohint::testing::brute_invariant_dim(pair.group.weyl, d) == dim,
            "brute-force invariant dimension disagrees");
  }
}

void property_determinism(const PairVG& pair) {
  Engine plain;
  EngineOptions opt;
  opt.reversed_monomial_order = true;
  Engine reversed(opt);
  auto a = plain.verify_integrality(pair, 12);
  auto b = reversed.verify_integrality(pair, 12);
  require(a.pass && b.pass, "identity failed during the determinism check");
  require(a.target == b.target, "targets differ under permuted basis order");
  require(a.contributions.size() == b.contributions.size(), "orbit counts differ");
  for (std::size_t i = 0; i < a.contributions.size(); ++i) {
    require(a.contributions[i].dims == b.contributions[i].dims,
            "contributions differ under permuted basis order");
    require(a.contributions[i].p_dims == b.contributions[i].p_dims,
            "BPS characters differ under permuted basis order");
  }
}

void property_finite_support(const PairVG& pair) {
  Engine engine;
  Z bound = pair.rep.dim() + pair.group.dim;
  for (const auto& c : enumerate_classes(pair)) {
    auto rec = engine.bps_character(sub_pair(c, pair), bound + 6);
    for (const auto& [n, v] : rec.p_char.dims())
      require(n >= -bound && n <= bound, "BPS support outside the boundedness window");
  }
}

void criterion_properties(std::ostream& log) {
  auto fixtures = property_fixtures();
  for (const auto& pair : fixtures) {
    property_d_plus_2r(pair);
    property_epsilon(pair);
    property_associativity(pair);
    property_normality(pair);
    property_preferred_representative(pair);
    property_molien(pair);
    property_determinism(pair);
    property_finite_support(pair);
  }
  log << fixtures.size() << " fixtures x 8 properties";
}

void criterion_negative_control(std::ostream& log) {
  EngineOptions opt;
  opt.corrupt_kernel = true;
  Engine engine(opt);
  auto report = engine.verify_integrality(tstar_c_pair(), 21);
  require(!report.pass, "corrupted kernel still passes");
  require(!report.residual.empty(), "corrupted kernel left no residual");
  log << "dropping one kernel factor breaks the identity (residual at "
      << report.residual.begin()->first << ")";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"B.1 golden test (T*C, C*)", 1.0, criterion_b1},
      {"B.2 golden test (T*C^2, C*)", 1.0, criterion_b2},
      {"B.4/B.5 rank-1 battery", 10.0, criterion_rank1_battery},
      {"GL2 adjoint", 2.0, criterion_gl2_adjoint},
      {"property suite", 60.0, criterion_properties},
      {"negative control", 1.0, criterion_negative_control},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    std::string error;
    try {
      criteria[i].body(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty() && seconds < criteria[i].limit_seconds;
    if (!ok) ++failed;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << criteria[i].name
              << ": " << (error.empty() ? log.str() : error);
    if (error.empty() && seconds >= criteria[i].limit_seconds)
      std::cout << " (exceeded " << criteria[i].limit_seconds << "s limit)";
    std::cout << " [" << static_cast<long>(seconds * 1000) << " ms]\n";
  }
  if (failed) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
