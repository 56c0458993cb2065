#include <doctest.h>

#include <algorithm>

#include "cableord/curve.hpp"
#include "cableord/errors.hpp"
#include "cableord/lspace.hpp"
#include "oracles.hpp"

using namespace cableord;

namespace {

CurveComponent gamma0(std::vector<int> h) {
  CurveComponent c;
  c.kind = ComponentKind::Gamma0;
  c.first_side = Side::Left;
  c.crossings = std::move(h);
  return c;
}

CurveComponent closed(std::vector<int> h) {
  CurveComponent c;
  c.kind = ComponentKind::Closed;
  c.first_side = Side::Right;
  c.crossings = std::move(h);
  return c;
}

std::vector<int> right_lengths(const PegCurve& pc) {
  std::vector<int> out;
  for (const auto& a : classify_arcs(pc)) out.push_back(a.form.length);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("the five-generator staircase gives its curve") {
  const auto pc = curve_of(oracle::staircase5_complex());
  REQUIRE(pc.components.size() == 1);
  const auto& g = pc.components[0];
  CHECK(g.kind == ComponentKind::Gamma0);
  CHECK(g.crossings == std::vector<int>{4, 3, 0, -3, -4});
  CHECK(g.labels == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(tau(pc) == 4);
  CHECK(epsilon(pc) == 1);
  CHECK(validate_curve(pc, true).ok());

  const auto arcs = classify_arcs(pc);
  REQUIRE(arcs.size() == 2);
  CHECK(arcs[0].form.initial);
  CHECK(arcs[0].form.form() == "--");
  CHECK(arcs[0].form.length == 1);
  CHECK_FALSE(arcs[1].form.initial);
  CHECK(arcs[1].form.form() == "+-");
  CHECK(arcs[1].form.length == 3);
}

TEST_CASE("unknot curve") {
  const auto pc = curve_of(oracle::unknot_complex());
  REQUIRE(pc.components.size() == 1);
  CHECK(pc.components[0].crossings == std::vector<int>{0});
  const auto arcs = classify_arcs(pc);
  REQUIRE(arcs.size() == 1);
  CHECK(arcs[0].form.degenerate);
  CHECK(arcs[0].form.form() == "0");
  CHECK(tau(pc) == 0);
  CHECK(epsilon(pc) == 0);
  CHECK(oracle::same_by_id(curve_to_complex(PegCurve{{gamma0({0})}}), to_mod_uv(BigradedComplex::from_arrows(
                                                                  RingMode::Full, {{"g0_0", 0, 0}}, {}))));
}

TEST_CASE("the diagonal example gives one closed component") {
  const auto pc = curve_of(oracle::diagonal_complex());
  REQUIRE(pc.components.size() == 1);
  const auto& c = pc.components[0];
  CHECK(c.kind == ComponentKind::Closed);
  CHECK(right_lengths(pc) == std::vector<int>{1, 4, 5});
  std::vector<int> left;
  for (std::size_t i = 0; i < c.crossings.size(); ++i) {
    if (c.side_after(i) == Side::Left) left.push_back(std::abs(c.crossings[c.next(i)] - c.crossings[i]));
  }
  std::sort(left.begin(), left.end());
  CHECK(left == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(tau(pc), InvalidInput);
}

TEST_CASE("curve_to_complex inverts complex_to_curve") {
  const auto c = to_mod_uv(oracle::staircase5_complex());
  CHECK(oracle::same_by_id(curve_to_complex(curve_of(c)), c));

  const auto a = to_mod_uv(oracle::diagonal_complex());
  const auto back = curve_to_complex(curve_of(a));
  CHECK(homology_minus(back) == homology_minus(a));

  oracle::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pc = oracle::random_mixed_curve(rng);
    const auto cx = curve_to_complex(pc);
    CHECK(curve_of(cx) == pc);
    const auto lengths = right_lengths(pc);
    CHECK(torsion_order(cx) == lengths.back());
  }
}

TEST_CASE("staircase curves") {
  const StaircaseSpec s{{3, 2, 0, -2, -3}};
  const auto pc = staircase_curve(s);
  CHECK(tau(pc) == 3);
  CHECK(epsilon(pc) == 1);
  CHECK(curve_of(staircase_from_alexander(s)) == pc);
}

TEST_CASE("mirror negates tau and epsilon") {
  const auto pc = curve_of(oracle::staircase5_complex());
  const auto m = mirror(pc);
  CHECK(tau(m) == -4);
  CHECK(epsilon(m) == -1);
  CHECK(mirror(m) == pc);
  CHECK(curve_of(mirror(oracle::staircase5_complex())) == m);
}

TEST_CASE("closed components do not change tau and epsilon") {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto pc = oracle::random_mixed_curve(rng);
    PegCurve only{{pc.components[0]}};
    CHECK(tau(pc) == tau(only));
    CHECK(epsilon(pc) == epsilon(only));
  }
}

TEST_CASE("obstructions") {
  SUBCASE("noninitial eta_1^{-+}") {
    const auto r = validate_curve(PegCurve{{gamma0({1, 3, 0, 1, -2})}});
    CHECK(r.passed("structure"));
    CHECK_FALSE(r.passed("no_noninitial_eta1_minus_plus"));
  }
  SUBCASE("initial eta_1^{++} with epsilon +1") {
    const PegCurve pc{{gamma0({-1, -2, 0, 2, 1})}};
    REQUIRE(epsilon(pc) == 1);
    CHECK_FALSE(validate_curve(pc).passed("no_initial_eta1_plus"));
  }
  SUBCASE("initial eta_1^{0+} with epsilon +1") {
    const PegCurve pc{{gamma0({0, -1, 1})}};
    REQUIRE(epsilon(pc) == 1);
    CHECK_FALSE(validate_curve(pc).passed("no_initial_eta1_plus"));
  }
  SUBCASE("the staircase curve is clean") {
    CHECK(validate_curve(PegCurve{{gamma0({4, 3, 0, -3, -4})}}, true).ok());
  }
  SUBCASE("structural failures") {
    CHECK_FALSE(validate_curve(PegCurve{{gamma0({1, 0})}}).passed("structure"));
    CHECK_FALSE(validate_curve(PegCurve{{gamma0({1, 1, -1})}}).passed("pulled_tight"));
    CHECK_FALSE(validate_curve(PegCurve{{closed({0, 1})}}).passed("single_gamma0"));
    CHECK_FALSE(validate_curve(PegCurve{{gamma0({2, 1, 0, -2, -1})}}, true).passed("rotation_symmetry"));
  }
}

TEST_CASE("pull_tight") {
  CHECK(pull_tight(PegCurve{{gamma0({1, 0, 3, 3, -1})}}) == PegCurve{{gamma0({1, 0, -1})}});
  CHECK(pull_tight(PegCurve{{gamma0({0}), closed({2, 2})}}) == PegCurve{{gamma0({0})}});
  const PegCurve tight{{gamma0({4, 3, 0, -3, -4})}};
  CHECK(pull_tight(tight) == tight);
}
