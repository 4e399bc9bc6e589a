#include <doctest.h>

#include <sstream>

#include "ztop/error.hpp"
#include "ztop/families.hpp"
#include "ztop/resolution.hpp"

using namespace ztop;
using namespace ztop::resolution;

namespace {

Component exc(ComponentId id, std::int64_t n, std::int64_t v) { return {id, n, v, Kind::Exceptional, true}; }
Component str(ComponentId id, std::int64_t n, std::int64_t v) { return {id, n, v, Kind::Strict, true}; }

// The x^4 (x^2 + y^2) data: E1(6,2), V0(4,1), two branches (1,1).
ResolutionData curve_4_2() {
  ResolutionData d;
  d.dim = 2;
  d.components = {exc(1, 6, 2), str(10, 4, 1), str(11, 1, 1), str(12, 1, 1)};
  d.strata = {{{1}, -1}, {{1, 10}, 1}, {{1, 11}, 1}, {{1, 12}, 1}};
  return d;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("zeta_from_strata") {
  ResolutionData trivial;
  trivial.strata = {{{}, 1}};
  CHECK(zeta_from_strata(trivial) == RatFunc(1));

  const auto d = curve_4_2();
  CHECK(zeta_from_strata(d).str() == "(-2*s^2+2*s+1)/((s+1)*(3*s+1)*(4*s+1))");

  auto negated = d;
  for (auto& s : negated.strata) s.chi = -s.chi;
  CHECK(zeta_from_strata(negated) == -zeta_from_strata(d));

  auto doubled = d;
  for (auto& s : doubled.strata) s.chi *= 2;
  CHECK(zeta_from_strata(doubled) == RatFunc(2) * zeta_from_strata(d));

  auto broken = d;
  broken.strata.push_back({{1, 99}, 1});
  CHECK(code_of([&] { zeta_from_strata(broken); }) == ErrorCode::BadData);
  auto dup = d;
  dup.strata.push_back({{1}, 3});
  CHECK(code_of([&] { zeta_from_strata(dup); }) == ErrorCode::BadData);
}

TEST_CASE("candidate_poles") {
  ResolutionData d;
  d.components = {exc(1, 2, 4), exc(2, 4, 7)};
  CHECK(candidate_poles(d) == std::set<Rational>{-2, Rational(-7, 4)});
  ResolutionData smooth;
  smooth.components = {str(0, 1, 1)};
  CHECK(candidate_poles(smooth) == std::set<Rational>{-1});
  CHECK(candidate_poles(curve_4_2()) == std::set<Rational>{Rational(-1, 3), Rational(-1, 4), -1});
  for (const auto& [pole, order] : zeta_from_strata(curve_4_2()).poles()) {
    CHECK(candidate_poles(curve_4_2()).count(pole) == 1);
  }
}

TEST_CASE("alpha") {
  ResolutionData d;
  d.components = {exc(1, 2, 4), exc(2, 4, 7), str(0, 1, 1)};
  CHECK(alpha(d, 2, 1) == Rational(1, 2));
  CHECK(alpha(d, 2, 0) == Rational(-3, 4));
  CHECK(alpha(d, 2, 2) == 0);
  CHECK(code_of([&] { alpha(d, 2, 5); }) == ErrorCode::UnknownId);
}

TEST_CASE("residue_via_alpha") {
  SUBCASE("family A-even n=4 i=4") {
    CHECK(families::residue_via_alpha(families::family_a_even(4, 4)) == Rational(-7, 4));
  }
  SUBCASE("family A-odd n=4 i=3") {
    CHECK(families::residue_via_alpha(families::family_a_odd(4, 3)) == Rational(-11, 15));
  }
  SUBCASE("family C n=3 a=4 b=2") {
    CHECK(families::residue_via_alpha(families::family_c(3, 4, 2)) == Rational(-35, 6));
  }
  SUBCASE("agrees with residue_at on complete data") {
    const auto d = curve_4_2();
    const RatFunc z = zeta_from_strata(d);
    for (const auto& [pole, order] : z.poles()) {
      REQUIRE(order == 1);
      CHECK(residue_via_alpha(d, pole) == z.residue(pole));
    }
  }
  SUBCASE("two pole-sharing components in one stratum") {
    ResolutionData d;
    d.components = {exc(1, 2, 2), exc(2, 1, 1)};
    d.strata = {{{1, 2}, 1}};
    CHECK(code_of([&] { residue_via_alpha(d, -1); }) == ErrorCode::HigherOrderPole);
  }
}

TEST_CASE("lct") {
  CHECK(lct(curve_4_2()) == Rational(1, 4));
  ResolutionData smooth;
  smooth.components = {str(0, 1, 1)};
  CHECK(lct(smooth) == 1);
  CHECK(lct(families::family_c(3, 4, 2).data) == Rational(3, 4));
  smooth.components[0].meets_fiber = false;
  CHECK(code_of([&] { lct(smooth); }) == ErrorCode::EmptyFiber);
  // lct = -(largest candidate pole among fiber components)
  const auto d = curve_4_2();
  CHECK(lct(d) == -*candidate_poles(d).rbegin());
}

TEST_CASE("curve_strata_from_graph") {
  DualGraph g;
  g.vertices = {exc(1, 6, 2), str(0, 4, 1), str(2, 1, 1), str(3, 1, 1)};
  g.edges = {{0, 1}, {1, 2}, {1, 3}};
  const auto d = curve_strata_from_graph(g);
  REQUIRE(d.strata.size() == 4);
  CHECK(d.strata[0] == Stratum{{1}, -1});
  for (std::size_t k = 1; k < 4; ++k) CHECK(d.strata[k].chi == 1);

  DualGraph isolated;
  isolated.vertices = {exc(1, 1, 2)};
  CHECK(curve_strata_from_graph(isolated).strata == std::vector<Stratum>{{{1}, 2}});

  // x^4 (x^4 + y^2): E1 of degree 2, E2 of degree 3, four edges.
  const auto b44 = families::family_b_curve(4, 4);
  std::int64_t singles = 0, edges = 0, expected = 0;
  for (const auto& s : b44.data.strata) (s.members.size() == 1 ? singles : edges) += s.chi;
  CHECK(b44.data.strata[0] == Stratum{{1}, 0});
  CHECK(b44.data.strata[1] == Stratum{{2}, -1});
  CHECK(edges == 4);
  for (const auto& v : b44.graph.vertices) {
    if (v.kind == Kind::Exceptional) expected += 2 - b44.graph.degree(v.id);
  }
  CHECK(singles + edges == expected + static_cast<std::int64_t>(b44.graph.edges.size()));

  DualGraph loop = g;
  loop.edges.push_back({1, 1});
  CHECK(code_of([&] { curve_strata_from_graph(loop); }) == ErrorCode::BadGraph);
  DualGraph dangling = g;
  dangling.edges.push_back({1, 42});
  CHECK(code_of([&] { curve_strata_from_graph(dangling); }) == ErrorCode::BadGraph);
  DualGraph strict_pair = g;
  strict_pair.edges.push_back({2, 3});
  CHECK(code_of([&] { curve_strata_from_graph(strict_pair); }) == ErrorCode::BadGraph);
}

TEST_CASE("resolution file format") {
  const std::string text =
      "# x^4 (x^2 + y^2)\n"
      "dim 2\n"
      "variant local\n"
      "component 1 6 2 exceptional fiber\n"
      "component 2 4 1 strict fiber   # V0\n"
      "component 3 1 1 strict\n"
      "component 4 1 1 strict\n"
      "stratum 1 -1\n"
      "stratum 1,2 1\n"
      "stratum 3,1 1\n"
      "stratum 1,4 1\n";
  std::istringstream in(text);
  const auto d = parse_resolution(in);
  CHECK(d.dim == 2);
  CHECK(d.components[2].meets_fiber == false);
  CHECK(d.strata[2].members == std::vector<ComponentId>{1, 3});
  CHECK(zeta_from_strata(d).str() == "(-2*s^2+2*s+1)/((s+1)*(3*s+1)*(4*s+1))");

  std::istringstream again(render_resolution(d));
  const auto back = parse_resolution(again);
  CHECK(back.components == d.components);
  CHECK(back.strata == d.strata);

  std::istringstream empty_stratum("dim 1\nstratum empty 1\n");
  CHECK(zeta_from_strata(parse_resolution(empty_stratum)) == RatFunc(1));

  for (const char* bad : {"dim 2\ncomponent 1 1 1 strict\ncomponent 1 2 1 strict\n",
                          "dim 2\ncomponent 1 1 1 strict\nstratum 1 1\nstratum 1 2\n",
                          "dim 2\ncomponent 1 1 1 strict\nstratum 1,7 1\n",
                          "dim 2\ncomponent 1 0 1 strict\n",
                          "dim 2\ncomponent 1 1 1 weird\n",
                          "component 1 1 1 strict\n",
                          "dim 2\nfrobnicate\n"}) {
    std::istringstream in_bad(bad);
    CHECK_MESSAGE(code_of([&] { parse_resolution(in_bad); }) == ErrorCode::BadData, bad);
  }
}
