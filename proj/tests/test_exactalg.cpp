#include <doctest.h>

#include <set>

#include "random_ratfunc.hpp"
#include "ztop/error.hpp"
#include "ztop/ratfunc.hpp"

using ztop::Error;
using ztop::ErrorCode;
using ztop::LinFactor;
using ztop::Poly;
using ztop::Rational;
using ztop::RatFunc;

namespace {

RatFunc inv(std::int64_t n, std::int64_t v, int m = 1) { return RatFunc::inverse({n, v, m}); }

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

TEST_CASE("Rational parses p/q and p only") {
  CHECK(Rational::parse("-5/6") == Rational(-5, 6));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("0/5").denominator() == 1);
  for (const char* bad : {"", "-", "1.5", "1/0", "+1", " 1", "1/-2", "a/b", "1/"}) {
    CHECK_MESSAGE(code_of([&] { Rational::parse(bad); }) == ErrorCode::Parse, bad);
  }
}

TEST_CASE("Rational keeps a positive denominator in lowest terms") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("Poly shift, root division and series division") {
  const Poly p({Rational(1), Rational(2), Rational(-2)});  // -2s^2 + 2s + 1
  const Rational r(1, 3);
  const Poly shifted = p.shifted(r);
  for (int k = -3; k <= 3; ++k) {
    const Rational t(k, 2);
    CHECK(shifted.eval(t) == p.eval(r + t));
  }
  const Poly q = Poly::linear(-1, 1) * Poly::linear(3, 2);  // (s-1)(2s+3)
  CHECK(q.divide_by_root(1) == Poly::linear(3, 2));
  CHECK(code_of([&] { q.divide_by_root(2); }) == ErrorCode::BadData);
  // 1/(1 - t) = 1 + t + t^2 + ...
  const auto series = ztop::series_divide(Poly::constant(1), Poly::linear(1, -1), 4);
  CHECK(series == std::vector<Rational>{1, 1, 1, 1});
  CHECK(p.str_integer() == "-2*s^2+2*s+1");
}

TEST_CASE("rf_add examples") {
  CHECK(inv(2, 2) + RatFunc() == inv(2, 2));
  CHECK((inv(2, 2) + RatFunc()).str() == "(1)/(2*(s+1))");
  CHECK(inv(1, 1) + inv(1, 1) == RatFunc(Poly::constant(2), {{1, 1, 1}}));
  const RatFunc forced(Poly::linear(1, 1), {{1, 1, 1}, {3, 2, 1}});
  CHECK(forced == inv(3, 2));
  CHECK(forced.factors().size() == 1);
}

TEST_CASE("rf_eval examples") {
  CHECK(ztop::rf_eval(inv(2, 2), 0) == Rational(1, 2));
  CHECK(ztop::rf_eval(Poly::linear(0, 1) * inv(1, 1), 1) == Rational(1, 2));
  const RatFunc z(Poly({1, 2, -2}), {{1, 1, 1}, {3, 1, 1}, {4, 1, 1}});
  CHECK(code_of([&] { z.eval(Rational(-1, 3)); }) == ErrorCode::EvalAtPole);
}

TEST_CASE("poles_with_orders examples") {
  using Poles = std::map<Rational, int>;
  CHECK(ztop::poles_with_orders(inv(2, 2) * inv(3, 1)) == Poles{{-1, 1}, {Rational(-1, 3), 1}});
  const RatFunc forced(Poly::linear(1, 1), {{1, 1, 1}, {3, 2, 1}});
  CHECK(forced.poles() == Poles{{Rational(-2, 3), 1}});
  // 2s+2 and s+1 merge into one factor of order 2.
  CHECK((inv(2, 2) * inv(1, 1)).poles() == Poles{{-1, 2}});
}

TEST_CASE("residue_at examples") {
  CHECK(ztop::residue_at(inv(2, 2), -1) == Rational(1, 2));
  CHECK(ztop::residue_at(inv(1, 1, 2), -1) == 0);
  // s/(s+1)^2 = 1/(s+1) - 1/(s+1)^2
  CHECK((Poly::linear(0, 1) * inv(1, 1, 2)).residue(-1) == 1);
  // s^2/(s+1)^3: s^2 = 1 - 2t + t^2 with t = s+1
  CHECK((Poly({0, 0, 1}) * inv(1, 1, 3)).residue(-1) == 1);
  // 1/(2s+1)^2 = (1/4)/(s+1/2)^2 has no 1/t term; s/(2s+1)^2 has 1/4.
  CHECK((Poly::linear(0, 1) * inv(2, 1, 2)).residue(Rational(-1, 2)) == Rational(1, 4));
  CHECK(code_of([&] { inv(1, 1).residue(0); }) == ErrorCode::NotAPole);
}

TEST_CASE("rendering is canonical and sorted by root") {
  // -1/(6s+2) + 1/((6s+2)(4s+1)) + 2/((6s+2)(s+1)), expanded by hand:
  // numerator -(4s+1)(s+1) + (s+1) + 2(4s+1) = -4s^2 + 4s + 2 over 2(3s+1)(4s+1)(s+1).
  const RatFunc z = RatFunc(-1) * inv(6, 2) + inv(6, 2) * inv(4, 1) + RatFunc(2) * inv(6, 2) * inv(1, 1);
  CHECK(z.str() == "(-2*s^2+2*s+1)/((s+1)*(3*s+1)*(4*s+1))");
  CHECK(RatFunc(Rational(3, 4)).str() == "3/4");
  CHECK(RatFunc().str() == "0");
  CHECK((RatFunc(Rational(2, 3)) * inv(1, 0, 2)).str() == "(2)/(3*(s)^2)");
}

TEST_CASE("property: ring laws and normalization on random instances") {
  ztop::testing::RandomRatFunc gen(0x5eed);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFunc x = gen.ratfunc();
    const RatFunc y = gen.ratfunc();
    const RatFunc z = gen.ratfunc();
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == RatFunc());
    CHECK(RatFunc(x.numer(), x.factors()) == x);

    // Evaluation is a ring homomorphism away from the poles.
    const Rational at = gen.small_rational() + Rational(1, 7);
    CHECK((x + y).eval(at) == x.eval(at) + y.eval(at));
    CHECK((x * y).eval(at) == x.eval(at) * y.eval(at));

    std::set<Rational> roots;
    for (const auto* r : {&x, &y}) {
      for (const auto& f : r->factors()) roots.insert(f.root());
    }
    for (const auto& [pole, order] : (x + y).poles()) CHECK(roots.count(pole) == 1);

    for (const auto& [pole, order] : x.poles()) {
      if (order != 1) continue;
      const RatFunc limit = Poly::linear(-pole, 1) * x;
      CHECK(x.residue(pole) == limit.eval(pole));
    }
  }
}
