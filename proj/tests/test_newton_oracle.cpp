#include <doctest.h>

#include "ztop/error.hpp"
#include "ztop/families.hpp"
#include "ztop/newton_oracle.hpp"

using namespace ztop;
using namespace ztop::newton_oracle;

TEST_CASE("binomial") {
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(2, 1) == 2);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("zeta_newton_c at n=3, a=4, b=2") {
  // Collapsed by hand: 2/(AB) + 1/A + 2/B - 2s/((s+1)AB), A = 6s+5, B = 4s+3.
  const RatFunc inv_a = RatFunc::inverse({6, 5, 1});
  const RatFunc inv_b = RatFunc::inverse({4, 3, 1});
  const RatFunc expected = RatFunc(2) * inv_a * inv_b + inv_a + RatFunc(2) * inv_b -
                           Poly::linear(0, 2) * RatFunc::inverse({1, 1, 1}) * inv_a * inv_b;
  const RatFunc z = zeta_newton_c(3, 4, 2);
  CHECK(z == expected);
  CHECK(z.residue(Rational(-5, 6)) == Rational(-35, 6));
  CHECK(z.residue(Rational(-5, 6)) == families::residue_closed_form_c(3, 4, 2));
}

TEST_CASE("Newton forms") {
  for (int n = 3; n <= 8; ++n) {
    for (int a : {4, 6, 8, 10}) {
      for (int b : {2, 4, 6, 8}) {
        const auto p = NewtonParams::make(n, a, b);
        CHECK(p.form_a().root() == families::family_c(n, a, b).target_pole);
        CHECK(p.form_b().root() == Rational(-(2 + (n - 2) * a), 2 * a));

        const RatFunc z = zeta_newton_c(n, a, b);
        CHECK(z.poles().at(p.form_a().root()) == 1);
        for (const auto& [pole, order] : z.poles()) {
          CHECK((pole == p.form_a().root() || pole == p.form_b().root() || pole == -1));
        }
      }
    }
  }
  CHECK_THROWS_AS(zeta_newton_c(3, 2, 2), Error);
  CHECK_THROWS_AS(zeta_newton_c(2, 4, 2), Error);
}
