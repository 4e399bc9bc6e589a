#include "ztop/newton_oracle.hpp"

#include "ztop/error.hpp"

namespace ztop::newton_oracle {

NewtonParams NewtonParams::make(int n, int a, int b) {
  if (n < 3) throw Error(ErrorCode::BadParams, "n must be >= 3");
  if (a <= 0 || b <= 0 || a % 2 != 0 || b % 2 != 0 || a == 2) {
    throw Error(ErrorCode::BadParams, "a, b must be positive even integers with a != 2");
  }
  return {n, a, b};
}

LinFactor NewtonParams::form_a() const { return {a + b, 1 + b / 2 + (n - 2) * (a + b) / 2, 1}; }

LinFactor NewtonParams::form_b() const { return {a, 1 + (n - 2) * a / 2, 1}; }

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

RatFunc zeta_newton_c(int n, int a, int b) {
  const NewtonParams p = NewtonParams::make(n, a, b);
  const RatFunc inv_a = RatFunc::inverse(p.form_a());
  const RatFunc inv_b = RatFunc::inverse(p.form_b());
  const RatFunc inv_ab = inv_a * inv_b;
  const Rational half_a(a, 2);
  const Rational half_b(b, 2);
  auto times = [](const BigInt& c, const RatFunc& f) { return RatFunc(Rational(c, 1)) * f; };

  RatFunc z = RatFunc(Rational(n - 1) * half_b) * inv_ab + inv_a + RatFunc(Rational(n - 2) * half_a) * inv_b;

  RatFunc inner;
  BigInt pow2 = 1;  // (-2)^d
  for (int d = 1; d <= n - 1; ++d) {
    pow2 *= -2;
    inner = inner + times(binomial(n - 2, d + 1) * pow2,
                          RatFunc(half_a) * inv_b + RatFunc(half_b) * inv_ab);
  }
  pow2 = 1;
  for (int d = 1; d <= n - 1; ++d) {
    pow2 *= -2;
    inner = inner + times(binomial(n - 1, d) * pow2, inv_a);
  }
  pow2 = 1;
  for (int d = 1; d <= n - 2; ++d) {
    pow2 *= -2;
    inner = inner + times(binomial(n - 2, d) * pow2, RatFunc(half_b) * inv_ab);
  }

  // s / (s + 1)
  const RatFunc s_over = Poly::linear(0, 1) * RatFunc::inverse({1, 1, 1});
  return z + s_over * inner;
}

}  // namespace ztop::newton_oracle
