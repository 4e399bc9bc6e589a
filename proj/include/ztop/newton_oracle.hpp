#pragma once

#include "ztop/ratfunc.hpp"

namespace ztop::newton_oracle {

/// Parameters of xn^2 + ... + x3^2 + x1^a (x1^b + x2^2) and the two linear
/// forms A = (a+b)s + 1 + b/2 + (n-2)(a+b)/2 and B = a s + 1 + (n-2)a/2.
struct NewtonParams {
  int n = 3;
  int a = 4;
  int b = 2;

  static NewtonParams make(int n, int a, int b);  // throws BadParams
  LinFactor form_a() const;
  LinFactor form_b() const;
};

/// C(n, k); zero when k < 0 or k > n (and for negative n).
BigInt binomial(int n, int k);

/// Closed-form Z_top of the family C polynomial from its Newton polyhedron,
/// summed term by term and then normalized.
RatFunc zeta_newton_c(int n, int a, int b);

}  // namespace ztop::newton_oracle
