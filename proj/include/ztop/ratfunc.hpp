#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ztop/poly.hpp"
#include "ztop/rational.hpp"

namespace ztop {

/// (n_coef*s + v_coef)^multiplicity
struct LinFactor {
  std::int64_t n_coef = 1;
  std::int64_t v_coef = 0;
  int multiplicity = 1;

  Rational root() const { return Rational(-v_coef, n_coef); }
  /// n_coef*s + v_coef, without the multiplicity.
  Poly base() const { return Poly::linear(Rational(v_coef), Rational(n_coef)); }
  std::string str() const;

  friend bool operator==(const LinFactor&, const LinFactor&) = default;
};

/// Rational function numer(s) / prod(factors), denominator kept factored.
///
/// Canonical form, maintained by every operation:
///  - factors are primitive (gcd(n_coef, v_coef) = 1, n_coef > 0), their
///    integer content is folded into the numerator;
///  - at most one factor per root, sorted by root ascending;
///  - no factor root is a root of the numerator;
///  - the zero function has a zero numerator and no factors.
/// Structural equality is therefore equality of functions.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit RatFunc(Poly numer, std::vector<LinFactor> factors = {});

  /// 1 / factor
  static RatFunc inverse(const LinFactor& factor);

  const Poly& numer() const { return numer_; }
  const std::vector<LinFactor>& factors() const { return factors_; }
  bool is_zero() const { return numer_.is_zero(); }

  /// Positive rational content of the numerator (numer = scale * primitive).
  Rational scale() const { return numer_.content(); }

  Rational eval(const Rational& at) const;

  /// Actual poles (after cancellation) with their orders.
  std::map<Rational, int> poles() const;

  /// Coefficient of (s - s0)^-1 in the Laurent expansion at a pole s0.
  Rational residue(const Rational& s0) const;

  /// Deterministic text form `(numer)/(q*(f1)*(f2)^k...)`.
  std::string str() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const Poly& p, const RatFunc& x);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  void normalize();

  Poly numer_;
  std::vector<LinFactor> factors_;
};

/// Free-function spellings of the arithmetic.
inline RatFunc rf_add(const RatFunc& x, const RatFunc& y) { return x + y; }
inline RatFunc rf_mul(const RatFunc& x, const RatFunc& y) { return x * y; }
inline RatFunc rf_scale(const RatFunc& x, const Rational& c) { return RatFunc(c) * x; }
inline Rational rf_eval(const RatFunc& x, const Rational& at) { return x.eval(at); }
inline std::map<Rational, int> poles_with_orders(const RatFunc& x) { return x.poles(); }
inline Rational residue_at(const RatFunc& x, const Rational& s0) { return x.residue(s0); }

}  // namespace ztop
