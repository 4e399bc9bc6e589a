#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ztop/rational.hpp"

namespace ztop {

/// Univariate polynomial in s with rational coefficients; coeffs()[k] is the
/// coefficient of s^k and the leading coefficient is never zero. The zero
/// polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// c0 + c1*s
  static Poly linear(const Rational& c0, const Rational& c1);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  Rational eval(const Rational& at) const;

  /// Coefficients of p(r + t) as a polynomial in t.
  Poly shifted(const Rational& r) const;

  /// Quotient of the exact division by (s - r); r must be a root.
  Poly divide_by_root(const Rational& r) const;

  /// Positive rational c such that this = c * P with P having coprime integer
  /// coefficients. Zero for the zero polynomial.
  Rational content() const;

  /// Integer-coefficient rendering, e.g. `-2*s^2+2*s+1`. Only valid when all
  /// coefficients are integers.
  std::string str_integer() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& lhs, const Poly& rhs);
  friend Poly operator-(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void strip();

  std::vector<Rational> coeffs_;
};

/// First `terms` coefficients of the power series num(t)/den(t); den(0) != 0.
std::vector<Rational> series_divide(const Poly& num, const Poly& den, std::size_t terms);

}  // namespace ztop
