#include "ztop/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ztop/error.hpp"

namespace ztop {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::linear(const Rational& c0, const Rational& c1) { return Poly({c0, c1}); }

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::shifted(const Rational& r) const {
  // Repeated synthetic division by (s - r) yields the Taylor coefficients at r.
  std::vector<Rational> work = coeffs_;
  const std::size_t n = work.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) work[j - 1] += r * work[j];
  }
  return Poly(std::move(work));
}

Poly Poly::divide_by_root(const Rational& r) const {
  if (coeffs_.empty()) return {};
  const std::size_t n = coeffs_.size();
  std::vector<Rational> quotient(n - 1);
  Rational carry;
  for (std::size_t k = n; k-- > 1;) {
    carry = coeffs_[k] + carry * r;
    quotient[k - 1] = carry;
  }
  if (!(coeffs_[0] + carry * r).is_zero()) {
    throw Error(ErrorCode::BadData, "divide_by_root: " + r.str() + " is not a root");
  }
  return Poly(std::move(quotient));
}

Rational Poly::content() const {
  if (coeffs_.empty()) return {};
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& c : coeffs_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  return Rational(num_gcd, den_lcm);
}

std::string Poly::str_integer() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!c.is_integer()) throw Error(ErrorCode::BadData, "str_integer on non-integer coefficient");
    const BigInt mag = abs(c.numerator());
    if (c.sign() < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << 's';
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

Poly Poly::operator-() const { return Rational(-1) * *this; }

Poly operator+(const Poly& lhs, const Poly& rhs) {
  std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = lhs.coeff(k) + rhs.coeff(k);
  return Poly(std::move(out));
}

Poly operator-(const Poly& lhs, const Poly& rhs) { return lhs + (-rhs); }

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const Rational& c, const Poly& p) {
  if (c.is_zero()) return {};
  std::vector<Rational> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

std::vector<Rational> series_divide(const Poly& num, const Poly& den, std::size_t terms) {
  const Rational d0 = den.coeff(0);
  if (d0.is_zero()) throw Error(ErrorCode::BadData, "series_divide: denominator vanishes at 0");
  std::vector<Rational> out(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    Rational acc = num.coeff(k);
    for (std::size_t j = 1; j <= k; ++j) acc -= den.coeff(j) * out[k - j];
    out[k] = acc / d0;
  }
  return out;
}

}  // namespace ztop
