#include "ztop/ratfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ztop/error.hpp"

namespace ztop {

namespace {

Poly power(const Poly& p, int k) {
  Poly out = Poly::constant(1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

Poly expand(const std::vector<LinFactor>& factors) {
  Poly out = Poly::constant(1);
  for (const auto& f : factors) out = out * power(f.base(), f.multiplicity);
  return out;
}

}  // namespace

std::string LinFactor::str() const {
  std::ostringstream os;
  os << '(';
  if (n_coef != 1) os << n_coef << '*';
  os << 's';
  if (v_coef > 0) os << '+' << v_coef;
  if (v_coef < 0) os << v_coef;
  os << ')';
  if (multiplicity != 1) os << '^' << multiplicity;
  return os.str();
}

RatFunc::RatFunc(const Rational& c) : numer_(Poly::constant(c)) {}

RatFunc::RatFunc(Poly numer, std::vector<LinFactor> factors)
    : numer_(std::move(numer)), factors_(std::move(factors)) {
  normalize();
}

RatFunc RatFunc::inverse(const LinFactor& factor) {
  return RatFunc(Poly::constant(1), {factor});
}

void RatFunc::normalize() {
  // Make each factor primitive, folding its content into the numerator.
  std::map<Rational, LinFactor> by_root;
  for (const auto& f : factors_) {
    if (f.n_coef <= 0) throw Error(ErrorCode::BadData, "linear factor needs n_coef >= 1");
    if (f.multiplicity < 0) throw Error(ErrorCode::BadData, "negative multiplicity");
    if (f.multiplicity == 0) continue;
    const std::int64_t g = std::gcd(f.n_coef, f.v_coef);
    Rational content_power = 1;
    for (int k = 0; k < f.multiplicity; ++k) content_power *= Rational(g);
    numer_ = content_power.reciprocal() * numer_;
    LinFactor prim{f.n_coef / g, f.v_coef / g, f.multiplicity};
    auto [it, inserted] = by_root.try_emplace(prim.root(), prim);
    if (!inserted) it->second.multiplicity += prim.multiplicity;
  }
  factors_.clear();
  if (numer_.is_zero()) return;
  // Cancel until no factor root annihilates the numerator.
  for (auto& [root, f] : by_root) {
    while (f.multiplicity > 0 && numer_.eval(root).is_zero()) {
      // n*s + v = n * (s - root)
      numer_ = Rational(1, f.n_coef) * numer_.divide_by_root(root);
      --f.multiplicity;
    }
    if (f.multiplicity > 0) factors_.push_back(f);
  }
}

Rational RatFunc::eval(const Rational& at) const {
  Rational den = 1;
  for (const auto& f : factors_) {
    const Rational base = f.base().eval(at);
    if (base.is_zero()) throw Error(ErrorCode::EvalAtPole, at.str() + " is a pole");
    for (int k = 0; k < f.multiplicity; ++k) den *= base;
  }
  return numer_.eval(at) / den;
}

std::map<Rational, int> RatFunc::poles() const {
  std::map<Rational, int> out;
  for (const auto& f : factors_) out.emplace(f.root(), f.multiplicity);
  return out;
}

Rational RatFunc::residue(const Rational& s0) const {
  const auto hit = std::find_if(factors_.begin(), factors_.end(),
                                [&](const LinFactor& f) { return f.root() == s0; });
  if (hit == factors_.end()) throw Error(ErrorCode::NotAPole, s0.str() + " is not a pole");
  // x = numer / (n^m (s - s0)^m Q(s)); with t = s - s0 the residue is the
  // t^(m-1) coefficient of numer(s0 + t) / (n^m Q(s0 + t)).
  const int order = hit->multiplicity;
  std::vector<LinFactor> others;
  for (const auto& f : factors_) {
    if (&f != &*hit) others.push_back(f);
  }
  Rational lead = 1;
  for (int k = 0; k < order; ++k) lead *= Rational(hit->n_coef);
  const Poly den = lead * expand(others).shifted(s0);
  const auto series = series_divide(numer_.shifted(s0), den, static_cast<std::size_t>(order));
  return series.back();
}

std::string RatFunc::str() const {
  if (numer_.is_zero()) return "0";
  const Rational c = scale();
  // numer = (p/q) * P with P primitive: render p*P over q*factors.
  const Poly integral = Rational(c.numerator(), 1) * (c.reciprocal() * numer_);
  const BigInt q = c.denominator();
  if (factors_.empty()) return numer_.degree() == 0 ? numer_.coeff(0).str() : integral.str_integer();
  std::ostringstream os;
  os << '(' << integral.str_integer() << ")/(";
  bool first = true;
  if (q != 1) {
    os << q.get_str();
    first = false;
  }
  for (const auto& f : factors_) {
    if (!first) os << '*';
    os << f.str();
    first = false;
  }
  os << ')';
  return os.str();
}

RatFunc RatFunc::operator-() const { return Rational(-1) * *this; }

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  // Common denominator: per root, the larger multiplicity.
  std::map<Rational, LinFactor> common;
  for (const auto* side : {&x, &y}) {
    for (const auto& f : side->factors_) {
      auto [it, inserted] = common.try_emplace(f.root(), f);
      if (!inserted) it->second.multiplicity = std::max(it->second.multiplicity, f.multiplicity);
    }
  }
  auto cofactor = [&](const RatFunc& r) {
    std::vector<LinFactor> missing;
    for (const auto& [root, f] : common) {
      int have = 0;
      for (const auto& g : r.factors_) {
        if (g.root() == root) have = g.multiplicity;
      }
      if (f.multiplicity > have) missing.push_back({f.n_coef, f.v_coef, f.multiplicity - have});
    }
    return expand(missing);
  };
  Poly numer = x.numer_ * cofactor(x) + y.numer_ * cofactor(y);
  std::vector<LinFactor> factors;
  for (const auto& [root, f] : common) factors.push_back(f);
  return RatFunc(std::move(numer), std::move(factors));
}

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  std::vector<LinFactor> factors = x.factors_;
  factors.insert(factors.end(), y.factors_.begin(), y.factors_.end());
  return RatFunc(x.numer_ * y.numer_, std::move(factors));
}

RatFunc operator*(const Poly& p, const RatFunc& x) { return RatFunc(p * x.numer_, x.factors_); }

}  // namespace ztop
