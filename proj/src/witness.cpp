#include "ztop/witness.hpp"

#include <sstream>

#include "ztop/error.hpp"
#include "ztop/newton_oracle.hpp"
#include "ztop/resolution.hpp"

namespace ztop::witness {

namespace {

struct Evidence {
  Rational residue;
  int pole_order = 0;
  std::string polynomial;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

std::string ring(int dim) { return dim == 1 ? "C[x1]" : "C[x1..x" + std::to_string(dim) + "]"; }

bool in_interval(const Rational& s0, int dim) { return s0 >= Rational(-(dim - 1), 2) && s0.sign() < 0; }

// Pole order of s0 in z, or 0 when s0 is not a pole.
int order_at(const RatFunc& z, const Rational& s0) {
  const auto poles = z.poles();
  const auto it = poles.find(s0);
  return it == poles.end() ? 0 : it->second;
}

void full_zeta_checks(Evidence& ev, const resolution::ResolutionData& data, const Rational& s0) {
  const RatFunc z = resolution::zeta_from_strata(data);
  ev.pole_order = order_at(z, s0);
  ev.add("actual_pole_of_full_zeta", ev.pole_order >= 1, "order " + std::to_string(ev.pole_order));
  if (ev.pole_order >= 1) {
    ev.residue = z.residue(s0);
    if (ev.pole_order == 1) ev.add("residue_nonzero", !ev.residue.is_zero(), ev.residue.str());
  }
}

// Evidence that the family polynomial with the given parameters, in
// base_dim variables, has a pole at s0. Generator errors are reported as a
// failed check.
Evidence evaluate(FamilyKind family, int base_dim, int i, int a, int b, const Rational& s0) {
  Evidence ev;
  try {
    switch (family) {
      case FamilyKind::AEven:
      case FamilyKind::AOdd: {
        const families::FamilyData f =
            family == FamilyKind::AEven ? families::family_a_even(base_dim, i) : families::family_a_odd(base_dim, i);
        ev.polynomial = families::polynomial_text(f);
        ev.add("target_pole", f.target_pole == s0, f.target_pole.str());
        ev.residue = families::residue_via_alpha(f);
        ev.add("residue_via_alpha_nonzero", !ev.residue.is_zero(), ev.residue.str());
        ev.pole_order = 1;
        if (f.complete) {
          const RatFunc z = resolution::zeta_from_strata(f.data);
          const int order = order_at(z, s0);
          ev.add("actual_pole_of_full_zeta", order == 1, "order " + std::to_string(order));
          if (order == 1) ev.add("residue_at_matches_alpha", z.residue(s0) == ev.residue);
        }
        break;
      }
      case FamilyKind::SumOfSquares: {
        const families::FamilyData f = families::sum_of_squares(base_dim);
        ev.polynomial = families::polynomial_text(f);
        ev.add("target_pole", f.target_pole == s0, f.target_pole.str());
        full_zeta_checks(ev, f.data, s0);
        if (base_dim >= 3 && ev.pole_order == 1) {
          ev.add("residue_at_matches_alpha", families::residue_via_alpha(f) == ev.residue);
        }
        if (base_dim == 2) {
          // x1^2 + x2^2: two lines through E_1(2,2).
          resolution::DualGraph g;
          g.vertices = {{1, 2, 2, resolution::Kind::Exceptional, true},
                        {2, 1, 1, resolution::Kind::Strict, true},
                        {3, 1, 1, resolution::Kind::Strict, true}};
          g.edges = {{1, 2}, {1, 3}};
          const RatFunc curve = resolution::zeta_from_strata(resolution::curve_strata_from_graph(g));
          ev.add("curve_graph_agrees", curve == resolution::zeta_from_strata(f.data), curve.str());
        }
        break;
      }
      case FamilyKind::B: {
        if (base_dim != 2) throw Error(ErrorCode::BadParams, "family B lives in 2 variables");
        const families::CurveFamilyData f = families::family_b_curve(a, b);
        ev.polynomial = families::polynomial_text(f);
        ev.add("target_pole", f.expected_pole == s0, f.expected_pole.str());
        full_zeta_checks(ev, f.data, s0);
        if (ev.pole_order == 1) {
          ev.add("residue_at_matches_alpha", resolution::residue_via_alpha(f.data, s0) == ev.residue);
        }
        break;
      }
      case FamilyKind::C: {
        const families::FamilyData f = families::family_c(base_dim, a, b);
        ev.polynomial = families::polynomial_text(f);
        ev.add("target_pole", f.target_pole == s0, f.target_pole.str());
        ev.residue = families::residue_via_alpha(f);
        ev.add("residue_via_alpha_nonzero", !ev.residue.is_zero(), ev.residue.str());
        const Rational closed = families::residue_closed_form_c(base_dim, a, b);
        ev.add("closed_form_matches", closed == ev.residue, closed.str());
        const RatFunc z = newton_oracle::zeta_newton_c(base_dim, a, b);
        ev.pole_order = order_at(z, s0);
        ev.add("newton_simple_pole", ev.pole_order == 1, "order " + std::to_string(ev.pole_order));
        if (ev.pole_order >= 1) {
          const Rational newton = z.residue(s0);
          ev.add("newton_residue_matches", newton == ev.residue, newton.str());
        }
        const auto secondary = families::secondary_contribution_check(base_dim, a, b);
        if (secondary.applicable) {
          ev.add("secondary_contribution_zero", secondary.value.is_zero(), "E_" + std::to_string(secondary.k));
        }
        break;
      }
    }
  } catch (const Error& e) {
    ev.add("family_constraints", false, e.what());
  }
  return ev;
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

std::string checks_text(const std::vector<Check>& checks) {
  std::string out;
  for (const auto& c : checks) {
    if (!out.empty()) out += ',';
    out += c.name + (c.passed ? ":ok" : ":FAIL");
  }
  return out;
}

WitnessCertificate build(const Rational& s0, int dim, FamilyKind family, int base_dim, int i, int a, int b) {
  WitnessCertificate cert;
  cert.s0 = s0;
  cert.dim = base_dim;
  cert.family = family;
  cert.i = i;
  cert.a = a;
  cert.b = b;
  cert.base_dim = base_dim;
  Evidence ev = evaluate(family, base_dim, i, a, b, s0);
  cert.polynomial = ev.polynomial;
  cert.residue = ev.residue;
  cert.pole_order = ev.pole_order;
  cert.checks = std::move(ev.checks);
  if (!all_passed(cert.checks)) {
    throw Error(ErrorCode::InternalVerificationFailure,
                "witness for " + s0.str() + " failed: " + checks_text(cert.checks));
  }
  return lift_dimension(cert, dim);
}

int to_int(const BigInt& v, const char* what) {
  if (!v.fits_sint_p()) throw Error(ErrorCode::OutOfRange, std::string(what) + " too large");
  return static_cast<int>(v.get_si());
}

}  // namespace

std::string WitnessCertificate::params_text() const {
  switch (family) {
    case FamilyKind::AEven:
    case FamilyKind::AOdd: return "i=" + std::to_string(i);
    case FamilyKind::SumOfSquares: return "m=" + std::to_string(base_dim);
    case FamilyKind::B:
    case FamilyKind::C: break;
  }
  return "a=" + std::to_string(a) + ",b=" + std::to_string(b);
}

std::string WitnessCertificate::str() const {
  std::ostringstream os;
  os << "s0=" << s0 << '\n'
     << "n=" << dim << '\n'
     << "family=" << families::family_name(family) << '\n'
     << "params=" << params_text() << '\n'
     << "base_dim=" << base_dim << '\n'
     << "f=" << polynomial << " in " << ring(dim) << '\n'
     << "residue=" << residue << '\n'
     << "pole_order=" << pole_order << '\n'
     << "checks=" << checks_text(checks) << '\n';
  return os.str();
}

std::string WitnessCertificate::kv() const {
  std::ostringstream os;
  os << "s0=" << s0 << " n=" << dim << " family=" << families::family_name(family) << " params=" << params_text()
     << " base_dim=" << base_dim << " f=" << polynomial << " residue=" << residue << " pole_order=" << pole_order
     << " verified=" << (all_passed(checks) ? "true" : "false");
  return os.str();
}

CurveParams solve_curve_params(const Rational& t) {
  if (!(t > Rational(-1, 2) && t.sign() < 0)) throw Error(ErrorCode::OutOfRange, t.str() + " is not in (-1/2, 0)");
  // t = -p/q; -(b+2)/(2a+2b) = t  <=>  b = 2(pa - q)/(q - 2p).
  const BigInt p = -t.numerator();
  const BigInt q = t.denominator();
  const BigInt d = q - 2 * p;
  BigInt a = 4;
  while (p * a <= q) a += 2;
  const BigInt limit = a + 2 * d;
  for (; a <= limit; a += 2) {
    const BigInt num = p * a - q;
    if (num % d == 0) {
      const BigInt b = 2 * num / d;
      return {to_int(a, "a"), to_int(b, "b")};
    }
  }
  throw Error(ErrorCode::InternalVerificationFailure, "no curve parameters found for " + t.str());
}

WitnessCertificate witness_for(const Rational& s0, int n) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "n must be >= 2");
  const Rational lower(-(n - 1), 2);
  if (s0 < lower) {
    const Rational gap = lower - s0;  // 1/i for the family A poles
    if (n >= 4 && gap.numerator() == 1 && gap.denominator() >= 2) {
      const int i = to_int(gap.denominator(), "i");
      return build(s0, n, i % 2 == 0 ? FamilyKind::AEven : FamilyKind::AOdd, n, i, 0, 0);
    }
    throw Error(ErrorCode::OutOfRange, s0.str() + " is below -(n-1)/2 and not of the form -(n-1)/2-1/i");
  }
  if (s0.sign() >= 0) throw Error(ErrorCode::OutOfRange, s0.str() + " is not negative");

  const Rational twice = Rational(2) * s0;
  if (twice.is_integer()) {
    const int m = to_int(-twice.numerator(), "m");
    return build(s0, n, FamilyKind::SumOfSquares, m, 2, 0, 0);
  }
  // s0 in (-(m-1)/2, -(m-2)/2), shifted down from t in (-1/2, 0).
  const int m = to_int((-twice).floor(), "m") + 2;
  const Rational t = s0 + Rational(m - 2, 2);
  const CurveParams ab = solve_curve_params(t);
  if (m == 2) return build(s0, n, FamilyKind::B, 2, 0, ab.a, ab.b);
  return build(s0, n, FamilyKind::C, m, 0, ab.a, ab.b);
}

WitnessCertificate lift_dimension(const WitnessCertificate& cert, int n_new) {
  if (n_new < cert.dim) {
    throw Error(ErrorCode::BadDim, "cannot lift from " + std::to_string(cert.dim) + " to " + std::to_string(n_new));
  }
  WitnessCertificate out = cert;
  out.dim = n_new;
  return out;
}

std::string VerificationReport::str() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  os << (ok ? "verified" : "NOT verified") << '\n';
  return os.str();
}

VerificationReport verify_certificate(const WitnessCertificate& cert) {
  VerificationReport report;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  add("dimension", cert.base_dim >= 1 && cert.base_dim <= cert.dim && cert.dim >= 2,
      std::to_string(cert.base_dim) + " <= " + std::to_string(cert.dim));
  const bool family_a = cert.family == FamilyKind::AEven || cert.family == FamilyKind::AOdd;
  add("domain", in_interval(cert.s0, cert.dim) || (family_a && cert.dim == cert.base_dim), cert.s0.str());

  Evidence ev = evaluate(cert.family, cert.base_dim, cert.i, cert.a, cert.b, cert.s0);
  for (auto& c : ev.checks) report.checks.push_back(std::move(c));
  add("residue_matches_record", ev.residue == cert.residue, ev.residue.str());
  add("pole_order_matches_record", ev.pole_order == cert.pole_order, std::to_string(ev.pole_order));
  add("polynomial_matches_record", ev.polynomial == cert.polynomial, ev.polynomial);
  add("pole_evidence", !cert.residue.is_zero() || cert.pole_order >= 1);
  report.ok = all_passed(report.checks);
  return report;
}

}  // namespace ztop::witness
