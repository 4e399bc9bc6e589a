#include "ztop/families.hpp"

#include <sstream>

#include "ztop/error.hpp"

namespace ztop::families {

using resolution::Component;
using resolution::Kind;
using resolution::Stratum;

namespace {

Component exceptional(ComponentId id, std::int64_t n, std::int64_t v) { return {id, n, v, Kind::Exceptional, true}; }
Component strict(ComponentId id, std::int64_t n, std::int64_t v) { return {id, n, v, Kind::Strict, true}; }

Stratum stratum(std::vector<ComponentId> members, std::int64_t chi) {
  std::sort(members.begin(), members.end());
  return {std::move(members), chi};
}

bool is_even(int x) { return x % 2 == 0; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

void check_ab(int a, int b) {
  require(a > 0 && b > 0 && is_even(a) && is_even(b), "a and b must be positive even integers");
  require(a != 2, "a = 2 is excluded");
}

// The stored alphas come from closed forms; they must agree with the values
// recomputed from the numerical data.
void check_alphas_and_pole(const FamilyData& f) {
  const Component& target = f.data.component(f.target_id);
  if (target.candidate_pole() != f.target_pole) {
    throw Error(ErrorCode::InternalVerificationFailure,
                "target pole " + f.target_pole.str() + " differs from -nu/N = " + target.candidate_pole().str());
  }
  for (const auto& [id, value] : f.alphas) {
    const Rational recomputed = resolution::alpha(f.data, f.target_id, id);
    if (recomputed != value) {
      throw Error(ErrorCode::InternalVerificationFailure, "alpha_" + std::to_string(id) + " = " + value.str() +
                                                              " but numerical data give " + recomputed.str());
    }
  }
}

// One blow-up of the origin resolves x1^2 + ... + xn^2: E_1(2, n) is P^{n-1}
// and meets the strict transform E_0 in a smooth quadric of dimension n-2.
FamilyData single_blowup(int n) {
  FamilyData f;
  f.kind = FamilyKind::SumOfSquares;
  f.dim = n;
  f.i = 2;
  f.data.dim = n;
  f.data.components = {exceptional(1, 2, n), strict(0, 1, 1)};
  const std::int64_t quadric_chi = is_even(n) ? n : n - 1;
  const std::int64_t open_chi = is_even(n) ? 0 : 1;
  f.data.strata = {stratum({1}, open_chi), stratum({0, 1}, quadric_chi)};
  f.complete = true;
  f.target_id = 1;
  f.target_pole = Rational(-n, 2);
  f.alphas = {{0, Rational(2 - n, 2)}};
  f.trace = {{"origin", ""}};
  check_alphas_and_pole(f);
  return f;
}

std::string squares(int from, int down_to) {
  std::string out;
  for (int v = from; v >= down_to; --v) out += "x" + std::to_string(v) + "^2+";
  return out;
}

std::string x1_power(int e) { return e == 1 ? "x1" : "x1^" + std::to_string(e); }

}  // namespace

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::AEven: return "A-even";
    case FamilyKind::AOdd: return "A-odd";
    case FamilyKind::B: return "B";
    case FamilyKind::C: return "C";
    case FamilyKind::SumOfSquares: return "sum-of-squares";
  }
  return "?";
}

FamilyData family_a_even(int n, int i) {
  require(n >= 4, "family A needs n >= 4");
  require(i >= 2 && is_even(i), "family A-even needs even i >= 2");
  if (i == 2) {
    FamilyData f = single_blowup(n);
    f.kind = FamilyKind::AEven;
    return f;
  }
  const int t = i / 2;
  FamilyData f;
  f.kind = FamilyKind::AEven;
  f.dim = n;
  f.i = i;
  f.data.dim = n;
  for (int k = 1; k <= t; ++k) f.data.components.push_back(exceptional(k, 2 * k, (n - 1) * (k - 1) + n));
  f.data.components.push_back(strict(0, 1, 1));

  // Euler characteristics of the chain strata, keyed by parity of n.
  const std::int64_t chi[2][4] = {{-1, 1, 2, n - 2}, {1, 0, 0, n - 1}};
  const auto& c = chi[n % 2];
  f.data.strata = {stratum({t}, c[0]), stratum({t, t - 1}, c[1]), stratum({t, 0}, c[2]),
                   stratum({t, t - 1, 0}, c[3])};
  f.target_id = t;
  f.target_pole = Rational(-(n - 1), 2) - Rational(1, i);
  f.alphas = {{0, Rational(3 - n, 2) - Rational(1, i)}, {t - 1, Rational(2, i)}};
  for (int k = 1; k <= t; ++k) f.trace.push_back({"origin", ""});
  check_alphas_and_pole(f);
  return f;
}

FamilyData family_a_odd(int n, int i) {
  require(n >= 4, "family A needs n >= 4");
  require(i >= 3 && !is_even(i), "family A-odd needs odd i >= 3");
  const int p = (i - 1) / 2;
  const int q = (i + 1) / 2;
  const int t = (i + 3) / 2;
  FamilyData f;
  f.kind = FamilyKind::AOdd;
  f.dim = n;
  f.i = i;
  f.data.dim = n;
  for (int k = 1; k <= p; ++k) f.data.components.push_back(exceptional(k, 2 * k, (n - 1) * (k - 1) + n));
  f.data.components.push_back(exceptional(q, i, (n - 1) * (i - 1) / 2 + n));
  f.data.components.push_back(exceptional(t, 2 * i, (n - 1) * i + 2));
  f.data.components.push_back(strict(0, 1, 1));

  // Euler characteristics for odd i, keyed by parity of n.
  const std::int64_t chi[2][5] = {{-1, 1, n - 1, 1, n - 2}, {0, 0, n - 1, 0, n - 1}};
  const auto& c = chi[n % 2];
  f.data.strata = {stratum({t}, c[0]), stratum({t, 0}, c[1]), stratum({t, q}, c[2]), stratum({t, p}, c[3]),
                   stratum({t, p, 0}, c[4])};
  f.target_id = t;
  f.target_pole = Rational(-(n - 1), 2) - Rational(1, i);
  f.alphas = {{0, Rational(3 - n, 2) - Rational(1, i)}, {p, Rational(1, i)}, {q, Rational(n - 1, 2)}};
  for (int k = 1; k <= q; ++k) f.trace.push_back({"origin", ""});
  f.trace.push_back({"E_" + std::to_string(q) + " & E_" + std::to_string(p), ""});
  check_alphas_and_pole(f);
  return f;
}

CurveFamilyData family_b_curve(int a, int b) {
  check_ab(a, b);
  const int last = b / 2;
  const ComponentId v1 = last + 1;
  const ComponentId v2 = last + 2;
  CurveFamilyData f;
  f.a = a;
  f.b = b;
  f.graph.vertices.push_back(strict(0, a, 1));
  for (int k = 1; k <= last; ++k) f.graph.vertices.push_back(exceptional(k, a + 2 * k, k + 1));
  f.graph.vertices.push_back(strict(v1, 1, 1));
  f.graph.vertices.push_back(strict(v2, 1, 1));
  f.graph.edges.emplace_back(0, 1);
  for (int k = 1; k < last; ++k) f.graph.edges.emplace_back(k, k + 1);
  f.graph.edges.emplace_back(last, v1);
  f.graph.edges.emplace_back(last, v2);
  f.data = resolution::curve_strata_from_graph(f.graph);
  f.target_id = last;
  f.expected_pole = Rational(-(b + 2), 2 * a + 2 * b);
  if (f.data.component(last).candidate_pole() != f.expected_pole) {
    throw Error(ErrorCode::InternalVerificationFailure, "family B target pole mismatch");
  }
  return f;
}

FamilyData family_c(int n, int a, int b) {
  require(n >= 3, "family C needs n >= 3");
  check_ab(a, b);
  const int t = (a + b) / 2;
  FamilyData f;
  f.kind = FamilyKind::C;
  f.dim = n;
  f.a = a;
  f.b = b;
  f.data.dim = n;
  for (int k = 1; k <= a / 2; ++k) f.data.components.push_back(exceptional(k, 2 * k, (n - 2) * k + 1));
  for (int j = 1; j <= b / 2; ++j) {
    f.data.components.push_back(exceptional(a / 2 + j, a + 2 * j, (n - 2) * (a / 2 + j) + j + 1));
  }
  f.data.components.push_back(strict(0, 1, 1));

  // Same chain strata as the even family A for the target component.
  const std::int64_t chi[2][4] = {{-1, 1, 2, n - 2}, {1, 0, 0, n - 1}};
  const auto& c = chi[n % 2];
  f.data.strata = {stratum({t}, c[0]), stratum({t, t - 1}, c[1]), stratum({t, 0}, c[2]),
                   stratum({t, t - 1, 0}, c[3])};
  // E_k with k = (a+b)/(2+b) shares the target pole; it needs its own strata.
  if ((a + b) % (2 + b) == 0) {
    const int k = (a + b) / (2 + b);
    const std::int64_t chi4[2][6] = {{0, 0, 0, 0, n - 2, n - 2}, {0, 1, 1, 0, n - 3, n - 3}};
    const auto& d = chi4[n % 2];
    for (auto s : {stratum({k}, d[0]), stratum({k, k - 1}, d[1]), stratum({k, k + 1}, d[2]), stratum({k, 0}, d[3]),
                   stratum({k, k - 1, 0}, d[4]), stratum({k, k + 1, 0}, d[5])}) {
      f.data.strata.push_back(std::move(s));
    }
  }
  f.target_id = t;
  f.target_pole = Rational(-(b + 2), 2 * a + 2 * b) - Rational(n - 2, 2);
  f.alphas = {{0, Rational(-((n - 4) * a + (n - 3) * b + 2), 2 * (a + b))}, {t - 1, Rational(2 - a, a + b)}};

  // Blow-up centers and strict transforms.
  const std::string sq = squares(n, 3);
  std::string line_center = "x1";
  for (int v = 3; v <= n; ++v) line_center += "=x" + std::to_string(v);
  line_center += "=0";
  const std::string x1b = x1_power(b);
  for (int r = 1; r <= a / 2; ++r) {
    const int e = a - 2 * r;
    f.trace.push_back({line_center, e > 0 ? sq + x1_power(e) + "*(" + x1b + "+x2^2)" : sq + x1b + "+x2^2"});
  }
  for (int j = 1; j <= b / 2; ++j) {
    const int e = b - 2 * j;
    f.trace.push_back({"origin", sq + (e > 0 ? x1_power(e) : std::string("1")) + "+x2^2"});
  }
  check_alphas_and_pole(f);
  return f;
}

FamilyData sum_of_squares(int m) {
  require(m >= 1, "sum of squares needs m >= 1");
  if (m >= 2) return single_blowup(m);
  // x1^2 is already a normal crossings divisor: one strict component (2, 1)
  // whose open part meets the fiber in the origin.
  FamilyData f;
  f.kind = FamilyKind::SumOfSquares;
  f.dim = 1;
  f.i = 2;
  f.data.dim = 1;
  f.data.components = {strict(0, 2, 1)};
  f.data.strata = {stratum({0}, 1)};
  f.complete = true;
  f.target_id = 0;
  f.target_pole = Rational(-1, 2);
  check_alphas_and_pole(f);
  return f;
}

Rational residue_closed_form_c(int n, int a, int b) {
  require(n >= 3, "family C needs n >= 3");
  check_ab(a, b);
  const std::int64_t common = static_cast<std::int64_t>(n) * a - 2 * a - b + static_cast<std::int64_t>(n) * b + 2;
  const std::int64_t den = static_cast<std::int64_t>(a - 2) * (a + b) *
                           (static_cast<std::int64_t>(n) * a - 4 * a + 2 + static_cast<std::int64_t>(n) * b - 3 * b);
  const std::int64_t lead = is_even(n) ? 2 + b : -2 + 3 * a + 2 * b;
  return Rational(BigInt(static_cast<long>(lead)) * common, BigInt(static_cast<long>(den)));
}

SecondaryCheck secondary_contribution_check(int n, int a, int b) {
  require(n >= 3, "family C needs n >= 3");
  check_ab(a, b);
  SecondaryCheck out;
  if ((a + b) % (2 + b) != 0) return out;
  out.applicable = true;
  out.k = (a + b) / (2 + b);
  const FamilyData f = family_c(n, a, b);
  const Rational below = resolution::alpha(f.data, out.k, out.k - 1);
  const Rational above = resolution::alpha(f.data, out.k, out.k + 1);
  if (below != Rational(1, out.k) || above != Rational(-1, out.k)) {
    throw Error(ErrorCode::InternalVerificationFailure,
                "neighbour alphas of E_" + std::to_string(out.k) + " are " + below.str() + ", " + above.str());
  }
  out.value = resolution::alpha_contribution(f.data, out.k, f.target_pole);
  return out;
}

Rational residue_via_alpha(const FamilyData& family) {
  return resolution::residue_via_alpha(family.data, family.target_pole);
}

std::string polynomial_text(const FamilyData& f) {
  switch (f.kind) {
    case FamilyKind::AEven:
    case FamilyKind::AOdd: {
      std::string out = x1_power(f.i);
      for (int v = 2; v <= f.dim; ++v) out += "+x" + std::to_string(v) + "^2";
      return out;
    }
    case FamilyKind::SumOfSquares: {
      std::string out = "x1^2";
      for (int v = 2; v <= f.dim; ++v) out += "+x" + std::to_string(v) + "^2";
      return out;
    }
    case FamilyKind::C:
      return squares(f.dim, 3) + x1_power(f.a) + "*(" + x1_power(f.b) + "+x2^2)";
    case FamilyKind::B:
      break;
  }
  return x1_power(f.a) + "*(" + x1_power(f.b) + "+x2^2)";
}

std::string polynomial_text(const CurveFamilyData& f) {
  return x1_power(f.a) + "*(" + x1_power(f.b) + "+x2^2)";
}

std::string emit_text(const FamilyData& f) {
  std::ostringstream os;
  os << "# family " << family_name(f.kind) << " n=" << f.dim;
  if (f.kind == FamilyKind::C) {
    os << " a=" << f.a << " b=" << f.b;
  } else {
    os << " i=" << f.i;
  }
  os << "\n# f = " << polynomial_text(f) << '\n';
  if (!f.complete) os << "# partial: target-pole strata only\n";
  os << "# target component " << f.target_id << ", pole " << f.target_pole.str() << '\n';
  os << resolution::render_resolution(f.data);
  return os.str();
}

std::string emit_text(const CurveFamilyData& f) {
  std::ostringstream os;
  os << "# family B a=" << f.a << " b=" << f.b << "\n# f = " << polynomial_text(f) << '\n';
  os << "# target component " << f.target_id << ", pole " << f.expected_pole.str() << '\n';
  os << resolution::render_resolution(f.data);
  return os.str();
}

}  // namespace ztop::families
