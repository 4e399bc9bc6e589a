#pragma once

#include <string>
#include <vector>

#include "ztop/families.hpp"
#include "ztop/rational.hpp"

namespace ztop::witness {

using families::FamilyKind;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// A verified claim that `polynomial` in `dim` variables has a topological
/// zeta function with a pole at s0. The polynomial lives in `base_dim`
/// variables; the remaining ones are unused.
struct WitnessCertificate {
  Rational s0;
  int dim = 2;
  FamilyKind family = FamilyKind::B;
  int i = 0;  // families A
  int a = 0;  // families B, C
  int b = 0;
  int base_dim = 2;
  std::string polynomial;  // in x1..x_base_dim
  Rational residue;
  int pole_order = 0;  // 0 when no full zeta is available
  std::vector<Check> checks;

  std::string params_text() const;
  /// Multi-line block.
  std::string str() const;
  /// Single-line key=value form.
  std::string kv() const;
};

struct CurveParams {
  int a = 0;
  int b = 0;
  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// Smallest even a >= 4 (and matching even b > 0) with -(b+2)/(2a+2b) = t,
/// for t in (-1/2, 0).
CurveParams solve_curve_params(const Rational& t);

/// Builds and verifies a witness for s0 in [-(n-1)/2, 0), or for
/// s0 = -(n-1)/2 - 1/i when n >= 4. Throws OutOfRange outside that domain and
/// InternalVerificationFailure if any check fails.
WitnessCertificate witness_for(const Rational& s0, int n);

/// The same polynomial seen in more variables; the zeta function is unchanged.
WitnessCertificate lift_dimension(const WitnessCertificate& cert, int n_new);

struct VerificationReport {
  bool ok = false;
  std::vector<Check> checks;
  std::string str() const;
};

/// Re-derives every check from the certificate's parameters alone.
VerificationReport verify_certificate(const WitnessCertificate& cert);

}  // namespace ztop::witness
