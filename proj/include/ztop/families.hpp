#pragma once

#include <map>
#include <string>
#include <vector>

#include "ztop/rational.hpp"
#include "ztop/resolution.hpp"

namespace ztop::families {

using resolution::ComponentId;

enum class FamilyKind { AEven, AOdd, B, C, SumOfSquares };

std::string_view family_name(FamilyKind kind);

struct TraceStep {
  std::string center;
  std::string equation;  // strict transform in the relevant chart; may be empty
};

/// Resolution data for one of the studied families, restricted to what the
/// residue at the target pole needs unless `complete` is set.
struct FamilyData {
  FamilyKind kind = FamilyKind::AEven;
  int dim = 0;
  int i = 0;  // family A
  int a = 0;  // families B, C
  int b = 0;
  resolution::ResolutionData data;
  bool complete = false;
  ComponentId target_id = 0;
  Rational target_pole;
  std::map<ComponentId, Rational> alphas;  // neighbours of the target
  std::vector<TraceStep> trace;
};

struct CurveFamilyData {
  int a = 0;
  int b = 0;
  resolution::DualGraph graph;
  resolution::ResolutionData data;  // complete, from the graph
  ComponentId target_id = 0;
  Rational expected_pole;
};

/// x1^i + x2^2 + ... + xn^2 with i even; n >= 4.
FamilyData family_a_even(int n, int i);
/// x1^i + x2^2 + ... + xn^2 with i odd >= 3; n >= 4.
FamilyData family_a_odd(int n, int i);
/// x^a (x^b + y^2), a, b even, a >= 4.
CurveFamilyData family_b_curve(int a, int b);
/// xn^2 + ... + x3^2 + x1^a (x1^b + x2^2); n >= 3, a, b even, a >= 4.
FamilyData family_c(int n, int a, int b);

/// x1^2 + ... + xm^2 for m >= 1 with complete strata. Pole -m/2.
FamilyData sum_of_squares(int m);

/// Printed closed form of the family C residue at its target pole.
Rational residue_closed_form_c(int n, int a, int b);

struct SecondaryCheck {
  bool applicable = false;
  int k = 0;  // (a+b)/(2+b) when applicable
  Rational value;
};

/// Contribution of E_k, k = (a+b)/(2+b), to the family C residue at the
/// target pole. Must be zero whenever applicable.
SecondaryCheck secondary_contribution_check(int n, int a, int b);

/// Residue at the target pole through the alpha formula on the stored strata.
Rational residue_via_alpha(const FamilyData& family);

/// Display form of the polynomial, e.g. `x3^2+x1^4*(x1^2+x2^2)`.
std::string polynomial_text(const FamilyData& family);
std::string polynomial_text(const CurveFamilyData& family);

/// Resolution-data file with a descriptive header, for `--emit`.
std::string emit_text(const FamilyData& family);
std::string emit_text(const CurveFamilyData& family);

}  // namespace ztop::families
