#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ztop/rational.hpp"
#include "ztop/ratfunc.hpp"

namespace ztop::resolution {

using ComponentId = int;

enum class Kind { Exceptional, Strict };
enum class Variant { Local, Global };

/// One irreducible component E_i with numerical data (N_i, nu_i).
struct Component {
  ComponentId id = 0;
  std::int64_t n_mult = 1;
  std::int64_t v_mult = 1;
  Kind kind = Kind::Exceptional;
  bool meets_fiber = true;

  /// -nu/N
  Rational candidate_pole() const { return Rational(-v_mult, n_mult); }

  friend bool operator==(const Component&, const Component&) = default;
};

/// E°_I with its Euler characteristic. An empty member set is the ambient term.
struct Stratum {
  std::vector<ComponentId> members;  // sorted, unique
  std::int64_t chi = 0;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct ResolutionData {
  int dim = 1;
  Variant variant = Variant::Local;
  std::vector<Component> components;
  std::vector<Stratum> strata;  // strata with chi = 0 may be omitted

  const Component& component(ComponentId id) const;
  bool has_component(ComponentId id) const;
};

struct DualGraph {
  std::vector<Component> vertices;
  std::vector<std::pair<ComponentId, ComponentId>> edges;

  int degree(ComponentId id) const;
};

/// Throws BadData on duplicate ids, duplicate member sets, unknown stratum
/// members or non-positive numerical data.
void validate(const ResolutionData& data);

/// Sum over strata of chi_I * prod_{i in I} 1/(N_i s + nu_i).
RatFunc zeta_from_strata(const ResolutionData& data);

/// { -nu_i/N_i } over all components.
std::set<Rational> candidate_poles(const ResolutionData& data);

/// nu_other - (nu_target/N_target) * N_other
Rational alpha(const ResolutionData& data, ComponentId target, ComponentId other);

/// Contribution of a single component with candidate pole s0 to the residue at
/// s0: (1/N_c) * sum over strata I containing c of chi_I * prod 1/alpha_j.
Rational alpha_contribution(const ResolutionData& data, ComponentId component, const Rational& s0);

/// Residue at s0 summed over every component whose candidate pole is s0.
/// Uses only the strata present in `data`, so partial data is fine as long
/// as it lists every stratum through those components.
Rational residue_via_alpha(const ResolutionData& data, const Rational& s0);

/// Log canonical threshold: min nu/N over components meeting the fiber.
Rational lct(const ResolutionData& data);

/// Local curve data from a dual graph whose exceptional vertices are all
/// rational curves: chi = 2 - deg for exceptional singletons, 1 per edge.
ResolutionData curve_strata_from_graph(const DualGraph& graph);

/// Line-oriented text format, see README.
ResolutionData parse_resolution(std::istream& in);
ResolutionData parse_resolution_file(const std::string& path);
std::string render_resolution(const ResolutionData& data);

}  // namespace ztop::resolution
