#include "ztop/resolution.hpp"

#include <algorithm>
#include <map>

#include "ztop/error.hpp"

namespace ztop::resolution {

const Component& ResolutionData::component(ComponentId id) const {
  const auto it = std::find_if(components.begin(), components.end(),
                               [id](const Component& c) { return c.id == id; });
  if (it == components.end()) throw Error(ErrorCode::UnknownId, "no component with id " + std::to_string(id));
  return *it;
}

bool ResolutionData::has_component(ComponentId id) const {
  return std::any_of(components.begin(), components.end(), [id](const Component& c) { return c.id == id; });
}

int DualGraph::degree(ComponentId id) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [id](const auto& e) {
    return e.first == id || e.second == id;
  }));
}

void validate(const ResolutionData& data) {
  std::set<ComponentId> ids;
  for (const auto& c : data.components) {
    if (!ids.insert(c.id).second) throw Error(ErrorCode::BadData, "duplicate component id " + std::to_string(c.id));
    if (c.n_mult < 1 || c.v_mult < 1) {
      throw Error(ErrorCode::BadData, "component " + std::to_string(c.id) + " needs N >= 1 and nu >= 1");
    }
  }
  std::set<std::vector<ComponentId>> seen;
  for (const auto& s : data.strata) {
    std::vector<ComponentId> members = s.members;
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw Error(ErrorCode::BadData, "stratum lists a component twice");
    }
    for (ComponentId id : members) {
      if (!ids.count(id)) throw Error(ErrorCode::BadData, "stratum references unknown id " + std::to_string(id));
    }
    if (!seen.insert(members).second) throw Error(ErrorCode::BadData, "duplicate stratum member set");
  }
}

RatFunc zeta_from_strata(const ResolutionData& data) {
  validate(data);
  RatFunc z;
  for (const auto& s : data.strata) {
    if (s.chi == 0) continue;
    std::vector<LinFactor> factors;
    for (ComponentId id : s.members) {
      const Component& c = data.component(id);
      factors.push_back({c.n_mult, c.v_mult, 1});
    }
    z = z + RatFunc(Poly::constant(Rational(s.chi)), std::move(factors));
  }
  return z;
}

std::set<Rational> candidate_poles(const ResolutionData& data) {
  std::set<Rational> out;
  for (const auto& c : data.components) out.insert(c.candidate_pole());
  return out;
}

Rational alpha(const ResolutionData& data, ComponentId target, ComponentId other) {
  const Component& t = data.component(target);
  const Component& o = data.component(other);
  return Rational(o.v_mult) + t.candidate_pole() * Rational(o.n_mult);
}

Rational alpha_contribution(const ResolutionData& data, ComponentId component, const Rational& s0) {
  const Component& c = data.component(component);
  if (c.candidate_pole() != s0) {
    throw Error(ErrorCode::BadData, "component " + std::to_string(component) + " does not have candidate pole " + s0.str());
  }
  Rational sum;
  for (const auto& s : data.strata) {
    if (s.chi == 0 || std::find(s.members.begin(), s.members.end(), component) == s.members.end()) continue;
    Rational term(s.chi);
    for (ComponentId j : s.members) {
      if (j == component) continue;
      const Component& other = data.component(j);
      const Rational a = Rational(other.v_mult) + s0 * Rational(other.n_mult);
      if (a.is_zero()) {
        throw Error(ErrorCode::HigherOrderPole, "stratum through components " + std::to_string(component) + " and " +
                                                    std::to_string(j) + " which share the pole " + s0.str());
      }
      term /= a;
    }
    sum += term;
  }
  return sum / Rational(c.n_mult);
}

Rational residue_via_alpha(const ResolutionData& data, const Rational& s0) {
  validate(data);
  Rational total;
  for (const auto& c : data.components) {
    if (c.candidate_pole() == s0) total += alpha_contribution(data, c.id, s0);
  }
  return total;
}

Rational lct(const ResolutionData& data) {
  bool any = false;
  Rational best;
  for (const auto& c : data.components) {
    if (!c.meets_fiber) continue;
    const Rational q(c.v_mult, c.n_mult);
    if (!any || q < best) best = q;
    any = true;
  }
  if (!any) throw Error(ErrorCode::EmptyFiber, "no component meets the fiber over 0");
  return best;
}

ResolutionData curve_strata_from_graph(const DualGraph& graph) {
  ResolutionData data;
  data.dim = 2;
  data.variant = Variant::Local;
  data.components = graph.vertices;
  try {
    validate(data);
  } catch (const Error& e) {
    throw Error(ErrorCode::BadGraph, e.what());
  }
  std::set<std::pair<ComponentId, ComponentId>> seen;
  for (auto [u, v] : graph.edges) {
    if (u == v) throw Error(ErrorCode::BadGraph, "self-loop at " + std::to_string(u));
    if (!data.has_component(u) || !data.has_component(v)) {
      throw Error(ErrorCode::BadGraph, "edge references unknown vertex");
    }
    if (data.component(u).kind == Kind::Strict && data.component(v).kind == Kind::Strict) {
      throw Error(ErrorCode::BadGraph, "two strict-transform vertices cannot meet in a resolution");
    }
    if (!seen.insert(std::minmax(u, v)).second) throw Error(ErrorCode::BadGraph, "duplicate edge");
  }
  for (const auto& c : graph.vertices) {
    if (c.kind == Kind::Exceptional) data.strata.push_back({{c.id}, 2 - graph.degree(c.id)});
  }
  for (auto [u, v] : seen) data.strata.push_back({{u, v}, 1});
  return data;
}

}  // namespace ztop::resolution
