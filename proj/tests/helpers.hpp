#pragma once

#include <string>
#include <vector>

#include "hecke_atlas/params.hpp"

namespace th {

using namespace hecke_atlas;
using weil::Family;
using weil::SelfDualityType;

inline weil::InertialClass sd(const std::string& label, int dim, SelfDualityType p, SelfDualityType m, int torsion = 1) {
  weil::InertialClass c;
  c.label = label;
  c.dim = dim;
  c.torsion = torsion;
  c.type_plus = p;
  c.type_minus = m;
  return c;
}

inline weil::InertialClass pair(const std::string& label, const std::string& partner, int dim = 1, int torsion = 1) {
  weil::InertialClass c;
  c.label = label;
  c.dim = dim;
  c.torsion = torsion;
  c.self_dual = false;
  c.partner = partner;
  return c;
}

constexpr auto O = SelfDualityType::Orthogonal;
constexpr auto S = SelfDualityType::Symplectic;

inline UnitMonomial plus() { return UnitMonomial::one(); }
inline UnitMonomial minus() { return UnitMonomial::minus_one(); }

struct Term {
  std::string label;
  UnitMonomial f;
  int a;
  int mult;
};

inline params::LDParameter param(const weil::Inventory& inv, weil::DualGroupDescriptor g, const std::vector<Term>& terms) {
  std::vector<params::LDSummand> s;
  for (const auto& t : terms) s.push_back({weil::orbit_point(inv, t.label, t.f), t.a, t.mult});
  return params::build_ld_parameter(inv, s, g);
}

/// triv (O,O), sym2 (S,S), mix (O,S), plus a dual pair eta/eta_dual.
inline weil::Inventory small_inventory() {
  return weil::Inventory({sd("triv", 1, O, O), sd("sym2", 2, S, S), sd("mix", 2, O, S), pair("eta", "eta_dual", 1, 2),
                          pair("eta_dual", "eta", 1, 2)});
}

}  // namespace th
