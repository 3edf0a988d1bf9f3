#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke_atlas/params.hpp"

namespace hecke_atlas::support {

using params::LDParameter;
using params::SignCharacter;
using weil::Inventory;

/// An orbit of supp(phi0) under rho ~ rho^vee. For a self-dual class the
/// representative is the normed point; for a dual pair it is the smaller
/// label.
struct Orbit {
  std::shared_ptr<const weil::InertialClass> cls;
  bool self_dual = true;
  int m = 0;
  bool of_type_plus = false;
  bool of_type_minus = false;
  const std::string& label() const { return cls->label; }
};

/// Throws InputError unless phi0 is normed and trivial on SL_2.
std::vector<Orbit> orbits(const LDParameter& phi0);

/// sum_{k=1..a} (2k - kappa') = a^2 (kappa' = 1) or a(a+1) (kappa' = 0).
int staircase_dim(int a, bool of_type);

/// One (a_plus, a_minus) per orbit, aligned with orbits(phi0); (0, 0) on
/// dual pairs.
struct SupportDatum {
  std::vector<std::pair<int, int>> entries;
  bool operator==(const SupportDatum&) const = default;
  auto operator<=>(const SupportDatum&) const = default;
  std::string to_string() const;
};

/// Lexicographic in the flattened (a_plus, a_minus) vector.
std::vector<SupportDatum> supports(const LDParameter& phi0);

/// m_pm(rho; phi^S) for orbit i.
int m_pm(const std::vector<Orbit>& orbs, const SupportDatum& s, std::size_t i);

struct PhiS {
  LDParameter phi_S;
  int L_S = 0;
  int l_S = 0;
  int d_S = 1;
};

/// Semisimple rank of the group whose dual embeds in GL_L of this family.
int tail_rank(weil::Family family, int L);

PhiS build_phi_S(const Inventory& inv, const LDParameter& phi0, const SupportDatum& s);

struct LeviFactor {
  int k = 1;
  int count = 0;
  std::string label;
  bool operator==(const LeviFactor&) const = default;
};

struct Levi {
  std::vector<LeviFactor> gl;
  weil::Family tail_family = weil::Family::Orthogonal;
  int tail_dim = 0;
  int tail_rank = 0;
  bool operator==(const Levi&) const = default;
  std::string to_string() const;
};

Levi build_levi(const LDParameter& phi0, const SupportDatum& s);

struct CuspidalSupport {
  SupportDatum S;
  PhiS phi;
  Levi levi;
  SignCharacter eps;
  /// l_S = 0 with two or more alternating characters.
  bool degenerate = false;
};

struct CuspidalPairs {
  std::vector<CuspidalSupport> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;
  int degenerate = 0;
};

CuspidalPairs cuspidal_pairs(const Inventory& inv, const LDParameter& phi0);

}  // namespace hecke_atlas::support
