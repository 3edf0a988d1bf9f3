#include "hecke_atlas/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "hecke_atlas/error.hpp"

namespace hecke_atlas::hecke {

std::string root_family_name(RootFamily f) {
  switch (f) {
    case RootFamily::GL: return "GL";
    case RootFamily::SO: return "SO";
    case RootFamily::Sp: return "Sp";
  }
  return "?";
}

namespace {

std::string half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace

std::string HeckeFactor::to_string() const {
  std::string out = root_family_name(family) + std::to_string(size);
  if (extended) out += "xZ/2";
  if (equal) return out + " equal q^" + half(internal2);
  return out + " q^" + half(internal2) + ",...,q^" + half(end_long2) + ";q^" + half(end_short2);
}

HeckeFactor equal_factor(RootFamily family, int size, int t, bool extended) {
  return {family, size, extended, t, true, 2 * t, 2 * t, 2 * t};
}

HeckeFactor unequal_factor(int size, int t, int end_long2, int end_short2) {
  return {RootFamily::SO, size, false, t, false, 2 * t, end_long2, end_short2};
}

HeckeFactor orbit_factor(const support::Orbit& o, int a_plus, int a_minus) {
  const int t = o.cls->torsion;
  if (!o.self_dual) return equal_factor(RootFamily::GL, o.m, t);
  if (o.of_type_plus && o.of_type_minus && a_plus == 0 && a_minus == 0)
    return equal_factor(RootFamily::SO, o.m, t, true);
  const int mpm = support::staircase_dim(a_plus, o.of_type_plus) + support::staircase_dim(a_minus, o.of_type_minus);
  const int kp = o.of_type_plus ? 0 : 1;
  const int km = o.of_type_minus ? 0 : 1;
  const int size = o.m - mpm + 1;
  if (size % 2 == 0) throw ContractError("hecke_factor: even size SO" + std::to_string(size) + " in the unequal case");
  return unequal_factor(size, t, t * (2 * a_plus + 2 * a_minus + kp + km),
                        t * std::abs(2 * a_plus - 2 * a_minus + kp - km));
}

HeckeFactor hecke_factor(const LDParameter& phi0, const SupportDatum& s, std::size_t orbit_index) {
  auto orbs = support::orbits(phi0);
  if (orbit_index >= orbs.size()) throw InputError("hecke_factor: orbit index out of range");
  if (s.entries.size() != orbs.size()) throw InputError("hecke_factor: support datum has wrong length");
  const auto [ap, am] = s.entries[orbit_index];
  return orbit_factor(orbs[orbit_index], ap, am);
}

std::vector<HeckeFactor> hecke_descriptor(const LDParameter& phi0, const SupportDatum& s) {
  auto orbs = support::orbits(phi0);
  if (s.entries.size() != orbs.size()) throw InputError("hecke_descriptor: support datum has wrong length");
  std::vector<HeckeFactor> out;
  for (std::size_t i = 0; i < orbs.size(); ++i)
    out.push_back(orbit_factor(orbs[i], s.entries[i].first, s.entries[i].second));
  return out;
}

HeckeFactor sp_normalization(const HeckeFactor& f) {
  if (f.family != RootFamily::SO || f.extended || f.equal) return f;
  if (f.end_long2 != f.internal2 || f.end_short2 != 0) return f;
  return equal_factor(RootFamily::Sp, f.size - 1, f.t);
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::SoOdd: return "so-odd";
    case Kind::Sp: return "sp";
    case Kind::OEven: return "o-even";
    case Kind::Unitary: return "unitary";
  }
  return "?";
}

Kind parse_kind(const std::string& name) {
  if (name == "so-odd" || name == "so_odd") return Kind::SoOdd;
  if (name == "sp") return Kind::Sp;
  if (name == "o-even" || name == "o_even") return Kind::OEven;
  if (name == "unitary" || name == "u") return Kind::Unitary;
  throw InputError("unknown kind \"" + name + "\"");
}

std::string bucket_name(Bucket b) {
  switch (b) {
    case Bucket::Plus: return "+";
    case Bucket::Minus: return "-";
    case Bucket::Any: return "any";
  }
  return "?";
}

namespace {

/// a with a(a+1) == d, or -1.
int consecutive_root(int d) {
  for (int a = 0; a * (a + 1) <= d; ++a)
    if (a * (a + 1) == d) return a;
  return -1;
}

std::vector<int> consecutive_products(int bound) {
  std::vector<int> out;
  for (int a = 0; a * (a + 1) <= bound; ++a) out.push_back(a * (a + 1));
  return out;
}

std::vector<int> squares(int bound) {
  std::vector<int> out;
  for (int a = 0; a * a <= bound; ++a) out.push_back(a * a);
  return out;
}

int isqrt_exact(int d) {
  for (int a = 0; a * a <= d; ++a)
    if (a * a == d) return a;
  return -1;
}

}  // namespace

std::vector<TableRow> specialize(Kind kind, int rank) {
  if (rank < 1) throw InputError("specialize: rank must be positive");
  std::vector<TableRow> rows;
  switch (kind) {
    case Kind::SoOdd: {
      const int d = rank;
      for (int dp : consecutive_products(2 * d + 1)) {
        for (int dm : consecutive_products(2 * d + 1 - dp)) {
          const int ap = consecutive_root(dp), am = consecutive_root(dm);
          HeckeFactor f = (dp == 0 && dm == 0)
                              ? equal_factor(RootFamily::Sp, 2 * d, 1)
                              : unequal_factor(2 * d + 1 - dp - dm, 1, 2 * (ap + am + 1), 2 * std::abs(ap - am));
          const Bucket b = ((dp + dm) / 2) % 2 == 0 ? Bucket::Plus : Bucket::Minus;
          rows.push_back({dp, dm, f, b, 1});
        }
      }
      break;
    }
    case Kind::Sp: {
      const int d = rank;
      for (int dp : squares(2 * d + 1)) {
        for (int dm : squares(2 * d + 1 - dp)) {
          if ((dp + dm) % 2 == 0) continue;
          const int ap = isqrt_exact(dp), am = isqrt_exact(dm);
          rows.push_back({dp, dm, unequal_factor(2 * d + 2 - dp - dm, 1, 2 * (ap + am), 2 * std::abs(ap - am)),
                          Bucket::Any, 2});
        }
      }
      break;
    }
    case Kind::OEven: {
      const int d = rank;
      for (int dp : squares(2 * d + 1)) {
        for (int dm : squares(2 * d + 1 - dp)) {
          if ((dp + dm) % 2 != 0) continue;
          const int ap = isqrt_exact(dp), am = isqrt_exact(dm);
          HeckeFactor f = (dp == 0 && dm == 0)
                              ? equal_factor(RootFamily::SO, 2 * d, 1, true)
                              : unequal_factor(2 * d + 1 - dp - dm, 1, 2 * (ap + am), 2 * std::abs(ap - am));
          rows.push_back({dp, dm, f, Bucket::Plus, epsilon_multiplicity(dp, dm, 1)});
          rows.push_back({dp, dm, f, Bucket::Minus, epsilon_multiplicity(dp, dm, -1)});
        }
      }
      break;
    }
    case Kind::Unitary: {
      const int m = rank;
      const int d = m / 2;
      const bool odd = m % 2 == 1;
      for (int dp : squares(2 * d + 1)) {
        if ((dp % 2 == 1) != odd) continue;
        for (int dm : consecutive_products(2 * d + 1 - dp)) {
          const int ap = isqrt_exact(dp), am = consecutive_root(dm);
          const int size = (dp + dm) % 2 == 0 ? 2 * d + 1 - dp - dm : 2 * d + 2 - dp - dm;
          HeckeFactor f = unequal_factor(size, 1, 2 * ap + 2 * am + 1, std::abs(2 * ap - 2 * am - 1));
          if (odd) {
            rows.push_back({dp, dm, f, Bucket::Plus, 1});
            rows.push_back({dp, dm, f, Bucket::Minus, 1});
          } else if ((dp / 2) % 2 == 0) {
            rows.push_back({dp, dm, f, Bucket::Plus, dp != 0 ? 2 : 1});
          } else {
            rows.push_back({dp, dm, f, Bucket::Minus, 2});
          }
        }
      }
      break;
    }
  }
  return rows;
}

int epsilon_multiplicity(int d_plus, int d_minus, int sign) {
  const int sum = d_plus + d_minus;
  const bool dp_even = d_plus % 2 == 0;
  int plus = 2;
  if (dp_even && sum % 8 == 0 && d_plus * d_minus != 0) {
    plus = 4;
  } else if (d_plus == 0 && d_minus == 0) {
    plus = 1;
  } else if (dp_even && sum % 4 == 0 && sum % 8 != 0) {
    plus = 0;
  }
  if (sign > 0) return plus;
  if (d_plus * d_minus != 0) return 4 - plus;
  if (d_plus != 0 || d_minus != 0) return 2 - plus;
  return 0;
}

Setting trivial_setting(Kind kind, int rank) {
  if (rank < 1) throw InputError("trivial_setting: rank must be positive");
  using weil::SelfDualityType;
  weil::InertialClass cls;
  cls.label = "triv";
  cls.type_plus = SelfDualityType::Orthogonal;
  cls.type_minus = SelfDualityType::Orthogonal;
  weil::DualGroupDescriptor g;
  switch (kind) {
    case Kind::SoOdd: g = {weil::Family::Symplectic, 2 * rank}; break;
    case Kind::Sp: g = {weil::Family::Orthogonal, 2 * rank + 1}; break;
    case Kind::OEven: g = {weil::Family::Orthogonal, 2 * rank}; break;
    case Kind::Unitary:
      g = {weil::Family::Unitary, rank};
      cls.label = "one_E";
      if (rank % 2 == 1) {
        cls.type_plus = SelfDualityType::ConjugateOrthogonal;
        cls.type_minus = SelfDualityType::ConjugateSymplectic;
      } else {
        cls.type_plus = SelfDualityType::ConjugateSymplectic;
        cls.type_minus = SelfDualityType::ConjugateOrthogonal;
      }
      break;
  }
  Setting s;
  s.inv = Inventory({cls});
  s.phi0 = params::build_ld_parameter(s.inv, {{weil::orbit_point(s.inv, cls.label, UnitMonomial::one()), 1, g.ambient_dim}}, g);
  return s;
}

std::vector<DerivedRow> derived_rows(Kind kind, int rank) {
  auto setting = trivial_setting(kind, rank);
  auto orbs = support::orbits(setting.phi0);
  auto pairs = support::cuspidal_pairs(setting.inv, setting.phi0);
  std::vector<DerivedRow> out;
  for (const auto& p : pairs.pairs) {
    const auto [ap, am] = p.S.entries[0];
    DerivedRow r;
    r.d_plus = support::staircase_dim(ap, orbs[0].of_type_plus);
    r.d_minus = support::staircase_dim(am, orbs[0].of_type_minus);
    r.factor = sp_normalization(orbit_factor(orbs[0], ap, am));
    r.eps_z = p.eps.eps_z;
    out.push_back(r);
  }
  return out;
}

int derived_multiplicity(Kind kind, int rank, int d_plus, int d_minus, int sign) {
  int count = 0;
  for (const auto& r : derived_rows(kind, rank))
    if (r.d_plus == d_plus && r.d_minus == d_minus && (sign == 0 || r.eps_z == sign)) ++count;
  return count;
}

std::vector<Reduction> unipotent_reduction(const LDParameter& phi0) {
  std::vector<Reduction> out;
  for (const auto& o : support::orbits(phi0)) {
    Reduction r;
    r.degree = o.cls->torsion;
    r.orbit = o.label();
    if (!o.self_dual) {
      r.family = "GL";
      r.size = o.m;
    } else if (!o.of_type_plus) {
      r.family = "SO";
      r.size = o.m + 1;
    } else if (o.of_type_minus) {
      r.family = o.m % 2 == 1 ? "Sp" : "O";
      r.size = o.m % 2 == 1 ? o.m - 1 : o.m;
    } else {
      r.family = "U";
      r.size = o.m;
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool factorization_check(const Inventory& inv, const LDParameter& phi0, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto orbs = support::orbits(phi0);
  std::vector<std::vector<std::pair<int, int>>> local;
  for (const auto& o : orbs) {
    std::vector<std::pair<int, int>> c;
    if (!o.self_dual) {
      local.push_back({{0, 0}});
      continue;
    }
    for (int ap = 0; ap <= o.m; ++ap)
      for (int am = 0; am <= o.m; ++am) {
        const int mpm = support::staircase_dim(ap, o.of_type_plus) + support::staircase_dim(am, o.of_type_minus);
        if (mpm <= o.m && (o.m - mpm) % 2 == 0) c.emplace_back(ap, am);
      }
    local.push_back(std::move(c));
  }
  std::size_t expected = 1;
  for (const auto& c : local) expected *= c.size();
  auto all = support::supports(phi0);
  if (all.size() != expected) return fail("support count is not the product of orbit counts");
  for (const auto& s : all) {
    auto desc = hecke_descriptor(phi0, s);
    auto phi = support::build_phi_S(inv, phi0, s);
    std::size_t chars = params::alternating_characters(phi.phi_S).size();
    std::size_t product = 1;
    for (std::size_t i = 0; i < orbs.size(); ++i) {
      const auto [ap, am] = s.entries[i];
      if (std::find(local[i].begin(), local[i].end(), s.entries[i]) == local[i].end())
        return fail("support " + s.to_string() + " has an entry outside the orbit list");
      if (!(desc[i] == orbit_factor(orbs[i], ap, am))) return fail("factor of orbit " + orbs[i].label() + " depends on other orbits");
      if (orbs[i].self_dual) product *= std::size_t{1} << ((ap > 0 && orbs[i].of_type_plus) + (am > 0 && orbs[i].of_type_minus));
    }
    if (chars != product) return fail("alternating characters at " + s.to_string() + " do not factor");
  }
  return true;
}

}  // namespace hecke_atlas::hecke
