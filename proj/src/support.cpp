#include "hecke_atlas/support.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hecke_atlas/error.hpp"

namespace hecke_atlas::support {

std::vector<Orbit> orbits(const LDParameter& phi0) {
  std::map<std::string, Orbit> by_label;
  for (const auto& s : phi0.summands) {
    if (!s.point.f.is_one()) throw InputError("phi0 is not normed: " + s.to_string());
    if (s.a != 1) throw InputError("phi0 is not trivial on SL2: " + s.to_string());
    const auto& cls = s.point.cls;
    if (!cls->self_dual && cls->partner < cls->label) continue;
    Orbit o{cls, cls->self_dual, s.mult, false, false};
    if (cls->self_dual) {
      o.of_type_plus = weil::is_of_type(s.point, phi0.ambient);
      o.of_type_minus = weil::is_of_type({cls, UnitMonomial::minus_one()}, phi0.ambient);
    }
    by_label.emplace(cls->label, std::move(o));
  }
  std::vector<Orbit> out;
  for (auto& [label, o] : by_label) out.push_back(std::move(o));
  return out;
}

int staircase_dim(int a, bool of_type) { return of_type ? a * a : a * (a + 1); }

std::string SupportDatum::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(entries[i].first) + "," + std::to_string(entries[i].second);
  }
  return out + ")";
}

std::vector<SupportDatum> supports(const LDParameter& phi0) {
  auto orbs = orbits(phi0);
  std::vector<std::vector<std::pair<int, int>>> choices;
  for (const auto& o : orbs) {
    std::vector<std::pair<int, int>> c;
    if (!o.self_dual) {
      c.emplace_back(0, 0);
    } else {
      for (int ap = 0; staircase_dim(ap, o.of_type_plus) <= o.m; ++ap) {
        const int dp = staircase_dim(ap, o.of_type_plus);
        for (int am = 0; dp + staircase_dim(am, o.of_type_minus) <= o.m; ++am) {
          const int total = dp + staircase_dim(am, o.of_type_minus);
          if ((o.m - total) % 2 == 0) c.emplace_back(ap, am);
        }
      }
    }
    choices.push_back(std::move(c));
  }
  std::vector<SupportDatum> out{SupportDatum{}};
  for (const auto& c : choices) {
    std::vector<SupportDatum> next;
    for (const auto& partial : out) {
      for (const auto& e : c) {
        auto d = partial;
        d.entries.push_back(e);
        next.push_back(std::move(d));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int m_pm(const std::vector<Orbit>& orbs, const SupportDatum& s, std::size_t i) {
  if (!orbs[i].self_dual) return 0;
  return staircase_dim(s.entries[i].first, orbs[i].of_type_plus) +
         staircase_dim(s.entries[i].second, orbs[i].of_type_minus);
}

int tail_rank(weil::Family family, int L) {
  switch (family) {
    case weil::Family::Orthogonal: return L % 2 == 1 ? (L - 1) / 2 : L / 2;
    case weil::Family::Symplectic: return L / 2;
    case weil::Family::Unitary: return L;
  }
  return 0;
}

namespace {

void check_support(const std::vector<Orbit>& orbs, const SupportDatum& s) {
  if (s.entries.size() != orbs.size()) throw InputError("support datum has wrong number of entries");
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    const auto [ap, am] = s.entries[i];
    if (ap < 0 || am < 0) throw InputError("support datum has negative entries");
    if (!orbs[i].self_dual) {
      if (ap || am) throw InputError("support datum is nonzero on a dual pair");
      continue;
    }
    const int mpm = m_pm(orbs, s, i);
    if (mpm > orbs[i].m || (orbs[i].m - mpm) % 2 != 0)
      throw InputError("support datum " + s.to_string() + " violates the staircase bound at " + orbs[i].label());
  }
}

}  // namespace

PhiS build_phi_S(const Inventory& inv, const LDParameter& phi0, const SupportDatum& s) {
  auto orbs = orbits(phi0);
  check_support(orbs, s);
  std::vector<params::LDSummand> blocks;
  std::vector<params::LDSummand> levi_param;
  int L = 0;
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    const auto& o = orbs[i];
    if (!o.self_dual) {
      levi_param.push_back({{o.cls, UnitMonomial::one()}, 1, o.m});
      levi_param.push_back({{inv.get(o.cls->partner), UnitMonomial::one()}, 1, o.m});
      continue;
    }
    const int kp = o.of_type_plus ? 1 : 0;
    const int km = o.of_type_minus ? 1 : 0;
    for (int k = 1; k <= s.entries[i].first; ++k)
      blocks.push_back({{o.cls, UnitMonomial::one()}, 2 * k - kp, 1});
    for (int k = 1; k <= s.entries[i].second; ++k)
      blocks.push_back({{o.cls, UnitMonomial::minus_one()}, 2 * k - km, 1});
    const int mpm = m_pm(orbs, s, i);
    L += o.cls->dim * mpm;
    if (o.m > mpm) levi_param.push_back({{o.cls, UnitMonomial::one()}, 1, o.m - mpm});
  }
  PhiS out;
  out.L_S = L;
  weil::DualGroupDescriptor tail{phi0.ambient.family, L, phi0.ambient.twist};
  for (const auto& b : blocks) levi_param.push_back(b);
  out.phi_S = params::build_ld_parameter(inv, std::move(blocks), tail);
  out.l_S = tail_rank(tail.family, L);
  LDParameter levi{phi0.ambient, std::move(levi_param)};
  out.d_S = params::det_discrepancy(levi, phi0);
  return out;
}

std::string Levi::to_string() const {
  std::string out;
  for (const auto& f : gl) {
    if (f.count == 0) continue;
    out += "GL" + std::to_string(f.k) + "^" + std::to_string(f.count) + "[" + f.label + "] x ";
  }
  return out + "^LH(" + weil::family_name(tail_family) + "," + std::to_string(tail_dim) + ")";
}

Levi build_levi(const LDParameter& phi0, const SupportDatum& s) {
  auto orbs = orbits(phi0);
  check_support(orbs, s);
  Levi levi;
  levi.tail_family = phi0.ambient.family;
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    const auto& o = orbs[i];
    if (!o.self_dual) {
      levi.gl.push_back({o.cls->dim, o.m, o.label()});
      continue;
    }
    const int mpm = m_pm(orbs, s, i);
    levi.gl.push_back({o.cls->dim, (o.m - mpm) / 2, o.label()});
    levi.tail_dim += o.cls->dim * mpm;
  }
  levi.tail_rank = tail_rank(levi.tail_family, levi.tail_dim);
  return levi;
}

CuspidalPairs cuspidal_pairs(const Inventory& inv, const LDParameter& phi0) {
  CuspidalPairs out;
  for (const auto& s : supports(phi0)) {
    auto phi = build_phi_S(inv, phi0, s);
    auto levi = build_levi(phi0, s);
    auto chars = params::alternating_characters(phi.phi_S);
    const bool degenerate = phi.l_S == 0 && chars.size() >= 2;
    for (auto& eps : chars) {
      out.pairs.push_back({s, phi, levi, std::move(eps), degenerate});
      if (degenerate) ++out.degenerate;
    }
  }
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    const auto& p = out.pairs[i];
    std::string key = p.levi.to_string() + "|" + p.phi.phi_S.to_string() + "|";
    for (int v : p.eps.values) key += v > 0 ? '+' : '-';
    auto [it, inserted] = seen.emplace(key, i);
    if (!inserted) out.duplicates.emplace_back(it->second, i);
  }
  return out;
}

}  // namespace hecke_atlas::support
