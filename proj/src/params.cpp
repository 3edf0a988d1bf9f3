#include "hecke_atlas/params.hpp"

#include <algorithm>
#include <map>

#include "hecke_atlas/error.hpp"

namespace hecke_atlas::params {

std::string LDSummand::to_string() const {
  std::string out = point.to_string() + "(x)sp(" + std::to_string(a) + ")";
  if (mult != 1) out = std::to_string(mult) + "*" + out;
  return out;
}

std::string LDParameter::to_string() const {
  std::string out;
  for (const auto& s : summands) {
    if (!out.empty()) out += " + ";
    out += s.to_string();
  }
  return out.empty() ? "0" : out;
}

int LDParameter::total_dim() const {
  int n = 0;
  for (const auto& s : summands) n += s.mult * s.a * s.point.cls->dim;
  return n;
}

bool summand_type(const InertialPoint& p, int a, const DualGroupDescriptor& g) {
  if (a < 1) throw InputError("sl2 dimension must be positive");
  return weil::is_of_type(p, g) != (a % 2 == 0);
}

namespace {

bool summand_less(const LDSummand& x, const LDSummand& y) {
  if (auto c = x.point <=> y.point; c != 0) return c < 0;
  return x.a < y.a;
}

}  // namespace

LDParameter build_ld_parameter(const Inventory& inv, std::vector<LDSummand> summands,
                               const DualGroupDescriptor& ambient) {
  weil::validate(ambient);
  for (const auto& s : summands) {
    if (!s.point.cls) throw InputError("summand without class");
    if (!inv.contains(s.point.label())) throw InputError("class " + s.point.label() + " not in inventory");
    if (s.a < 1) throw InputError("summand " + s.point.to_string() + ": sl2 dimension must be positive");
    if (s.mult < 1) throw InputError("summand " + s.point.to_string() + ": multiplicity must be positive");
  }
  std::sort(summands.begin(), summands.end(), summand_less);
  std::vector<LDSummand> merged;
  for (auto& s : summands) {
    if (!merged.empty() && merged.back().point == s.point && merged.back().a == s.a) {
      merged.back().mult += s.mult;
    } else {
      merged.push_back(std::move(s));
    }
  }
  LDParameter phi{ambient, std::move(merged)};
  if (phi.total_dim() != ambient.ambient_dim)
    throw InputError("dimension mismatch: summands give " + std::to_string(phi.total_dim()) +
                     ", ambient is " + std::to_string(ambient.ambient_dim));

  std::vector<LDSummand> dual;
  for (const auto& s : phi.summands) dual.push_back({weil::dual_point(inv, s.point), s.a, s.mult});
  std::sort(dual.begin(), dual.end(), summand_less);
  if (dual != phi.summands) throw InputError("parameter is not closed under duality: " + phi.to_string());

  for (const auto& s : phi.summands) {
    if (!weil::is_self_dual(s.point)) continue;
    if (!summand_type(s.point, s.a, ambient) && s.mult % 2 != 0)
      throw InputError("summand " + s.to_string() + " is not of type ^LG and has odd multiplicity");
  }
  return phi;
}

std::vector<PointBlock> point_blocks(const LDParameter& phi) {
  std::vector<PointBlock> blocks;
  for (const auto& s : phi.summands) {
    if (blocks.empty() || !(blocks.back().point == s.point)) {
      PointBlock b{s.point, false, {}};
      if (weil::is_self_dual(s.point)) b.of_type = weil::is_of_type(s.point, phi.ambient);
      blocks.push_back(std::move(b));
    }
    for (int i = 0; i < s.mult; ++i) blocks.back().dims.push_back(s.a);
  }
  return blocks;
}

bool is_supercuspidal_shape(const LDParameter& phi) {
  for (const auto& s : phi.summands)
    if (s.mult != 1 || !weil::is_self_dual(s.point)) return false;
  for (const auto& b : point_blocks(phi)) {
    int start = b.of_type ? 1 : 2;
    for (std::size_t k = 0; k < b.dims.size(); ++k)
      if (b.dims[k] != start + 2 * static_cast<int>(k)) return false;
  }
  return true;
}

bool is_discrete(const LDParameter& phi) {
  for (const auto& s : phi.summands) {
    if (s.mult != 1 || !weil::is_self_dual(s.point)) return false;
    if (!summand_type(s.point, s.a, phi.ambient)) return false;
  }
  return true;
}

ComponentGroup component_group(const LDParameter& phi) {
  ComponentGroup g;
  for (const auto& s : phi.summands) {
    if (s.mult != 1) throw ContractError("component_group: repeated summand " + s.to_string());
    g.generators.push_back("z[" + s.point.label() + "," + s.point.f.to_string() + "," + std::to_string(s.a) + "]");
    g.minus_element.push_back(1);
  }
  return g;
}

std::vector<SignCharacter> alternating_characters(const LDParameter& phi) {
  if (!is_supercuspidal_shape(phi)) throw ContractError("alternating_characters: not of supercuspidal shape");
  auto blocks = point_blocks(phi);
  std::vector<std::size_t> free_blocks;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].of_type) free_blocks.push_back(i);
  std::vector<SignCharacter> out;
  const std::uint64_t count = std::uint64_t{1} << free_blocks.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<int> first(blocks.size(), -1);
    for (std::size_t j = 0; j < free_blocks.size(); ++j)
      first[free_blocks[j]] = (mask >> j) & 1 ? -1 : 1;
    SignCharacter chi;
    chi.is_alternating = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t k = 0; k < blocks[i].dims.size(); ++k) {
        int v = (k % 2 == 0) ? first[i] : -first[i];
        chi.values.push_back(v);
        chi.eps_z *= v;
      }
    }
    out.push_back(std::move(chi));
  }
  return out;
}

TypeCounts type_counts(const LDParameter& phi) {
  TypeCounts t;
  for (const auto& b : point_blocks(phi)) {
    if (!b.of_type) {
      ++t.not_of_type;
    } else if (b.dims.size() % 2 == 1) {
      ++t.t_odd;
    } else {
      ++t.t_even;
    }
  }
  return t;
}

std::int64_t count_supercuspidals(const LDParameter& phi, int sign) {
  if (!is_supercuspidal_shape(phi)) throw ContractError("count_supercuspidals: not of supercuspidal shape");
  auto t = type_counts(phi);
  const std::int64_t total = std::int64_t{1} << (t.t_odd + t.t_even);
  const std::int64_t plus_if_any = std::int64_t{1} << (t.t_o() - 1 + t.t_even);
  bool exists = true;
  if (!weil::group_is_symplectic(phi.ambient) && t.t_odd == 0) {
    int prod = 1;
    for (const auto& b : point_blocks(phi)) {
      const int a = static_cast<int>(b.dims.size());
      if (!b.of_type) {
        if ((a * (a + 1) / 2) % 2 != 0) prod = -prod;
      } else if ((a / 2) % 2 != 0) {
        prod = -prod;
      }
    }
    exists = prod == 1;
  }
  const std::int64_t plus = exists ? plus_if_any : 0;
  return sign > 0 ? plus : total - plus;
}

std::int64_t brute_force_supercuspidals(const LDParameter& phi, int sign) {
  if (!is_supercuspidal_shape(phi)) throw ContractError("brute_force_supercuspidals: not of supercuspidal shape");
  const auto n = phi.summands.size();
  if (n > 24) throw ContractError("brute_force_supercuspidals: too many summands");
  std::vector<bool> of_type;
  for (const auto& s : phi.summands) of_type.push_back(weil::is_of_type(s.point, phi.ambient));
  std::int64_t hits = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    int eps = 1;
    std::size_t block_start = 0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const int v = (mask >> i) & 1 ? -1 : 1;
      eps *= v;
      if (i == 0 || !(phi.summands[i].point == phi.summands[i - 1].point)) {
        block_start = i;
        if (!of_type[i] && v != -1) ok = false;
      } else {
        const int first = (mask >> block_start) & 1 ? -1 : 1;
        const int k = static_cast<int>(i - block_start);
        if (v != ((k % 2 == 0) ? first : -first)) ok = false;
      }
    }
    if (ok && eps == sign) ++hits;
  }
  return hits;
}

int det_discrepancy(const LDParameter& phi, const LDParameter& phi0) {
  std::map<std::string, std::int64_t> labels;
  UnitMonomial unram;
  auto accumulate = [&](const LDParameter& p, int direction) {
    for (const auto& s : p.summands) {
      const std::int64_t e = static_cast<std::int64_t>(s.a) * s.mult;
      labels[s.point.cls->det_base] += direction * e;
      unram = unram * s.point.f.pow(direction * static_cast<std::int64_t>(s.point.cls->dim) * e);
    }
  };
  accumulate(phi, 1);
  accumulate(phi0, -1);
  for (const auto& [label, e] : labels)
    if (e != 0) throw InputError("det_discrepancy: determinant base " + label + " does not cancel");
  if (unram.is_one()) return 1;
  if (unram.is_minus_one()) return -1;
  throw InputError("det_discrepancy: discrepancy " + unram.to_string() + " is not a sign");
}

}  // namespace hecke_atlas::params
