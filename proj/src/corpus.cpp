#include "hecke_atlas/corpus.hpp"

#include <functional>

#include "hecke_atlas/error.hpp"
#include "hecke_atlas/support.hpp"

namespace hecke_atlas::corpus {

using weil::SelfDualityType;

Inventory test_inventory() {
  auto self_dual = [](std::string label, int dim, SelfDualityType p, SelfDualityType m) {
    weil::InertialClass c;
    c.label = std::move(label);
    c.dim = dim;
    c.type_plus = p;
    c.type_minus = m;
    return c;
  };
  auto paired = [](std::string label, std::string partner) {
    weil::InertialClass c;
    c.label = std::move(label);
    c.torsion = 2;
    c.self_dual = false;
    c.partner = std::move(partner);
    return c;
  };
  return Inventory({
      self_dual("triv", 1, SelfDualityType::Orthogonal, SelfDualityType::Orthogonal),
      self_dual("sym2", 2, SelfDualityType::Symplectic, SelfDualityType::Symplectic),
      self_dual("mix_os", 2, SelfDualityType::Orthogonal, SelfDualityType::Symplectic),
      self_dual("mix_so", 2, SelfDualityType::Symplectic, SelfDualityType::Orthogonal),
      paired("eta", "eta_dual"),
      paired("eta_dual", "eta"),
  });
}

std::vector<DualGroupDescriptor> orthosymplectic_ambients(int max_dim) {
  std::vector<DualGroupDescriptor> out;
  for (int n = 1; n <= max_dim; ++n) out.push_back({weil::Family::Orthogonal, n});
  for (int n = 2; n <= max_dim; n += 2) out.push_back({weil::Family::Symplectic, n});
  return out;
}

bool class_fits(const weil::InertialClass& cls, const DualGroupDescriptor& g) {
  if (!cls.self_dual) return true;
  return weil::is_conjugate_type(cls.type_plus) == (g.family == weil::Family::Unitary);
}

namespace {

std::vector<weil::InertialPoint> self_dual_points(const Inventory& inv, const DualGroupDescriptor& g) {
  std::vector<weil::InertialPoint> out;
  for (const auto& label : inv.labels()) {
    const auto& cls = inv.get(label);
    if (!cls->self_dual || !class_fits(*cls, g)) continue;
    out.push_back({cls, UnitMonomial::one()});
    out.push_back({cls, UnitMonomial::minus_one()});
  }
  return out;
}

}  // namespace

std::vector<LDParameter> supercuspidal_shapes(const Inventory& inv, const DualGroupDescriptor& g) {
  const auto points = self_dual_points(inv, g);
  std::vector<LDParameter> out;
  std::vector<params::LDSummand> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == points.size()) {
      if (left == 0) out.push_back(params::build_ld_parameter(inv, cur, g));
      return;
    }
    const auto& p = points[i];
    const bool of_type = weil::is_of_type(p, g);
    const int k = p.cls->dim;
    for (int a = 0; k * support::staircase_dim(a, of_type) <= left; ++a) {
      const std::size_t mark = cur.size();
      for (int j = 1; j <= a; ++j) cur.push_back({p, 2 * j - (of_type ? 1 : 0), 1});
      rec(i + 1, left - k * support::staircase_dim(a, of_type));
      cur.resize(mark);
    }
  };
  rec(0, g.ambient_dim);
  return out;
}

std::vector<LDParameter> discrete_parameters(const Inventory& inv, const DualGroupDescriptor& g) {
  std::vector<params::LDSummand> candidates;
  for (const auto& p : self_dual_points(inv, g))
    for (int a = 1; p.cls->dim * a <= g.ambient_dim; ++a)
      if (params::summand_type(p, a, g)) candidates.push_back({p, a, 1});
  std::vector<LDParameter> out;
  std::vector<params::LDSummand> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (left == 0) {
      out.push_back(params::build_ld_parameter(inv, cur, g));
      return;
    }
    if (i == candidates.size()) return;
    const int d = candidates[i].point.cls->dim * candidates[i].a;
    if (d <= left) {
      cur.push_back(candidates[i]);
      rec(i + 1, left - d);
      cur.pop_back();
    }
    rec(i + 1, left);
  };
  rec(0, g.ambient_dim);
  return out;
}

std::vector<LDParameter> normed_parameters(const Inventory& inv, const DualGroupDescriptor& g) {
  struct Slot {
    std::shared_ptr<const weil::InertialClass> cls;
    int step;   // multiplicity granularity
    int width;  // dimension per unit of multiplicity
  };
  std::vector<Slot> slots;
  for (const auto& label : inv.labels()) {
    const auto& cls = inv.get(label);
    if (!class_fits(*cls, g)) continue;
    if (cls->self_dual) {
      if (!weil::satisfies_normed_convention(*cls, g)) continue;
      const bool of_type = weil::is_of_type({cls, UnitMonomial::one()}, g);
      slots.push_back({cls, of_type ? 1 : 2, cls->dim});
    } else if (cls->label < cls->partner) {
      slots.push_back({cls, 1, 2 * cls->dim});
    }
  }
  std::vector<LDParameter> out;
  std::vector<params::LDSummand> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == slots.size()) {
      if (left == 0 && !cur.empty()) out.push_back(params::build_ld_parameter(inv, cur, g));
      return;
    }
    const auto& s = slots[i];
    for (int m = 0; m * s.width <= left; m += s.step) {
      const std::size_t mark = cur.size();
      if (m > 0) {
        cur.push_back({{s.cls, UnitMonomial::one()}, 1, m});
        if (!s.cls->self_dual) cur.push_back({{inv.get(s.cls->partner), UnitMonomial::one()}, 1, m});
      }
      rec(i + 1, left - m * s.width);
      cur.resize(mark);
    }
  };
  rec(0, g.ambient_dim);
  return out;
}

std::vector<LDParameter> supercuspidal_corpus(const Inventory& inv, int max_dim) {
  std::vector<LDParameter> out;
  for (const auto& g : orthosymplectic_ambients(max_dim))
    for (auto& p : supercuspidal_shapes(inv, g)) out.push_back(std::move(p));
  return out;
}

std::vector<LDParameter> discrete_corpus(const Inventory& inv, int max_dim) {
  std::vector<LDParameter> out;
  for (const auto& g : orthosymplectic_ambients(max_dim))
    for (auto& p : discrete_parameters(inv, g)) out.push_back(std::move(p));
  return out;
}

std::vector<LDParameter> normed_corpus(const Inventory& inv, int max_dim) {
  std::vector<LDParameter> out;
  for (const auto& g : orthosymplectic_ambients(max_dim))
    for (auto& p : normed_parameters(inv, g)) out.push_back(std::move(p));
  return out;
}

namespace {

/// Ways to spread m eigenvalues over a self-dual orbit: counts at 1 and -1
/// plus pairs {x, x^-1} from the palette.
std::vector<std::vector<std::pair<UnitMonomial, int>>> self_dual_spreads(int m, bool even_signs) {
  const UnitMonomial palette[] = {UnitMonomial::root_of_unity(1, 4), UnitMonomial::q_power(1),
                                  UnitMonomial::minus_one() * UnitMonomial::q_power(2)};
  std::vector<std::vector<std::pair<UnitMonomial, int>>> out;
  for (int plus = 0; plus <= m; ++plus)
    for (int minus = 0; plus + minus <= m; ++minus) {
      if (even_signs && (plus % 2 || minus % 2)) continue;
      const int rest = m - plus - minus;
      if (rest % 2) continue;
      const int pairs = rest / 2;
      for (int p0 = 0; p0 <= pairs; ++p0)
        for (int p1 = 0; p0 + p1 <= pairs; ++p1) {
          const int p2 = pairs - p0 - p1;
          std::map<UnitMonomial, int> acc;
          if (plus) acc[UnitMonomial::one()] += plus;
          if (minus) acc[UnitMonomial::minus_one()] += minus;
          const int counts[] = {p0, p1, p2};
          for (int j = 0; j < 3; ++j)
            if (counts[j]) {
              acc[palette[j]] += counts[j];
              acc[palette[j].inverse()] += counts[j];
            }
          out.emplace_back(acc.begin(), acc.end());
        }
    }
  return out;
}

std::vector<std::vector<std::pair<UnitMonomial, int>>> pair_spreads(int m) {
  const UnitMonomial palette[] = {UnitMonomial::one(), UnitMonomial::minus_one(), UnitMonomial::root_of_unity(1, 4),
                                  UnitMonomial::q_power(1), UnitMonomial::minus_one() * UnitMonomial::q_power(2)};
  std::vector<std::vector<std::pair<UnitMonomial, int>>> out;
  std::vector<int> counts(5, 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == 4) {
      counts[4] = left;
      std::map<UnitMonomial, int> acc;
      for (int i = 0; i < 5; ++i)
        if (counts[i]) acc[palette[i]] += counts[i];
      out.emplace_back(acc.begin(), acc.end());
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[j] = c;
      rec(j + 1, left - c);
    }
  };
  rec(0, m);
  return out;
}

}  // namespace

std::vector<SInstance> semisimple_family(const Inventory& inv, int max_dim) {
  std::vector<SInstance> out;
  for (const auto& phi0 : normed_corpus(inv, max_dim)) {
    const auto orbs = support::orbits(phi0);
    std::vector<std::vector<std::vector<std::pair<UnitMonomial, int>>>> choices;
    for (const auto& o : orbs)
      choices.push_back(o.self_dual ? self_dual_spreads(o.m, !o.of_type_plus) : pair_spreads(o.m));
    centralizer::SemisimpleClass s;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == orbs.size()) {
        try {
          centralizer::parameter_of_s(inv, phi0, s);
        } catch (const InputError&) {
          return;
        }
        out.push_back({phi0, s});
        return;
      }
      for (const auto& values : choices[i]) {
        s.blocks.push_back({orbs[i].label(), values});
        rec(i + 1);
        s.blocks.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace hecke_atlas::corpus
