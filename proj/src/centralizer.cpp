#include "hecke_atlas/centralizer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hecke_atlas/error.hpp"
#include "hecke_atlas/support.hpp"

namespace hecke_atlas::centralizer {

std::string group_family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::GL: return "GL";
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::O: return "O";
  }
  return "?";
}

void ClassicalGroup::canonicalize() {
  std::erase_if(factors, [](const GroupFactor& f) { return f.size == 0; });
  std::sort(factors.begin(), factors.end(), [](const GroupFactor& x, const GroupFactor& y) {
    if (x.block != y.block) return x.block < y.block;
    if (x.family != y.family) return x.family < y.family;
    return x.size < y.size;
  });
}

std::string ClassicalGroup::to_string() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " x ";
    out += group_family_name(f.family) + std::to_string(f.size) + "[" + f.block + "]";
  }
  if (out.empty()) out = "1";
  if (det_one_available) out += " (det=1 available)";
  return out;
}

bool ClassicalGroup::isomorphic(const ClassicalGroup& other) const {
  auto a = *this, b = other;
  a.canonicalize();
  b.canonicalize();
  return a.factors == b.factors;
}

namespace {

std::string orbit_label(const weil::InertialClass& cls) {
  if (cls.self_dual) return cls.label;
  return std::min(cls.label, cls.partner);
}

bool is_rep_class(const weil::InertialClass& cls) { return cls.self_dual || cls.label < cls.partner; }

/// Representative of {x, x^-1} for self-dual classes; x itself otherwise.
UnitMonomial canonical_x(const weil::InertialClass& cls, const UnitMonomial& f) {
  if (!cls.self_dual) return f;
  const auto inv = f.inverse();
  return inv < f ? inv : f;
}

std::string block_key(const std::string& orbit, const UnitMonomial& x, int a) {
  return orbit + "@" + x.to_string() + "/" + std::to_string(a);
}

GroupFamily family_of_point(const weil::InertialPoint& p, const weil::DualGroupDescriptor& g, int a = 1) {
  return params::summand_type(p, a, g) ? GroupFamily::O : GroupFamily::Sp;
}

}  // namespace

ImageCentralizer centralizer_of_image(const Inventory& inv, const LDParameter& phi) {
  (void)inv;
  ImageCentralizer out;
  out.group.det_one_available = phi.ambient.family == weil::Family::Orthogonal;
  for (const auto& s : phi.summands) {
    const auto& cls = *s.point.cls;
    const auto orbit = orbit_label(cls);
    if (weil::is_self_dual(s.point)) {
      const auto key = block_key(orbit, s.point.f, s.a);
      out.group.factors.push_back({family_of_point(s.point, phi.ambient, s.a), s.mult, key});
      out.gl_level.factors.push_back({GroupFamily::GL, s.mult, key});
      continue;
    }
    if (!is_rep_class(cls)) continue;
    if (cls.self_dual && !(canonical_x(cls, s.point.f) == s.point.f)) continue;
    const auto key = block_key(orbit, s.point.f, s.a);
    out.group.factors.push_back({GroupFamily::GL, s.mult, key});
    out.gl_level.factors.push_back({GroupFamily::GL, s.mult, key});
    out.gl_level.factors.push_back({GroupFamily::GL, s.mult, key + "^vee"});
  }
  out.group.canonicalize();
  out.gl_level.canonicalize();
  return out;
}

std::string SemisimpleClass::to_string() const {
  std::string out;
  for (const auto& b : blocks) {
    out += b.orbit + ":{";
    bool first = true;
    for (const auto& [x, m] : b.values) {
      if (!first) out += ",";
      first = false;
      out += x.to_string() + "^" + std::to_string(m);
    }
    out += "} ";
  }
  return out;
}

SemisimpleClass s_phi(const LDParameter& phi) {
  std::map<std::string, std::map<UnitMonomial, int>> acc;
  for (const auto& s : phi.summands) {
    const auto& cls = *s.point.cls;
    if (!is_rep_class(cls)) continue;
    acc[orbit_label(cls)][s.point.f] += s.mult * s.a;
  }
  SemisimpleClass out;
  for (auto& [orbit, values] : acc) {
    EigenBlock b{orbit, {}};
    for (auto& [x, m] : values) b.values.emplace_back(x, m);
    out.blocks.push_back(std::move(b));
  }
  return out;
}

SCentralizer centralizer_of_s(const LDParameter& phi0, const SemisimpleClass& s) {
  auto orbs = support::orbits(phi0);
  SCentralizer out;
  out.naive.det_one_available = out.modified.det_one_available = phi0.ambient.family == weil::Family::Orthogonal;
  std::set<std::string> used;
  for (const auto& o : orbs) {
    const EigenBlock* block = nullptr;
    for (const auto& b : s.blocks)
      if (b.orbit == o.label()) block = &b;
    if (!block) throw InputError("s has no eigenvalues on orbit " + o.label());
    used.insert(o.label());
    std::map<UnitMonomial, int> mult;
    int total = 0;
    for (const auto& [x, m] : block->values) {
      if (m < 0) throw InputError("negative eigenvalue multiplicity");
      mult[x] += m;
      total += m;
    }
    if (total != o.m)
      throw InputError("s does not centralize: orbit " + o.label() + " has " + std::to_string(total) +
                       " eigenvalues, expected " + std::to_string(o.m));
    if (!o.self_dual) {
      for (const auto& [x, m] : mult) {
        out.naive.factors.push_back({GroupFamily::GL, m, block_key(o.label(), x, 1)});
        out.modified.factors.push_back({GroupFamily::GL, m, block_key(o.label(), x, 1)});
      }
      continue;
    }
    const GroupFamily base = o.of_type_plus ? GroupFamily::O : GroupFamily::Sp;
    const GroupFamily at_minus = o.of_type_minus ? GroupFamily::O : GroupFamily::Sp;
    if (o.of_type_plus != o.of_type_minus) out.mixed = true;
    for (const auto& [x, m] : mult) {
      const auto key = block_key(o.label(), x, 1);
      if (x.is_one() || x.is_minus_one()) {
        if (base == GroupFamily::Sp && m % 2 != 0)
          throw InputError("s does not centralize: odd multiplicity of " + x.to_string() + " in Sp on " + o.label());
        out.naive.factors.push_back({base, m, key});
        out.modified.factors.push_back({x.is_one() ? base : at_minus, m, key});
        if (x.is_minus_one() && o.of_type_plus != o.of_type_minus) out.mixed_minus_mult += m;
        continue;
      }
      const auto inv = x.inverse();
      auto it = mult.find(inv);
      if (it == mult.end() || it->second != m)
        throw InputError("s does not centralize: " + x.to_string() + " and its inverse differ in multiplicity on " + o.label());
      if (inv < x) continue;
      out.naive.factors.push_back({GroupFamily::GL, m, key});
      out.modified.factors.push_back({GroupFamily::GL, m, key});
    }
  }
  for (const auto& b : s.blocks)
    if (!used.count(b.orbit)) throw InputError("s has eigenvalues on orbit " + b.orbit + " outside supp(phi0)");
  out.naive.canonicalize();
  out.modified.canonicalize();
  out.agree = out.naive.isomorphic(out.modified);
  return out;
}

ClassicalGroup c_prime(const LDParameter& phi0, const SemisimpleClass& s) { return centralizer_of_s(phi0, s).modified; }

LDParameter parameter_of_s(const Inventory& inv, const LDParameter& phi0, const SemisimpleClass& s) {
  std::vector<params::LDSummand> summands;
  for (const auto& b : s.blocks) {
    const auto& cls = inv.get(b.orbit);
    for (const auto& [x, m] : b.values) {
      if (m == 0) continue;
      summands.push_back({{cls, x}, 1, m});
      if (!cls->self_dual) summands.push_back({{inv.get(cls->partner), x.inverse()}, 1, m});
    }
  }
  return params::build_ld_parameter(inv, std::move(summands), phi0.ambient);
}

std::string UBlock::key() const { return orbit + "@" + x.to_string(); }

LDParameter normed_restriction(const LDParameter& phi) {
  std::map<std::string, std::pair<std::shared_ptr<const weil::InertialClass>, int>> acc;
  for (const auto& s : phi.summands) {
    auto& slot = acc[s.point.label()];
    slot.first = s.point.cls;
    slot.second += s.mult * s.a;
  }
  LDParameter out{phi.ambient, {}};
  for (auto& [label, slot] : acc) out.summands.push_back({{slot.first, UnitMonomial::one()}, 1, slot.second});
  return out;
}

namespace {

std::vector<std::pair<UnitMonomial, int>> ladder_eigenvalues(const LDParameter& phi) {
  std::map<UnitMonomial, int> acc;
  for (const auto& s : phi.summands)
    for (int i = 0; i < s.a; ++i)
      acc[s.point.f * UnitMonomial::q_power(s.a - 1 - 2 * i)] += s.mult * s.point.cls->dim;
  return {acc.begin(), acc.end()};
}

void check_restriction(const LDParameter& phi, const LDParameter& phi0) {
  if (!(normed_restriction(phi).summands == normed_restriction(phi0).summands))
    throw InputError("parameter is not in the inertial orbit of phi0");
}

void check_partition(const UBlock& b) {
  std::map<int, int> mult;
  for (int p : b.partition) {
    if (p < 1) throw InputError("partition parts must be positive");
    ++mult[p];
  }
  for (const auto& [p, m] : mult) {
    if (b.family == GroupFamily::O && p % 2 == 0 && m % 2 != 0)
      throw InputError("block " + b.key() + ": even part of odd multiplicity in O");
    if (b.family == GroupFamily::Sp && p % 2 == 1 && m % 2 != 0)
      throw InputError("block " + b.key() + ": odd part of odd multiplicity in Sp");
  }
}

}  // namespace

Triple parameter_to_triple(const Inventory& inv, const LDParameter& phi, const LDParameter& phi0) {
  (void)inv;
  check_restriction(phi, phi0);
  Triple t;
  t.ambient = phi.ambient;
  t.eigenvalues = ladder_eigenvalues(phi);
  std::map<std::pair<std::string, UnitMonomial>, UBlock> blocks;
  for (const auto& s : phi.summands) {
    const auto& cls = *s.point.cls;
    if (!is_rep_class(cls)) continue;
    const auto x = canonical_x(cls, s.point.f);
    if (!(x == s.point.f)) continue;
    auto& b = blocks[{orbit_label(cls), x}];
    b.orbit = orbit_label(cls);
    b.x = x;
    b.class_dim = cls.dim;
    b.family = weil::is_self_dual(s.point) ? family_of_point(s.point, phi.ambient) : GroupFamily::GL;
    for (int i = 0; i < s.mult; ++i) b.partition.push_back(s.a);
  }
  for (auto& [key, b] : blocks) {
    std::sort(b.partition.rbegin(), b.partition.rend());
    t.blocks.push_back(std::move(b));
  }
  t.xi.assign(component_group_of_triple(t).rank, 1);
  return t;
}

LDParameter triple_to_parameter(const Inventory& inv, const Triple& t, const LDParameter& phi0) {
  std::vector<params::LDSummand> summands;
  for (const auto& b : t.blocks) {
    const auto& cls = inv.get(b.orbit);
    if (cls->dim != b.class_dim) throw InputError("block " + b.key() + ": class dimension mismatch");
    if (!(canonical_x(*cls, b.x) == b.x)) throw InputError("block " + b.key() + ": eigenvalue is not the class representative");
    const bool sign = cls->self_dual && b.x.is_sign();
    const GroupFamily expected = sign ? family_of_point({cls, b.x}, t.ambient) : GroupFamily::GL;
    if (b.family != expected) throw InputError("block " + b.key() + ": family does not match the point type");
    check_partition(b);
    std::map<int, int> parts;
    for (int p : b.partition) ++parts[p];
    for (const auto& [a, mu] : parts) {
      summands.push_back({{cls, b.x}, a, mu});
      if (sign) continue;
      const auto& dual_cls = cls->self_dual ? cls : inv.get(cls->partner);
      summands.push_back({{dual_cls, b.x.inverse()}, a, mu});
    }
  }
  auto phi = params::build_ld_parameter(inv, std::move(summands), t.ambient);
  if (ladder_eigenvalues(phi) != t.eigenvalues)
    throw InputError("triple violates the q-scaling relation: eigenvalues are not the ladders of u");
  check_restriction(phi, phi0);
  return phi;
}

TripleComponentGroup component_group_of_triple(const Triple& t, bool det_one) {
  if (det_one && t.ambient.family != weil::Family::Orthogonal)
    throw InputError("det = 1 restriction needs an orthogonal ambient");
  TripleComponentGroup g;
  g.det_one = det_one;
  for (const auto& b : t.blocks) {
    if (b.family == GroupFamily::GL) continue;
    std::map<int, int> parts;
    for (int p : b.partition) ++parts[p];
    const int parity = b.family == GroupFamily::O ? 1 : 0;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      const auto [a, mu] = *it;
      if (a % 2 != parity) continue;
      g.generators.push_back("c[" + b.key() + "," + std::to_string(a) + "]");
      g.minus_element.push_back(mu % 2);
      g.det_character.push_back((b.class_dim * a) % 2 == 0 ? 1 : -1);
    }
  }
  g.rank = g.generators.size();
  if (det_one && std::find(g.det_character.begin(), g.det_character.end(), -1) != g.det_character.end()) --g.rank;
  return g;
}

Matrix sl2_unipotent(int a) {
  Matrix u(a);
  for (int i = 0; i < a; ++i) {
    std::int64_t c = 1;
    for (int j = 0; j <= i; ++j) {
      u(j, i) = c;
      c = c * (i - j) / (j + 1);
    }
  }
  return u;
}

Matrix sl2_torus(int a, const Rational& t) {
  std::vector<Rational> d;
  const int n = a - 1;
  for (int i = 0; i <= n; ++i) {
    const int e = n - 2 * i;
    Rational v(1);
    for (int k = 0; k < std::abs(e); ++k) v *= t;
    d.push_back(e >= 0 ? v : Rational(1) / v);
  }
  return Matrix::diagonal(d);
}

Matrix sl2_form(int a) {
  Matrix j(a);
  const int n = a - 1;
  std::int64_t c = 1;
  for (int i = 0; i <= n; ++i) {
    j(i, n - i) = Rational(i % 2 == 0 ? 1 : -1, c);
    c = c * (n - i) / (i + 1);
  }
  return j;
}

Realization realize_matrices(const LDParameter& phi, const Rational& q) {
  if (phi.ambient.ambient_dim > 12) throw InputError("realize_matrices: ambient dimension above 12");
  if (phi.ambient.family == weil::Family::Unitary) throw InputError("realize_matrices: unitary ambients are not realized");
  Rational t;
  if (q <= 0 || !exact_sqrt(q, t)) throw InputError("realize_matrices: q needs an exact rational square root");
  std::vector<Matrix> ss, us, gs;
  for (const auto& s : phi.summands) {
    if (!weil::is_self_dual(s.point)) throw InputError("realize_matrices: point " + s.point.to_string() + " is not self-dual");
    const int k = s.point.cls->dim;
    Matrix form_rho = Matrix::identity(k);
    if (weil::point_type(s.point) == weil::SelfDualityType::Symplectic) {
      form_rho = Matrix(k);
      for (int i = 0; i < k / 2; ++i) {
        form_rho(i, i + k / 2) = 1;
        form_rho(i + k / 2, i) = -1;
      }
    }
    const Rational f = s.point.f.is_one() ? Rational(1) : Rational(-1);
    const Matrix sw = kron(Matrix::identity(k).scaled(f), sl2_torus(s.a, t));
    const Matrix uw = kron(Matrix::identity(k), sl2_unipotent(s.a));
    const Matrix gw = kron(form_rho, sl2_form(s.a));
    if (params::summand_type(s.point, s.a, phi.ambient)) {
      for (int i = 0; i < s.mult; ++i) {
        ss.push_back(sw);
        us.push_back(uw);
        gs.push_back(gw);
      }
    } else {
      if (s.mult % 2 != 0) throw InputError("realize_matrices: odd multiplicity of a summand not of type");
      for (int i = 0; i < s.mult / 2; ++i) {
        ss.push_back(block_diag({sw, sw}));
        us.push_back(block_diag({uw, uw}));
        gs.push_back(hyperbolic(gw, Rational(-1)));
      }
    }
  }
  Realization r;
  r.s = block_diag(ss);
  r.u = block_diag(us);
  r.gram = block_diag(gs);
  const Matrix uq = nilpotent_exp(unipotent_log(r.u).scaled(q));
  r.scaling_ok = r.s * r.u * diagonal_inverse(r.s) == uq;
  r.gram_ok = r.s.transpose() * r.gram * r.s == r.gram && r.u.transpose() * r.gram * r.u == r.gram;
  const Matrix expected = phi.ambient.family == weil::Family::Orthogonal ? r.gram : r.gram.scaled(Rational(-1));
  r.form_ok = r.gram.transpose() == expected;
  return r;
}

}  // namespace hecke_atlas::centralizer
