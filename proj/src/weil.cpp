#include "hecke_atlas/weil.hpp"

#include "hecke_atlas/error.hpp"

namespace hecke_atlas::weil {

void validate(const DualGroupDescriptor& g) {
  if (g.ambient_dim < 0) throw InputError("ambient dimension must be nonnegative");
  if (g.family == Family::Symplectic && g.ambient_dim % 2 != 0)
    throw InputError("symplectic ambient needs even dimension, got " + std::to_string(g.ambient_dim));
  if (g.twist != 1 && g.twist != -1) throw InputError("twist must be +1 or -1");
}

bool group_is_symplectic(const DualGroupDescriptor& g) {
  return g.family == Family::Orthogonal && g.ambient_dim % 2 == 1;
}

bool group_is_orthogonal(const DualGroupDescriptor& g) {
  return g.family == Family::Symplectic || (g.family == Family::Orthogonal && g.ambient_dim % 2 == 0);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Orthogonal: return "orthogonal";
    case Family::Symplectic: return "symplectic";
    case Family::Unitary: return "unitary";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "orthogonal") return Family::Orthogonal;
  if (name == "symplectic") return Family::Symplectic;
  if (name == "unitary") return Family::Unitary;
  throw InputError("unknown ambient family \"" + name + "\"");
}

std::string type_name(SelfDualityType t) {
  switch (t) {
    case SelfDualityType::Orthogonal: return "orthogonal";
    case SelfDualityType::Symplectic: return "symplectic";
    case SelfDualityType::ConjugateOrthogonal: return "conjugate_orthogonal";
    case SelfDualityType::ConjugateSymplectic: return "conjugate_symplectic";
  }
  return "?";
}

SelfDualityType parse_type(const std::string& name) {
  if (name == "orthogonal") return SelfDualityType::Orthogonal;
  if (name == "symplectic") return SelfDualityType::Symplectic;
  if (name == "conjugate_orthogonal") return SelfDualityType::ConjugateOrthogonal;
  if (name == "conjugate_symplectic") return SelfDualityType::ConjugateSymplectic;
  throw InputError("unknown duality type \"" + name + "\"");
}

bool is_conjugate_type(SelfDualityType t) {
  return t == SelfDualityType::ConjugateOrthogonal || t == SelfDualityType::ConjugateSymplectic;
}

SelfDualityType flip_type(SelfDualityType t) {
  switch (t) {
    case SelfDualityType::Orthogonal: return SelfDualityType::Symplectic;
    case SelfDualityType::Symplectic: return SelfDualityType::Orthogonal;
    case SelfDualityType::ConjugateOrthogonal: return SelfDualityType::ConjugateSymplectic;
    case SelfDualityType::ConjugateSymplectic: return SelfDualityType::ConjugateOrthogonal;
  }
  return t;
}

SelfDualityType ambient_type(const DualGroupDescriptor& g) {
  switch (g.family) {
    case Family::Orthogonal: return SelfDualityType::Orthogonal;
    case Family::Symplectic: return SelfDualityType::Symplectic;
    case Family::Unitary:
      return g.ambient_dim % 2 == 0 ? SelfDualityType::ConjugateSymplectic
                                    : SelfDualityType::ConjugateOrthogonal;
  }
  return SelfDualityType::Orthogonal;
}

InertialClass make_inertial_class(InertialClass spec) {
  if (spec.label.empty()) throw InputError("inertial class needs a label");
  if (spec.dim < 1) throw InputError("class " + spec.label + ": dim must be positive");
  if (spec.torsion < 1) throw InputError("class " + spec.label + ": torsion must be positive");
  if (spec.self_dual) {
    if (is_conjugate_type(spec.type_plus) != is_conjugate_type(spec.type_minus))
      throw InputError("class " + spec.label + ": mixes conjugate and plain duality types");
    if (spec.type_plus == SelfDualityType::Symplectic && spec.dim % 2 != 0)
      throw InputError("class " + spec.label + ": symplectic point of odd dimension");
    if (spec.type_minus == SelfDualityType::Symplectic && spec.dim % 2 != 0)
      throw InputError("class " + spec.label + ": symplectic point of odd dimension");
    spec.partner.clear();
  } else {
    if (spec.partner.empty()) throw InputError("class " + spec.label + ": not self-dual but no partner");
    if (spec.partner == spec.label) throw InputError("class " + spec.label + ": partner is itself");
  }
  if (spec.det_base.empty()) spec.det_base = spec.label;
  return spec;
}

Inventory::Inventory(std::vector<InertialClass> classes) {
  for (auto& c : classes) add(std::move(c));
  check_partners();
}

void Inventory::add(InertialClass cls) {
  auto made = make_inertial_class(std::move(cls));
  auto label = made.label;
  if (classes_.count(label)) throw InputError("duplicate class label " + label);
  classes_.emplace(label, std::make_shared<const InertialClass>(std::move(made)));
}

void Inventory::check_partners() const {
  for (const auto& [label, cls] : classes_) {
    if (cls->self_dual) continue;
    auto it = classes_.find(cls->partner);
    if (it == classes_.end()) throw InputError("class " + label + ": partner " + cls->partner + " unregistered");
    const auto& other = *it->second;
    if (other.self_dual || other.partner != label)
      throw InputError("class " + label + ": partner " + cls->partner + " does not point back");
    if (other.dim != cls->dim || other.torsion != cls->torsion)
      throw InputError("class " + label + ": partner has different dim or torsion");
  }
}

const std::shared_ptr<const InertialClass>& Inventory::get(const std::string& label) const {
  auto it = classes_.find(label);
  if (it == classes_.end()) throw InputError("unknown class label " + label);
  return it->second;
}

std::vector<std::string> Inventory::labels() const {
  std::vector<std::string> out;
  for (const auto& [label, cls] : classes_) out.push_back(label);
  return out;
}

bool InertialPoint::operator==(const InertialPoint& other) const {
  return cls->label == other.cls->label && f == other.f;
}

std::strong_ordering InertialPoint::operator<=>(const InertialPoint& other) const {
  if (auto c = cls->label <=> other.cls->label; c != 0) return c;
  return f <=> other.f;
}

std::string InertialPoint::to_string() const { return cls->label + "[" + f.to_string() + "]"; }

InertialPoint orbit_point(std::shared_ptr<const InertialClass> cls, const UnitMonomial& f) {
  if (!cls) throw InputError("orbit_point: null class");
  return {std::move(cls), f};
}

InertialPoint orbit_point(const Inventory& inv, const std::string& label, const UnitMonomial& f) {
  return orbit_point(inv.get(label), f);
}

bool is_self_dual(const InertialPoint& p) { return p.cls->self_dual && p.f.is_sign(); }

InertialPoint dual_point(const Inventory& inv, const InertialPoint& p) {
  if (p.cls->self_dual) return {p.cls, p.f.inverse()};
  return {inv.get(p.cls->partner), p.f.inverse()};
}

SelfDualityType point_type(const InertialPoint& p) {
  if (!is_self_dual(p)) throw InputError("point " + p.to_string() + " is not self-dual");
  return p.f.is_one() ? p.cls->type_plus : p.cls->type_minus;
}

bool is_of_type(const InertialPoint& p, const DualGroupDescriptor& g) {
  auto t = point_type(p);
  if (is_conjugate_type(t) != (g.family == Family::Unitary))
    throw InputError("point " + p.to_string() + " has a duality type foreign to the " +
                     family_name(g.family) + " ambient");
  return t == ambient_type(g);
}

bool satisfies_normed_convention(const InertialClass& cls, const DualGroupDescriptor& g) {
  if (!cls.self_dual) return true;
  if (is_conjugate_type(cls.type_plus) != (g.family == Family::Unitary)) return false;
  auto target = ambient_type(g);
  return cls.type_plus == target || cls.type_minus != target;
}

}  // namespace hecke_atlas::weil
