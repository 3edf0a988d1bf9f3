#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hecke_atlas/unit_monomial.hpp"

namespace hecke_atlas::weil {

enum class Family { Orthogonal, Symplectic, Unitary };

/// Target of iota: ^LG -> GL_N. Orthogonal with odd N is the dual of a
/// symplectic G, Orthogonal with even N the dual O_N of an even orthogonal G.
struct DualGroupDescriptor {
  Family family = Family::Orthogonal;
  int ambient_dim = 0;
  int twist = 1;

  bool operator==(const DualGroupDescriptor&) const = default;
  auto operator<=>(const DualGroupDescriptor&) const = default;
};

/// Throws InputError unless the family/dimension pair is admissible.
/// Dimension zero is allowed; it models the empty tail of a Levi.
void validate(const DualGroupDescriptor& g);

/// G is symplectic exactly when ^LG is an odd orthogonal group.
bool group_is_symplectic(const DualGroupDescriptor& g);
/// G orthogonal (odd or even); unitary ambients answer false.
bool group_is_orthogonal(const DualGroupDescriptor& g);

std::string family_name(Family f);
Family parse_family(const std::string& name);

enum class SelfDualityType { Orthogonal, Symplectic, ConjugateOrthogonal, ConjugateSymplectic };

std::string type_name(SelfDualityType t);
SelfDualityType parse_type(const std::string& name);
bool is_conjugate_type(SelfDualityType t);
/// The tag of a tensor product with an orthogonal (false) or symplectic
/// (true) representation.
SelfDualityType flip_type(SelfDualityType t);
/// The tag that counts as "of type ^LG".
SelfDualityType ambient_type(const DualGroupDescriptor& g);

struct InertialClass {
  std::string label;
  int dim = 1;
  int torsion = 1;
  bool self_dual = true;
  std::string partner;
  SelfDualityType type_plus = SelfDualityType::Orthogonal;
  SelfDualityType type_minus = SelfDualityType::Orthogonal;
  std::string det_base;
};

/// Validates and returns the class. The base point is the point f = 1.
InertialClass make_inertial_class(InertialClass spec);

/// Label-indexed collection of classes; partners must resolve and point back.
class Inventory {
 public:
  Inventory() = default;
  explicit Inventory(std::vector<InertialClass> classes);

  void add(InertialClass cls);
  /// Throws InputError if a partner is missing or not reciprocal.
  void check_partners() const;

  const std::shared_ptr<const InertialClass>& get(const std::string& label) const;
  bool contains(const std::string& label) const { return classes_.count(label) != 0; }
  std::vector<std::string> labels() const;
  std::size_t size() const { return classes_.size(); }

 private:
  std::map<std::string, std::shared_ptr<const InertialClass>> classes_;
};

struct InertialPoint {
  std::shared_ptr<const InertialClass> cls;
  UnitMonomial f;

  const std::string& label() const { return cls->label; }
  bool operator==(const InertialPoint& other) const;
  std::strong_ordering operator<=>(const InertialPoint& other) const;
  std::string to_string() const;
};

InertialPoint orbit_point(std::shared_ptr<const InertialClass> cls, const UnitMonomial& f);
InertialPoint orbit_point(const Inventory& inv, const std::string& label, const UnitMonomial& f);

bool is_self_dual(const InertialPoint& p);
InertialPoint dual_point(const Inventory& inv, const InertialPoint& p);

/// Type tag at the point's sign. Throws InputError for a non-self-dual point.
SelfDualityType point_type(const InertialPoint& p);
bool is_of_type(const InertialPoint& p, const DualGroupDescriptor& g);

/// Normed base point convention: if either sign is of type ^LG, the point
/// f = +1 is.
bool satisfies_normed_convention(const InertialClass& cls, const DualGroupDescriptor& g);

}  // namespace hecke_atlas::weil
