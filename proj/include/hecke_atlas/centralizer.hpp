#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke_atlas/matrix.hpp"
#include "hecke_atlas/params.hpp"

namespace hecke_atlas::centralizer {

using params::LDParameter;
using weil::Inventory;

enum class GroupFamily { GL, Sp, O };
std::string group_family_name(GroupFamily f);

/// Blocks are keyed "label@x/a": orbit label, eigenvalue class
/// representative and SL2 dimension.
struct GroupFactor {
  GroupFamily family = GroupFamily::GL;
  int size = 0;
  std::string block;
  bool operator==(const GroupFactor&) const = default;
  auto operator<=>(const GroupFactor&) const = default;
};

struct ClassicalGroup {
  std::vector<GroupFactor> factors;
  /// Passing to the connected dual group imposes det = 1.
  bool det_one_available = false;
  /// Sorted factors, zero-size factors dropped.
  void canonicalize();
  std::string to_string() const;
  /// Same blocks with the same (family, size).
  bool isomorphic(const ClassicalGroup& other) const;
};

struct ImageCentralizer {
  ClassicalGroup group;
  ClassicalGroup gl_level;
};

ImageCentralizer centralizer_of_image(const Inventory& inv, const LDParameter& phi);

/// Eigenvalues grouped by orbit of supp(phi0). For a dual pair only the
/// representative side is stored.
struct EigenBlock {
  std::string orbit;
  std::vector<std::pair<UnitMonomial, int>> values;
  bool operator==(const EigenBlock&) const = default;
};

struct SemisimpleClass {
  std::vector<EigenBlock> blocks;
  bool operator==(const SemisimpleClass&) const = default;
  std::string to_string() const;
};

SemisimpleClass s_phi(const LDParameter& phi);

/// Naive centralizer of s inside C(Im phi0), next to the true centralizer
/// obtained from the type of each point (the C' rule).
struct SCentralizer {
  ClassicalGroup naive;
  ClassicalGroup modified;
  bool agree = true;
  /// Some self-dual orbit has points of different type at +1 and -1.
  bool mixed = false;
  /// Multiplicity of -1 summed over the mixed orbits.
  int mixed_minus_mult = 0;
};

/// Throws InputError if s does not lie in C(Im phi0).
SCentralizer centralizer_of_s(const LDParameter& phi0, const SemisimpleClass& s);
ClassicalGroup c_prime(const LDParameter& phi0, const SemisimpleClass& s);

/// The Weil parameter with the given eigenvalues, of the same inertial
/// support as phi0.
LDParameter parameter_of_s(const Inventory& inv, const LDParameter& phi0, const SemisimpleClass& s);

/// Unipotent data on one eigenvalue block of C'.
struct UBlock {
  std::string orbit;
  UnitMonomial x;
  GroupFamily family = GroupFamily::GL;
  int class_dim = 1;
  std::vector<int> partition;
  bool operator==(const UBlock&) const = default;
  std::string key() const;
};

struct Triple {
  weil::DualGroupDescriptor ambient;
  /// Eigenvalues of s on the N-dimensional space, sorted, with multiplicity.
  std::vector<std::pair<UnitMonomial, int>> eigenvalues;
  std::vector<UBlock> blocks;
  std::vector<int> xi;
  bool operator==(const Triple&) const = default;
};

/// The normed Weil restriction of phi: every point moved to f = 1 and every
/// sl2 dimension counted as multiplicity. Not validated.
LDParameter normed_restriction(const LDParameter& phi);

Triple parameter_to_triple(const Inventory& inv, const LDParameter& phi, const LDParameter& phi0);
LDParameter triple_to_parameter(const Inventory& inv, const Triple& t, const LDParameter& phi0);

struct TripleComponentGroup {
  std::vector<std::string> generators;
  std::vector<int> minus_element;
  /// det on each generator, as +-1.
  std::vector<int> det_character;
  bool det_one = false;
  std::size_t rank = 0;
};

TripleComponentGroup component_group_of_triple(const Triple& t, bool det_one = false);

struct Realization {
  Matrix s;
  Matrix u;
  Matrix gram;
  bool scaling_ok = false;
  bool gram_ok = false;
  bool form_ok = false;
  bool ok() const { return scaling_ok && gram_ok && form_ok; }
};

/// sp(a) pieces of the oracle: unipotent x^i -> (x+1)^i, torus with
/// t^{a-1-2i} on x^i, and the invariant form.
Matrix sl2_unipotent(int a);
Matrix sl2_torus(int a, const Rational& t);
Matrix sl2_form(int a);

/// Block matrices of phi at the given q (which must have a rational square
/// root); checks s u s^-1 = u^q and preservation of the ambient form.
Realization realize_matrices(const LDParameter& phi, const Rational& q = Rational(4));

}  // namespace hecke_atlas::centralizer
