#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke_atlas/weil.hpp"

namespace hecke_atlas::params {

using weil::DualGroupDescriptor;
using weil::InertialPoint;
using weil::Inventory;

/// rho (x) sp(a), repeated mult times.
struct LDSummand {
  InertialPoint point;
  int a = 1;
  int mult = 1;

  bool operator==(const LDSummand& other) const = default;
  std::string to_string() const;
};

struct LDParameter {
  DualGroupDescriptor ambient;
  /// Sorted by (label, f, a), no two entries share (point, a).
  std::vector<LDSummand> summands;

  bool operator==(const LDParameter& other) const = default;
  std::string to_string() const;
  int total_dim() const;
};

/// Whether rho (x) sp(a) is of type ^LG: of-type(rho) xor (a even).
bool summand_type(const InertialPoint& p, int a, const DualGroupDescriptor& g);

/// Sorts, merges repeated (point, a) entries and checks dimension and
/// duality closure. Self-dual summands not of type ^LG must come with even
/// multiplicity.
LDParameter build_ld_parameter(const Inventory& inv, std::vector<LDSummand> summands,
                               const DualGroupDescriptor& ambient);

/// Summands grouped by point, for staircase analysis.
struct PointBlock {
  InertialPoint point;
  bool of_type = false;
  std::vector<int> dims;
};
std::vector<PointBlock> point_blocks(const LDParameter& phi);

bool is_supercuspidal_shape(const LDParameter& phi);
bool is_discrete(const LDParameter& phi);

struct ComponentGroup {
  std::vector<std::string> generators;
  /// Image of -id as a 0/1 vector over generators.
  std::vector<int> minus_element;
  std::size_t rank() const { return generators.size(); }
};

/// Free F_2 on the summands. Throws ContractError on repeated summands.
ComponentGroup component_group(const LDParameter& phi);

struct SignCharacter {
  std::vector<int> values;
  bool is_alternating = false;
  int eps_z = 1;
};

/// All alternating characters, in the order of a binary counter over the
/// of-type points (first point is the least significant bit).
std::vector<SignCharacter> alternating_characters(const LDParameter& phi);

struct TypeCounts {
  int t_odd = 0;   // of-type points with odd a_rho
  int t_even = 0;  // of-type points with even a_rho
  int not_of_type = 0;
  /// t_o with the convention t_o := 1 when t_odd == 0.
  int t_o() const { return t_odd == 0 ? 1 : t_odd; }
};
TypeCounts type_counts(const LDParameter& phi);

/// Closed-form count for G^+ (sign = +1) or G^- (sign = -1).
std::int64_t count_supercuspidals(const LDParameter& phi, int sign);
/// Enumerates every sign vector on the summands.
std::int64_t brute_force_supercuspidals(const LDParameter& phi, int sign);

/// +1 when the unramified parts of det(phi) and det(phi0) agree.
int det_discrepancy(const LDParameter& phi, const LDParameter& phi0);

}  // namespace hecke_atlas::params
