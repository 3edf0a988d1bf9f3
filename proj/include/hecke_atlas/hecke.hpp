#pragma once

#include <string>
#include <vector>

#include "hecke_atlas/support.hpp"

namespace hecke_atlas::hecke {

using params::LDParameter;
using support::SupportDatum;
using weil::Inventory;

enum class RootFamily { GL, SO, Sp };
std::string root_family_name(RootFamily f);

/// Exponents are stored doubled, already multiplied by t, so q^{3/2} is 3.
/// Equal-parameter factors carry end_long2 == end_short2 == internal2.
struct HeckeFactor {
  RootFamily family = RootFamily::GL;
  int size = 0;
  bool extended = false;
  int t = 1;
  bool equal = true;
  int internal2 = 2;
  int end_long2 = 2;
  int end_short2 = 2;

  bool operator==(const HeckeFactor&) const = default;
  auto operator<=>(const HeckeFactor&) const = default;
  std::string to_string() const;
};

HeckeFactor equal_factor(RootFamily family, int size, int t, bool extended = false);
HeckeFactor unequal_factor(int size, int t, int end_long2, int end_short2);

/// Factor of a single orbit for the pair (a_plus, a_minus).
HeckeFactor orbit_factor(const support::Orbit& o, int a_plus, int a_minus);
HeckeFactor hecke_factor(const LDParameter& phi0, const SupportDatum& s, std::size_t orbit_index);
std::vector<HeckeFactor> hecke_descriptor(const LDParameter& phi0, const SupportDatum& s);

/// SO_{2n+1} with q,...,q,q;q^0 is the equal-parameter Sp_{2n}; identity
/// on every other factor.
HeckeFactor sp_normalization(const HeckeFactor& f);

enum class Kind { SoOdd, Sp, OEven, Unitary };
std::string kind_name(Kind k);
Kind parse_kind(const std::string& name);

enum class Bucket { Plus, Minus, Any };
std::string bucket_name(Bucket b);

struct TableRow {
  int d_plus = 0;
  int d_minus = 0;
  HeckeFactor factor;
  Bucket bucket = Bucket::Any;
  int mult = 1;
  bool operator==(const TableRow&) const = default;
};

/// The closed-form tables. For the unitary kind, rank is m.
std::vector<TableRow> specialize(Kind kind, int rank);

/// epsilon^{+}_{d+,d-} (sign +1) or epsilon^{-}_{d+,d-} (sign -1).
int epsilon_multiplicity(int d_plus, int d_minus, int sign);

/// The phi0 = 1 setting behind a table: a single class and N copies of it.
struct Setting {
  Inventory inv;
  LDParameter phi0;
};
Setting trivial_setting(Kind kind, int rank);

/// One record per cuspidal pair of the trivial setting.
struct DerivedRow {
  int d_plus = 0;
  int d_minus = 0;
  HeckeFactor factor;
  int eps_z = 1;
};
std::vector<DerivedRow> derived_rows(Kind kind, int rank);

/// Counts (S, eps) with the given (d+, d-) and eps_Z == sign; sign 0 sums
/// both signs.
int derived_multiplicity(Kind kind, int rank, int d_plus, int d_minus, int sign);

struct Reduction {
  std::string family;
  int size = 0;
  int degree = 1;
  std::string orbit;
  bool operator==(const Reduction&) const = default;
};
std::vector<Reduction> unipotent_reduction(const LDParameter& phi0);

/// The orbit-wise factorization: supports are the product of per-orbit
/// supports, each factor depends only on its own orbit, and the count of
/// alternating characters is multiplicative.
bool factorization_check(const Inventory& inv, const LDParameter& phi0, std::string* why = nullptr);

}  // namespace hecke_atlas::hecke
