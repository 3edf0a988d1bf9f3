#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hecke_atlas::weyl {

/// w(e_i) = sign[i] * e_{perm[i]}.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPermutation identity(int n);
  int rank() const { return static_cast<int>(perm.size()); }
  int negatives() const;
  bool in_w0() const { return negatives() % 2 == 0; }
  /// (a * b)(v) = a(b(v)).
  SignedPermutation operator*(const SignedPermutation& b) const;
  SignedPermutation inverse() const;
  std::vector<int> apply(const std::vector<int>& v) const;

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;
  std::string to_string() const;
};

/// Even sign changes (full = false) or all signed permutations. 1 <= n <= 5.
std::vector<SignedPermutation> weyl_group(int n, bool full);

/// GL blocks on consecutive coordinates, then the tail.
struct LeviDescriptor {
  std::vector<int> composition;
  int tail_rank = 0;
  int rank() const;
  std::string to_string() const;
};

/// Every composition of n - tail for tail = 0..n.
std::vector<LeviDescriptor> standard_levis(int n);

/// Orbit data on a GL block: blocks with the same label carry the same
/// orbit; a non-self-dual label is sent by a sign change to its dual, which
/// never occurs in the decoration.
struct Decoration {
  int label = 0;
  bool self_dual = false;
  bool operator==(const Decoration&) const = default;
};

std::string decorations_to_string(const std::vector<Decoration>& d);

/// A signed permutation of the GL blocks, the image of a normalizing element.
using BlockImage = SignedPermutation;

struct RelativeWeyl {
  std::size_t normalizer_size = 0;
  std::size_t normalizer0_size = 0;
  std::size_t wm_size = 0;
  std::size_t wm0_size = 0;
  std::set<BlockImage> W;
  std::set<BlockImage> W0;
  bool equal = true;
  std::optional<SignedPermutation> counterexample;
};

RelativeWeyl relative_weyl(const LeviDescriptor& m);

/// W(M) = W0(M) unless the tail is empty and some block has odd size.
bool predicts_weyl_equals_w0(const LeviDescriptor& m);

struct OrbitStabilizers {
  std::vector<BlockImage> W_O;
  std::vector<BlockImage> W0_O;
  std::vector<BlockImage> R;
  std::vector<BlockImage> R0;
  std::vector<BlockImage> W0_sigma;
  /// Positive relative roots whose reflections lie in W0(M, O).
  std::vector<std::vector<int>> sigma_plus;
  bool equal = true;
  bool semidirect = false;
  std::optional<BlockImage> counterexample;
};

OrbitStabilizers orbit_stabilizers(const LeviDescriptor& m, const std::vector<Decoration>& decorations);

/// W(M, O) = W0(M, O) unless the tail is empty and some odd block carries a
/// self-dual orbit.
bool predicts_orbit_weyl_equals_w0(const LeviDescriptor& m, const std::vector<Decoration>& decorations);

/// Label assignments with at most max_labels labels (equal labels only on
/// equal block sizes), times every self-dual flag per label.
std::vector<std::vector<Decoration>> decoration_assignments(const LeviDescriptor& m, int max_labels);

}  // namespace hecke_atlas::weyl
