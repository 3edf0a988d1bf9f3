#pragma once

#include <vector>

#include "hecke_atlas/centralizer.hpp"
#include "hecke_atlas/params.hpp"

namespace hecke_atlas::corpus {

using params::LDParameter;
using weil::DualGroupDescriptor;
using weil::Inventory;

/// Six classes covering every duality combination: (O,O), (S,S), (O,S),
/// (S,O) and a non-self-dual pair.
Inventory test_inventory();

/// Orthogonal ambients 1..max_dim and symplectic ambients 2..max_dim.
std::vector<DualGroupDescriptor> orthosymplectic_ambients(int max_dim);

/// Classes whose duality tags belong to the ambient (plain or conjugate).
bool class_fits(const weil::InertialClass& cls, const DualGroupDescriptor& g);

/// Every parameter of supercuspidal shape in ambient g.
std::vector<LDParameter> supercuspidal_shapes(const Inventory& inv, const DualGroupDescriptor& g);
/// Every discrete parameter in ambient g.
std::vector<LDParameter> discrete_parameters(const Inventory& inv, const DualGroupDescriptor& g);
/// Normed Weil parameters trivial on SL2, over classes obeying the normed
/// base point convention for g.
std::vector<LDParameter> normed_parameters(const Inventory& inv, const DualGroupDescriptor& g);

std::vector<LDParameter> supercuspidal_corpus(const Inventory& inv, int max_dim);
std::vector<LDParameter> discrete_corpus(const Inventory& inv, int max_dim);
std::vector<LDParameter> normed_corpus(const Inventory& inv, int max_dim);

struct SInstance {
  LDParameter phi0;
  centralizer::SemisimpleClass s;
};

/// (phi0, s) pairs with eigenvalues from {1, -1, e(1/4), q^{1/2}, -q} and
/// their inverses, keeping those whose Weil parameter is valid.
std::vector<SInstance> semisimple_family(const Inventory& inv, int max_dim);

}  // namespace hecke_atlas::corpus
