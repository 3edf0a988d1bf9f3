#pragma once

#include <cstdint>
#include <vector>

#include "hecke_atlas/centralizer.hpp"
#include "hecke_atlas/parallel.hpp"
#include "hecke_atlas/params.hpp"
#include "hecke_atlas/weyl.hpp"

namespace hecke_atlas::kernels {

using params::LDParameter;

struct CountRecord {
  std::int64_t formula_plus = 0;
  std::int64_t formula_minus = 0;
  std::int64_t brute_plus = 0;
  std::int64_t brute_minus = 0;
  /// 2^{t_odd + t_even} with the raw odd count.
  std::int64_t total = 0;
  bool ok() const {
    return formula_plus == brute_plus && formula_minus == brute_minus && brute_plus + brute_minus == total;
  }
};

CountRecord count_one(const LDParameter& phi);
std::vector<CountRecord> count_batch(const std::vector<LDParameter>& phis, Exec exec);

struct MatrixRecord {
  bool scaling_ok = false;
  bool gram_ok = false;
  bool form_ok = false;
  bool round_trip = false;
  bool ok() const { return scaling_ok && gram_ok && form_ok && round_trip; }
};

MatrixRecord matrix_one(const weil::Inventory& inv, const LDParameter& phi);
std::vector<MatrixRecord> matrix_batch(const weil::Inventory& inv, const std::vector<LDParameter>& phis, Exec exec);

struct WeylRecord {
  bool predicted = true;
  bool observed = true;
  bool semidirect = true;
  bool ok() const { return predicted == observed && semidirect; }
};

struct WeylCase {
  weyl::LeviDescriptor levi;
  /// Empty for the relative Weyl group check.
  std::vector<weyl::Decoration> decorations;
  bool decorated = false;
};

std::vector<WeylCase> weyl_cases(int max_rank, bool decorated, int max_labels = 3);
WeylRecord weyl_one(const WeylCase& c);
std::vector<WeylRecord> weyl_batch(const std::vector<WeylCase>& cases, Exec exec);

}  // namespace hecke_atlas::kernels
