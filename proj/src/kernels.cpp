#include "hecke_atlas/kernels.hpp"

namespace hecke_atlas::kernels {

CountRecord count_one(const LDParameter& phi) {
  CountRecord r;
  r.formula_plus = params::count_supercuspidals(phi, 1);
  r.formula_minus = params::count_supercuspidals(phi, -1);
  r.brute_plus = params::brute_force_supercuspidals(phi, 1);
  r.brute_minus = params::brute_force_supercuspidals(phi, -1);
  const auto t = params::type_counts(phi);
  r.total = std::int64_t{1} << (t.t_odd + t.t_even);
  return r;
}

std::vector<CountRecord> count_batch(const std::vector<LDParameter>& phis, Exec exec) {
  return map_indexed<CountRecord>(exec, phis.size(), [&](std::size_t i) { return count_one(phis[i]); });
}

MatrixRecord matrix_one(const weil::Inventory& inv, const LDParameter& phi) {
  MatrixRecord r;
  const auto m = centralizer::realize_matrices(phi, Rational(4));
  r.scaling_ok = m.scaling_ok;
  r.gram_ok = m.gram_ok;
  r.form_ok = m.form_ok;
  const auto phi0 = centralizer::normed_restriction(phi);
  const auto t = centralizer::parameter_to_triple(inv, phi, phi0);
  r.round_trip = centralizer::triple_to_parameter(inv, t, phi0) == phi;
  return r;
}

std::vector<MatrixRecord> matrix_batch(const weil::Inventory& inv, const std::vector<LDParameter>& phis, Exec exec) {
  return map_indexed<MatrixRecord>(exec, phis.size(), [&](std::size_t i) { return matrix_one(inv, phis[i]); });
}

std::vector<WeylCase> weyl_cases(int max_rank, bool decorated, int max_labels) {
  std::vector<WeylCase> out;
  for (int n = 1; n <= max_rank; ++n)
    for (const auto& m : weyl::standard_levis(n)) {
      if (!decorated) {
        out.push_back({m, {}, false});
        continue;
      }
      for (auto& d : weyl::decoration_assignments(m, max_labels)) out.push_back({m, std::move(d), true});
    }
  return out;
}

WeylRecord weyl_one(const WeylCase& c) {
  WeylRecord r;
  if (!c.decorated) {
    r.predicted = weyl::predicts_weyl_equals_w0(c.levi);
    r.observed = weyl::relative_weyl(c.levi).equal;
    return r;
  }
  r.predicted = weyl::predicts_orbit_weyl_equals_w0(c.levi, c.decorations);
  const auto st = weyl::orbit_stabilizers(c.levi, c.decorations);
  r.observed = st.equal;
  r.semidirect = st.semidirect;
  return r;
}

std::vector<WeylRecord> weyl_batch(const std::vector<WeylCase>& cases, Exec exec) {
  return map_indexed<WeylRecord>(exec, cases.size(), [&](std::size_t i) { return weyl_one(cases[i]); });
}

}  // namespace hecke_atlas::kernels
