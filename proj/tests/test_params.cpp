#include <doctest.h>

#include <map>

#include "hecke_atlas/corpus.hpp"
#include "hecke_atlas/error.hpp"
#include "hecke_atlas/params.hpp"
#include "helpers.hpp"

using namespace th;

namespace {

weil::Inventory inv_with_ram() {
  return weil::Inventory({sd("triv", 1, O, O), sd("chi_ram", 1, O, O), sd("rho2", 2, S, S)});
}

// Enumerates sign vectors on the summands directly from the alternation
// rules and routes them by the product of all signs.
std::pair<int, int> oracle_counts(const params::LDParameter& phi) {
  const auto& s = phi.summands;
  const std::size_t n = s.size();
  int plus = 0, minus = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    int prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const int v = (mask >> i) & 1 ? -1 : 1;
      prod *= v;
      const bool first = i == 0 || !(s[i].point == s[i - 1].point);
      if (first) {
        if (!weil::is_of_type(s[i].point, phi.ambient) && v != -1) ok = false;
      } else {
        const int prev = (mask >> (i - 1)) & 1 ? -1 : 1;
        if (v != -prev) ok = false;
      }
    }
    if (!ok) continue;
    (prod > 0 ? plus : minus) += 1;
  }
  return {plus, minus};
}

}  // namespace

TEST_CASE("summand type flips with the parity of a") {
  const auto inv = small_inventory();
  const auto p = weil::orbit_point(inv, "triv", plus());
  CHECK(params::summand_type(p, 2, {Family::Symplectic, 2}));
  CHECK_FALSE(params::summand_type(p, 1, {Family::Symplectic, 2}));
  CHECK(params::summand_type(p, 3, {Family::Orthogonal, 3}));
}

TEST_CASE("build_ld_parameter") {
  const auto inv = inv_with_ram();
  const weil::DualGroupDescriptor g{Family::Orthogonal, 5};
  auto phi = param(inv, g, {{"triv", plus(), 3, 1}, {"chi_ram", plus(), 1, 1}, {"triv", plus(), 1, 1}});
  CHECK(phi.total_dim() == 5);
  CHECK(phi.summands.front().point.label() == "chi_ram");
  CHECK_THROWS_AS(param(inv, g, {{"triv", plus(), 2, 1}}), InputError);
  CHECK_THROWS_AS(param(inv, {Family::Orthogonal, 1}, {{"triv", UnitMonomial::root_of_unity(1, 4), 1, 1}}), InputError);
  // repeated entries merge
  auto merged = param(inv, g, {{"triv", plus(), 1, 2}, {"triv", plus(), 1, 3}});
  REQUIRE(merged.summands.size() == 1);
  CHECK(merged.summands[0].mult == 5);
  // a summand not of type needs even multiplicity
  CHECK_THROWS_AS(param(inv, {Family::Orthogonal, 2}, {{"triv", plus(), 2, 1}}), InputError);
}

TEST_CASE("supercuspidal shape and discreteness") {
  const auto inv = inv_with_ram();
  const weil::DualGroupDescriptor g{Family::Orthogonal, 5};
  auto phi = param(inv, g, {{"triv", plus(), 1, 1}, {"triv", plus(), 3, 1}, {"chi_ram", plus(), 1, 1}});
  CHECK(params::is_supercuspidal_shape(phi));
  CHECK(params::is_discrete(phi));
  CHECK_FALSE(params::is_supercuspidal_shape(param(inv, {Family::Orthogonal, 3}, {{"triv", plus(), 3, 1}})));
  CHECK(params::is_supercuspidal_shape(param(inv, {Family::Orthogonal, 1}, {{"triv", plus(), 1, 1}})));
  auto twice = param(inv, {Family::Orthogonal, 2}, {{"triv", plus(), 1, 2}});
  CHECK_FALSE(params::is_discrete(twice));
  const auto small = small_inventory();
  auto pairs = param(small, {Family::Orthogonal, 2}, {{"eta", plus(), 1, 1}, {"eta_dual", plus(), 1, 1}});
  CHECK_FALSE(params::is_discrete(pairs));
}

TEST_CASE("component group") {
  const auto inv = inv_with_ram();
  auto phi = param(inv, {Family::Orthogonal, 5}, {{"triv", plus(), 1, 1}, {"triv", plus(), 3, 1}, {"chi_ram", plus(), 1, 1}});
  auto cg = params::component_group(phi);
  CHECK(cg.rank() == 3);
  CHECK(cg.minus_element == std::vector<int>{1, 1, 1});
  CHECK(params::component_group(param(inv, {Family::Orthogonal, 1}, {{"triv", plus(), 1, 1}})).rank() == 1);
  CHECK_THROWS_AS(params::component_group(param(inv, {Family::Orthogonal, 2}, {{"triv", plus(), 1, 2}})), ContractError);
}

TEST_CASE("alternating characters") {
  const auto inv = inv_with_ram();
  auto phi = param(inv, {Family::Orthogonal, 5}, {{"triv", plus(), 1, 1}, {"triv", plus(), 3, 1}, {"chi_ram", plus(), 1, 1}});
  const auto chars = params::alternating_characters(phi);
  CHECK(chars.size() == 4);
  for (const auto& c : chars) {
    int prod = 1;
    for (int v : c.values) prod *= v;
    CHECK(prod == c.eps_z);
  }
  // a point not of type has its first sign forced to -1
  auto so3 = param(inv, {Family::Symplectic, 2}, {{"triv", plus(), 2, 1}});
  const auto forced = params::alternating_characters(so3);
  REQUIRE(forced.size() == 1);
  CHECK(forced[0].values == std::vector<int>{-1});
}

TEST_CASE("supercuspidal counts on the documented examples") {
  const auto inv = inv_with_ram();
  auto sp4 = param(inv, {Family::Orthogonal, 5}, {{"triv", plus(), 1, 1}, {"triv", plus(), 3, 1}, {"chi_ram", plus(), 1, 1}});
  const auto t = params::type_counts(sp4);
  CHECK(t.t_odd == 1);
  CHECK(t.t_even == 1);
  CHECK(params::count_supercuspidals(sp4, 1) == 2);

  auto so7 = param(inv, {Family::Symplectic, 6}, {{"triv", plus(), 2, 1}, {"chi_ram", plus(), 2, 1}, {"rho2", plus(), 1, 1}});
  CHECK(params::count_supercuspidals(so7, 1) == 1);
  CHECK(params::count_supercuspidals(so7, -1) == 1);

  auto so3 = param(inv, {Family::Symplectic, 2}, {{"triv", plus(), 2, 1}});
  CHECK(params::count_supercuspidals(so3, 1) == 0);
  CHECK(params::count_supercuspidals(so3, -1) == 1);
}

TEST_CASE("closed form matches the sign-vector oracle on the corpus") {
  const auto inv = corpus::test_inventory();
  const auto phis = corpus::supercuspidal_corpus(inv, 9);
  CHECK(phis.size() >= 200);
  for (const auto& phi : phis) {
    const auto [plus, minus] = oracle_counts(phi);
    CAPTURE(phi.to_string());
    CHECK(params::count_supercuspidals(phi, 1) == plus);
    CHECK(params::count_supercuspidals(phi, -1) == minus);
    CHECK(params::brute_force_supercuspidals(phi, 1) == plus);
    CHECK(params::brute_force_supercuspidals(phi, -1) == minus);
    const auto t = params::type_counts(phi);
    CHECK(plus + minus == (1 << (t.t_odd + t.t_even)));
    CHECK(params::alternating_characters(phi).size() == static_cast<std::size_t>(plus + minus));
  }
}

TEST_CASE("determinant discrepancy") {
  const auto inv = small_inventory();
  const weil::DualGroupDescriptor g{Family::Orthogonal, 5};
  auto phi0 = param(inv, g, {{"triv", plus(), 1, 5}});
  CHECK(params::det_discrepancy(phi0, phi0) == 1);
  auto phi = param(inv, g, {{"triv", minus(), 1, 1}, {"triv", plus(), 1, 4}});
  CHECK(params::det_discrepancy(phi, phi0) == -1);
  const weil::DualGroupDescriptor s4{Family::Symplectic, 4};
  auto base = param(inv, s4, {{"sym2", plus(), 1, 2}});
  auto twisted = param(inv, s4, {{"sym2", minus(), 1, 1}, {"sym2", plus(), 1, 1}});
  CHECK(params::det_discrepancy(twisted, base) == 1);
  auto other = param(inv, g, {{"triv", plus(), 1, 3}, {"mix", plus(), 1, 1}});
  CHECK_THROWS_AS(params::det_discrepancy(other, phi0), InputError);
}
