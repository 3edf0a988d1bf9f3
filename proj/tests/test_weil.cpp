#include <doctest.h>

#include "hecke_atlas/error.hpp"
#include "hecke_atlas/weil.hpp"
#include "helpers.hpp"

using namespace th;

TEST_CASE("unit monomials") {
  const auto i = UnitMonomial::root_of_unity(1, 4);
  CHECK(i.to_string() == "e(1/4)");
  CHECK(i.inverse().to_string() == "e(3/4)");
  CHECK((i * i).is_minus_one());
  CHECK(i.pow(4).is_one());
  CHECK(UnitMonomial::q_power(3).to_string() == "q^(3/2)");
  CHECK(UnitMonomial::q_power(3).qexp_string() == "3/2");
  CHECK((UnitMonomial::minus_one() * UnitMonomial::q_power(2)).to_string() == "-q^1");
  CHECK(parse_unit_monomial("5/4", "1/2") == UnitMonomial::root_of_unity(1, 4) * UnitMonomial::q_power(1));
  CHECK_THROWS_AS(parse_unit_monomial("1/2", "1/3"), InputError);
  CHECK_THROWS_AS(parse_unit_monomial("x", "0/2"), InputError);
}

TEST_CASE("fractions") {
  CHECK(to_fraction_string(Rational(3, 2)) == "3/2");
  CHECK(to_fraction_string(Rational(2)) == "2/1");
  CHECK(parse_fraction("-6/4") == Rational(-3, 2));
  Rational r;
  CHECK(exact_sqrt(Rational(9, 4), r));
  CHECK(r == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2), r));
}

TEST_CASE("dual group descriptors") {
  CHECK_NOTHROW(weil::validate({Family::Orthogonal, 5}));
  CHECK_NOTHROW(weil::validate({Family::Symplectic, 0}));
  CHECK_THROWS_AS(weil::validate({Family::Symplectic, 3}), InputError);
  CHECK(weil::group_is_symplectic({Family::Orthogonal, 5}));
  CHECK(weil::group_is_orthogonal({Family::Orthogonal, 4}));
  CHECK(weil::group_is_orthogonal({Family::Symplectic, 6}));
  CHECK_FALSE(weil::group_is_orthogonal({Family::Unitary, 3}));
}

TEST_CASE("inertial classes") {
  CHECK_NOTHROW(weil::make_inertial_class(sd("triv", 1, O, O)));
  CHECK_NOTHROW(weil::make_inertial_class(sd("rho_mix", 2, O, S)));
  CHECK_THROWS_AS(weil::make_inertial_class(sd("bad", 0, O, O)), InputError);
  CHECK_THROWS_AS(weil::make_inertial_class(sd("odd_symplectic", 1, S, S)), InputError);
  CHECK_THROWS_AS(weil::Inventory({pair("a", "b")}), InputError);
  CHECK(weil::make_inertial_class(sd("triv", 1, O, O)).det_base == "triv");
}

TEST_CASE("orbit points and duals") {
  const auto inv = small_inventory();
  const auto i = UnitMonomial::root_of_unity(1, 4);
  const auto p = weil::orbit_point(inv, "triv", plus());
  const auto m = weil::orbit_point(inv, "triv", minus());
  const auto x = weil::orbit_point(inv, "triv", i);
  CHECK(weil::is_self_dual(p));
  CHECK(weil::is_self_dual(m));
  CHECK_FALSE(weil::is_self_dual(x));
  CHECK(weil::dual_point(inv, p) == p);
  CHECK(weil::dual_point(inv, m) == m);
  CHECK(weil::dual_point(inv, x).f == i.inverse());
  CHECK(weil::dual_point(inv, weil::dual_point(inv, x)) == x);
  const auto e = weil::orbit_point(inv, "eta", UnitMonomial::q_power(1));
  const auto ed = weil::dual_point(inv, e);
  CHECK(ed.label() == "eta_dual");
  CHECK(ed.f == UnitMonomial::q_power(-1));
  CHECK_FALSE(weil::is_self_dual(e));
  CHECK_THROWS_AS(weil::orbit_point(inv, "nope", plus()), InputError);
}

TEST_CASE("of type") {
  const auto inv = small_inventory();
  const auto p = weil::orbit_point(inv, "triv", plus());
  CHECK_FALSE(weil::is_of_type(p, {Family::Symplectic, 4}));
  CHECK(weil::is_of_type(p, {Family::Orthogonal, 4}));
  const auto mix_minus = weil::orbit_point(inv, "mix", minus());
  CHECK(weil::is_of_type(mix_minus, {Family::Symplectic, 4}));
  CHECK_FALSE(weil::is_of_type(mix_minus, {Family::Orthogonal, 4}));

  weil::Inventory u({sd("one_E", 1, SelfDualityType::ConjugateOrthogonal, SelfDualityType::ConjugateSymplectic)});
  CHECK(weil::is_of_type(weil::orbit_point(u, "one_E", plus()), {Family::Unitary, 3}));
  CHECK_FALSE(weil::is_of_type(weil::orbit_point(u, "one_E", plus()), {Family::Unitary, 4}));
  CHECK(weil::is_of_type(weil::orbit_point(u, "one_E", minus()), {Family::Unitary, 4}));
}

TEST_CASE("normed convention") {
  CHECK(weil::satisfies_normed_convention(sd("mix", 2, O, S), {Family::Orthogonal, 4}));
  CHECK_FALSE(weil::satisfies_normed_convention(sd("mix", 2, O, S), {Family::Symplectic, 4}));
  CHECK(weil::satisfies_normed_convention(sd("triv", 1, O, O), {Family::Symplectic, 4}));
}
