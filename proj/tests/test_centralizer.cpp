#include <doctest.h>

#include "hecke_atlas/centralizer.hpp"
#include "hecke_atlas/corpus.hpp"
#include "hecke_atlas/error.hpp"
#include "helpers.hpp"

using namespace th;
using centralizer::GroupFactor;
using centralizer::GroupFamily;

namespace {

// Dimension of the space of bilinear forms B with g^T B g = B for every g,
// by Gaussian elimination over the rationals. Returns a basis.
std::vector<Matrix> invariant_forms(const std::vector<Matrix>& gens) {
  const std::size_t n = gens.front().size();
  const std::size_t vars = n * n;
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // (g^T B g)_{ij} - B_{ij} = sum_{k,l} g_{ki} B_{kl} g_{lj} - B_{ij}
        std::vector<Rational> row(vars, Rational(0));
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) row[k * n + l] += g(k, i) * g(l, j);
        row[i * n + j] -= 1;
        rows.push_back(std::move(row));
      }
  }
  std::vector<int> pivot_of(vars, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < vars && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].numerator() == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c].numerator() == 0) continue;
      const Rational f = rows[q][c];
      for (std::size_t k = 0; k < vars; ++k) rows[q][k] -= f * rows[r][k];
    }
    pivot_of[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < vars; ++free) {
    if (pivot_of[free] >= 0) continue;
    std::vector<Rational> v(vars, Rational(0));
    v[free] = 1;
    for (std::size_t c = 0; c < vars; ++c)
      if (pivot_of[c] >= 0) v[c] = -rows[pivot_of[c]][free];
    Matrix b(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = v[i * n + j];
    basis.push_back(b);
  }
  return basis;
}

bool has_factor(const centralizer::ClassicalGroup& g, GroupFamily f, int size, const std::string& block) {
  for (const auto& x : g.factors)
    if (x.family == f && x.size == size && x.block == block) return true;
  return false;
}

centralizer::SemisimpleClass one_block(const std::string& orbit, std::vector<std::pair<UnitMonomial, int>> values) {
  return {{{orbit, std::move(values)}}};
}

}  // namespace

TEST_CASE("sp(a) carries a unique invariant form of parity a") {
  for (int a = 1; a <= 5; ++a) {
    const auto forms = invariant_forms({centralizer::sl2_unipotent(a), centralizer::sl2_torus(a, Rational(3))});
    REQUIRE(forms.size() == 1);
    const Matrix& b = forms[0];
    if (a % 2 == 1) CHECK(b.transpose() == b);
    else CHECK(b.transpose() == b.scaled(Rational(-1)));
    // the library form spans the same line
    const Matrix j = centralizer::sl2_form(a);
    Rational ratio(0);
    for (int i = 0; i < a; ++i)
      if (j(i, a - 1 - i).numerator() != 0) ratio = b(i, a - 1 - i) / j(i, a - 1 - i);
    CHECK(j.scaled(ratio) == b);
  }
}

TEST_CASE("centralizer of the image") {
  const auto inv = small_inventory();
  auto sp6 = centralizer::centralizer_of_image(inv, param(inv, {Family::Symplectic, 6}, {{"triv", plus(), 1, 6}}));
  REQUIRE(sp6.group.factors.size() == 1);
  CHECK(sp6.group.factors[0] == GroupFactor{GroupFamily::Sp, 6, "triv@1/1"});
  CHECK_FALSE(sp6.group.det_one_available);

  auto o5 = centralizer::centralizer_of_image(inv, param(inv, {Family::Orthogonal, 5}, {{"triv", plus(), 1, 5}}));
  CHECK(o5.group.factors[0] == GroupFactor{GroupFamily::O, 5, "triv@1/1"});
  CHECK(o5.group.det_one_available);

  auto gl = centralizer::centralizer_of_image(inv, param(inv, {Family::Orthogonal, 4}, {{"eta", plus(), 1, 2}, {"eta_dual", plus(), 1, 2}}));
  REQUIRE(gl.group.factors.size() == 1);
  CHECK(gl.group.factors[0] == GroupFactor{GroupFamily::GL, 2, "eta@1/1"});
  CHECK(gl.gl_level.factors.size() == 2);
}

TEST_CASE("semisimple part of a parameter") {
  const auto inv = small_inventory();
  auto trivial = centralizer::s_phi(param(inv, {Family::Orthogonal, 3}, {{"triv", plus(), 1, 3}}));
  REQUIRE(trivial.blocks.size() == 1);
  CHECK(trivial.blocks[0].values == std::vector<std::pair<UnitMonomial, int>>{{UnitMonomial::one(), 3}});
  const auto i = UnitMonomial::root_of_unity(1, 4);
  auto pairs = centralizer::s_phi(param(inv, {Family::Orthogonal, 2}, {{"triv", i, 1, 1}, {"triv", i.inverse(), 1, 1}}));
  CHECK(pairs.blocks[0].values == std::vector<std::pair<UnitMonomial, int>>{{i, 1}, {i.inverse(), 1}});
  for (const auto& phi : corpus::discrete_corpus(corpus::test_inventory(), 6))
    for (const auto& b : centralizer::s_phi(phi).blocks)
      for (const auto& [x, m] : b.values) CHECK(x.is_sign());
}

TEST_CASE("centralizer of s") {
  const auto inv = small_inventory();
  auto o5 = param(inv, {Family::Orthogonal, 5}, {{"triv", plus(), 1, 5}});
  auto id = centralizer::centralizer_of_s(o5, one_block("triv", {{UnitMonomial::one(), 5}}));
  CHECK(id.naive.isomorphic(centralizer::centralizer_of_image(inv, o5).group));

  auto o3 = param(inv, {Family::Orthogonal, 3}, {{"triv", plus(), 1, 3}});
  const auto q = UnitMonomial::q_power(2);
  auto h = centralizer::centralizer_of_s(o3, one_block("triv", {{q.inverse(), 1}, {UnitMonomial::one(), 1}, {q, 1}}));
  REQUIRE(h.naive.factors.size() == 2);
  CHECK(has_factor(h.naive, GroupFamily::O, 1, "triv@1/1"));
  CHECK(has_factor(h.naive, GroupFamily::GL, 1, "triv@q^-1/1"));

  auto mixed = param(inv, {Family::Orthogonal, 4}, {{"mix", plus(), 1, 2}});
  auto m = centralizer::centralizer_of_s(mixed, one_block("mix", {{UnitMonomial::minus_one(), 2}}));
  CHECK(has_factor(m.naive, GroupFamily::O, 2, "mix@-1/1"));
  CHECK(has_factor(m.modified, GroupFamily::Sp, 2, "mix@-1/1"));
  CHECK_FALSE(m.agree);
  CHECK(m.mixed);
  CHECK(m.mixed_minus_mult == 2);

  CHECK_THROWS_AS(centralizer::centralizer_of_s(o3, one_block("triv", {{q, 1}, {UnitMonomial::one(), 2}})), InputError);
}

TEST_CASE("C' on mixed orbits") {
  const auto inv = small_inventory();
  auto phi0 = param(inv, {Family::Orthogonal, 10}, {{"mix", plus(), 1, 5}});
  auto c = centralizer::c_prime(phi0, one_block("mix", {{UnitMonomial::one(), 3}, {UnitMonomial::minus_one(), 2}}));
  CHECK(has_factor(c, GroupFamily::O, 3, "mix@1/1"));
  CHECK(has_factor(c, GroupFamily::Sp, 2, "mix@-1/1"));
  auto same = param(inv, {Family::Orthogonal, 3}, {{"triv", plus(), 1, 3}});
  auto s = one_block("triv", {{UnitMonomial::one(), 1}, {UnitMonomial::minus_one(), 2}});
  CHECK(centralizer::c_prime(same, s).isomorphic(centralizer::centralizer_of_s(same, s).naive));
}

TEST_CASE("C' agrees with the centralizer of the image on the generated family") {
  const auto inv = corpus::test_inventory();
  const auto family = corpus::semisimple_family(inv, 4);
  CHECK(family.size() >= 100);
  int mixed_minus = 0;
  for (const auto& in : family) {
    const auto phi = centralizer::parameter_of_s(inv, in.phi0, in.s);
    const auto sc = centralizer::centralizer_of_s(in.phi0, in.s);
    CHECK(sc.modified.isomorphic(centralizer::centralizer_of_image(inv, phi).group));
    CHECK(sc.naive.isomorphic(sc.modified) == (sc.mixed_minus_mult == 0));
    if (sc.mixed_minus_mult > 0) ++mixed_minus;
  }
  CHECK(mixed_minus > 0);
}

TEST_CASE("triples") {
  const auto inv = small_inventory();
  const weil::DualGroupDescriptor sp4{Family::Symplectic, 4};
  auto phi0 = param(inv, sp4, {{"triv", plus(), 1, 4}});

  auto trivial = centralizer::parameter_to_triple(inv, phi0, phi0);
  REQUIRE(trivial.blocks.size() == 1);
  CHECK(trivial.blocks[0].partition == std::vector<int>{1, 1, 1, 1});
  CHECK(centralizer::component_group_of_triple(trivial).rank == 0);

  auto reg = param(inv, sp4, {{"triv", plus(), 4, 1}});
  auto t = centralizer::parameter_to_triple(inv, reg, phi0);
  CHECK(t.blocks[0].partition == std::vector<int>{4});
  std::vector<std::pair<UnitMonomial, int>> ladder;
  for (int e : {-3, -1, 1, 3}) ladder.emplace_back(UnitMonomial::q_power(e), 1);
  std::sort(ladder.begin(), ladder.end());
  CHECK(t.eigenvalues == ladder);
  CHECK(centralizer::triple_to_parameter(inv, t, phi0) == reg);
  CHECK(centralizer::component_group_of_triple(t).rank == 1);

  auto two = param(inv, sp4, {{"triv", plus(), 2, 1}, {"triv", minus(), 2, 1}});
  auto t2 = centralizer::parameter_to_triple(inv, two, phi0);
  REQUIRE(t2.blocks.size() == 2);
  CHECK(t2.blocks[0].partition == std::vector<int>{2});
  CHECK(t2.blocks[1].partition == std::vector<int>{2});
  CHECK(t2.eigenvalues.size() == 4);
  CHECK(centralizer::triple_to_parameter(inv, t2, phi0) == two);

  // breaking the q-scaling relation is rejected
  auto broken = t;
  broken.eigenvalues = {{UnitMonomial::one(), 4}};
  CHECK_THROWS_AS(centralizer::triple_to_parameter(inv, broken, phi0), InputError);
}

TEST_CASE("component groups of triples") {
  const auto inv = small_inventory();
  const weil::DualGroupDescriptor o6{Family::Orthogonal, 6};
  auto phi0 = param(inv, o6, {{"triv", plus(), 1, 6}});
  auto phi = param(inv, o6, {{"triv", plus(), 5, 1}, {"triv", plus(), 1, 1}});
  auto t = centralizer::parameter_to_triple(inv, phi, phi0);
  auto g = centralizer::component_group_of_triple(t);
  CHECK(g.rank == 2);
  CHECK(g.minus_element == std::vector<int>{1, 1});
  auto g1 = centralizer::component_group_of_triple(t, true);
  CHECK(g1.rank == 1);
  const weil::DualGroupDescriptor sp4{Family::Symplectic, 4};
  auto s0 = param(inv, sp4, {{"triv", plus(), 1, 4}});
  CHECK_THROWS_AS(centralizer::component_group_of_triple(centralizer::parameter_to_triple(inv, s0, s0), true), InputError);
}

TEST_CASE("matrix realization") {
  const auto inv = small_inventory();
  auto phi = param(inv, {Family::Symplectic, 2}, {{"triv", plus(), 2, 1}});
  auto r = centralizer::realize_matrices(phi, Rational(4));
  CHECK(r.s == Matrix::diagonal({Rational(2), Rational(1, 2)}));
  Matrix u(2);
  u(0, 0) = u(0, 1) = u(1, 1) = 1;
  CHECK(r.u == u);
  // s u s^-1 computed by hand: off-diagonal entry scales by 2 / (1/2) = 4
  Matrix u4 = u;
  u4(0, 1) = 4;
  CHECK(r.s * r.u * diagonal_inverse(r.s) == u4);
  CHECK(r.ok());
  CHECK(r.gram.transpose() == r.gram.scaled(Rational(-1)));

  auto id = param(inv, {Family::Orthogonal, 3}, {{"triv", plus(), 1, 3}});
  CHECK(centralizer::realize_matrices(id).ok());
  CHECK_THROWS_AS(centralizer::realize_matrices(id, Rational(2)), InputError);

  for (const auto& p : corpus::discrete_corpus(corpus::test_inventory(), 8)) {
    CAPTURE(p.to_string());
    const auto m = centralizer::realize_matrices(p, Rational(4));
    CHECK(m.ok());
    // preserved forms, checked directly
    CHECK(m.u.transpose() * m.gram * m.u == m.gram);
    CHECK(m.s.transpose() * m.gram * m.s == m.gram);
  }
}
