#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "howe/osp.hpp"

using namespace howe;

namespace {

OspElement unit(int gen) {
  OspElement e{};
  e[gen] = Rational(1);
  return e;
}

}  // namespace

TEST_CASE("super bracket table") {
  CHECK(super_bracket(osp_h, osp_e_plus) == unit(osp_e_plus));
  CHECK(super_bracket(osp_e_plus, osp_e_minus)[osp_h] == Rational(2));
  CHECK(super_bracket(osp_h, osp_f_plus)[osp_f_plus] == Rational::of(1, 2));
  CHECK(super_bracket(osp_h, osp_f_minus)[osp_f_minus] == Rational::of(-1, 2));
  CHECK(super_bracket(osp_f_plus, osp_f_minus)[osp_h] == Rational::of(1, 2));
  CHECK(super_bracket(osp_f_plus, osp_f_plus)[osp_e_plus] == Rational::of(1, 2));
  CHECK(super_bracket(osp_f_minus, osp_f_minus)[osp_e_minus] == Rational::of(-1, 2));
  CHECK(super_bracket(osp_e_plus, osp_f_minus)[osp_f_plus] == Rational(-1));
  CHECK(super_bracket(osp_e_minus, osp_f_plus)[osp_f_minus] == Rational(-1));
  // Odd-odd pairs are symmetric, even pairs antisymmetric.
  CHECK(super_bracket(osp_f_minus, osp_f_plus) == super_bracket(osp_f_plus, osp_f_minus));
  CHECK(super_bracket(osp_e_minus, osp_e_plus)[osp_h] == Rational(-2));
}

TEST_CASE("graded jacobi identity holds") {
  CHECK(!super_jacobi_witness().has_value());
}

TEST_CASE("parities of the generators") {
  CHECK(osp_parity(osp_h) == 0);
  CHECK(osp_parity(osp_e_plus) == 0);
  CHECK(osp_parity(osp_e_minus) == 0);
  CHECK(osp_parity(osp_f_plus) == 1);
  CHECK(osp_parity(osp_f_minus) == 1);
}

TEST_CASE("ladder coefficient values at l = 2") {
  CHECK(ladder_coefficient(2, 1, 0) == Rational::of(-1, 2));
  CHECK(ladder_coefficient(2, 2, 0) == Rational::of(1, 4));
  CHECK(ladder_coefficient(2, 3, 0) == Rational::of(-1, 4));
  CHECK(ladder_coefficient(2, 4, 0) == Rational::of(1, 2));
  // The raising chain terminates exactly at the top of G^j.
  CHECK(ladder_coefficient(2, 5, 0).is_zero());
  CHECK(ladder_coefficient(2, 4, 1).is_zero());
  CHECK(ladder_coefficient(3, 7, 0).is_zero());
}

TEST_CASE("sigma cartan matrix is the half integer ladder") {
  SigmaRep rep = build_sigma(2, 0);
  REQUIRE(rep.dim == 5);
  std::vector<Rational> expected = {Rational(-1), Rational::of(-1, 2), Rational(0),
                                    Rational::of(1, 2), Rational(1)};
  for (int c = 0; c < rep.dim; ++c) {
    for (int r = 0; r < rep.dim; ++r) {
      GaussianRational want =
          r == c ? GaussianRational(expected[static_cast<std::size_t>(c)]) : GaussianRational();
      CHECK(rep.h.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) == want);
    }
  }
}

TEST_CASE("sigma satisfies the defining relations") {
  for (int l : {2, 3, 4}) {
    for (int j = 0; j <= l; ++j) {
      SigmaRep rep = build_sigma(l, j);
      CHECK(rep.dim == 2 * l - 2 * j + 1);
      CHECK(!osp_relations_witness(rep).has_value());
    }
  }
}

TEST_CASE("sigma orbits span the whole module") {
  for (int l : {2, 3}) {
    for (int j = 0; j <= l; ++j) {
      CHECK(!sigma_orbit_witness(build_sigma(l, j)).has_value());
    }
  }
}

TEST_CASE("corrupted sigma violates the relations") {
  CHECK(osp_relations_witness(build_sigma(2, 0, Corruption::h_scale)).has_value());
  CHECK(osp_relations_witness(build_sigma(2, 0, Corruption::a_zero)).has_value());
}

TEST_CASE("casimir coefficients and scalars") {
  auto sol = solve_casimir(2);
  REQUIRE(sol.has_value());
  CHECK(sol->a == Rational(1));
  CHECK(sol->b == Rational::of(1, 2));
  CHECK(sol->c == Rational(-1));
  // C = (j - l)(j - l - 1)/4 on G^j: 3/2, 1/2, 0 at l = 2.
  REQUIRE(sol->scalars.size() == 3u);
  CHECK(sol->scalars[0] == Rational::of(3, 2));
  CHECK(sol->scalars[1] == Rational::of(1, 2));
  CHECK(sol->scalars[2] == Rational(0));
}

TEST_CASE("casimir scalars separate the modules at higher rank") {
  auto sol = solve_casimir(3);
  REQUIRE(sol.has_value());
  REQUIRE(sol->scalars.size() == 4u);
  for (int j = 0; j <= 3; ++j) {
    CHECK(sol->scalars[static_cast<std::size_t>(j)] ==
          Rational(BigInt((j - 3) * (j - 4)), BigInt(4)));
  }
}

TEST_CASE("corrupted ladder coefficient degrades the casimir") {
  // Zeroing the raising coefficients collapses sigma(f+), sigma(e+) and
  // sigma(h), so the commutation system goes slack: the solve still
  // normalizes a solution, but it loses the honest b and c and its
  // recorded scalars no longer separate the ladder modules.
  auto good = solve_casimir(2);
  auto bad = solve_casimir(2, Corruption::a_zero);
  REQUIRE(good.has_value());
  REQUIRE(bad.has_value());
  CHECK(bad->b != good->b);
  CHECK(bad->c != good->c);
  CHECK(bad->scalars == std::vector<Rational>(3, Rational(0)));
}

TEST_CASE("osp operators on W satisfy the relations on probes") {
  WContext ctx(2);
  OspOperators ops = make_osp_operators(ctx);
  std::vector<SpinorForm> probes = {SpinorForm::vacuum(2),
                                    SpinorForm::term(2, 0x5u, SpinorPoly::variable(2, 1))};
  CHECK(!osp_relations_witness(ops, probes).has_value());
}
