#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "howe/spinor_poly.hpp"
#include "howe/symplectic.hpp"

using namespace howe;

namespace {

SpinorPoly z_mono(int vars, std::vector<int> exps, GaussianRational c = GaussianRational(1)) {
  return SpinorPoly::monomial(vars, mono::pack(exps), c);
}

}  // namespace

TEST_CASE("omega block values") {
  SymplecticSpace sp(2);
  CHECK(sp.dim() == 4);
  CHECK(sp.omega(1, 3) == 1);
  CHECK(sp.omega(3, 1) == -1);
  CHECK(sp.omega(2, 4) == 1);
  CHECK(sp.omega(4, 2) == -1);
  CHECK(sp.omega(1, 2) == 0);
  CHECK(sp.omega(1, 4) == 0);
  CHECK(sp.omega(3, 3) == 0);
}

TEST_CASE("omega inverse is the true matrix inverse") {
  // For the block form the inverse pairing is omega^{k,k+l} = -1,
  // omega^{k+l,k} = +1; independently, it must satisfy the defining
  // system sum_k omega(i,k) omega^{kj} = delta_i^j.
  for (int l : {1, 2, 3}) {
    SymplecticSpace sp(l);
    for (int k = 1; k <= l; ++k) {
      CHECK(sp.omega_inverse(k, k + l) == Rational(-1));
      CHECK(sp.omega_inverse(k + l, k) == Rational(1));
    }
    for (int i = 1; i <= 2 * l; ++i) {
      for (int j = 1; j <= 2 * l; ++j) {
        Rational sum(0);
        for (int k = 1; k <= 2 * l; ++k) sum += Rational(sp.omega(i, k)) * sp.omega_inverse(k, j);
        CHECK(sum == Rational(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("clifford action on monomials") {
  // e_k for k <= l differentiates, e_{k+l} multiplies by i z^k.
  SpinorPoly f = z_mono(2, {2, 0});
  CHECK(clifford(2, 1, f) == z_mono(2, {1, 0}, GaussianRational(2)));
  CHECK(clifford(2, 2, f).is_zero());
  CHECK(clifford(2, 3, SpinorPoly::one(2)) == z_mono(2, {1, 0}, GaussianRational::i()));
  CHECK(clifford(2, 4, f) == z_mono(2, {2, 1}, GaussianRational::i()));
}

TEST_CASE("clifford commutator is i omega") {
  SymplecticSpace sp(2);
  // [e_1., e_3.] = i on an arbitrary monomial.
  SpinorPoly f = z_mono(2, {2, 1});
  SpinorPoly lhs = clifford(2, 1, clifford(2, 3, f)) - clifford(2, 3, clifford(2, 1, f));
  CHECK(lhs == f.scaled(GaussianRational::i()));

  std::vector<GaussianRational> e1 = {GaussianRational(1), {}, {}, {}};
  std::vector<GaussianRational> e2 = {{}, GaussianRational(1), {}, {}};
  std::vector<GaussianRational> e3 = {{}, {}, GaussianRational(1), {}};
  CHECK(clifford_commutator_scalar(sp, e1, e3) == GaussianRational::i());
  CHECK(clifford_commutator_scalar(sp, e3, e1) == -GaussianRational::i());
  CHECK(clifford_commutator_scalar(sp, e1, e2).is_zero());
}

TEST_CASE("oscillatory scalar is calibrated to -i/2") {
  CHECK(SymplecticSpace(2).oscillatory_scalar() == GaussianRational::of(0, 1, -1, 2));
  CHECK(SymplecticSpace(3).oscillatory_scalar() == GaussianRational::of(0, 1, -1, 2));
}

TEST_CASE("oscillatory action of the cartan generators") {
  // L(H_k) z^a = -(a_k + 1/2) z^a.
  SymplecticSpace sp(2);
  SpinorPoly f = z_mono(2, {2, 1});
  CHECK(oscillatory_action(sp, SpElement::cartan(2, 1), f) ==
        f.scaled(GaussianRational(Rational::of(-5, 2))));
  CHECK(oscillatory_action(sp, SpElement::cartan(2, 2), f) ==
        f.scaled(GaussianRational(Rational::of(-3, 2))));
  CHECK(oscillatory_action(sp, SpElement::cartan(2, 1), SpinorPoly::one(2)) ==
        SpinorPoly::one(2).scaled(GaussianRational(Rational::of(-1, 2))));
}

TEST_CASE("oscillatory action is a lie algebra map") {
  // L([X, Y]) = [L(X), L(Y)] across a spread of basis pairs and monomials.
  SymplecticSpace sp(2);
  std::vector<SpElement> basis = sp_basis(2);
  std::vector<SpinorPoly> polys = {SpinorPoly::one(2), z_mono(2, {1, 0}), z_mono(2, {1, 2}),
                                   z_mono(2, {0, 3})};
  REQUIRE(basis.size() == 10);
  for (std::size_t a = 0; a < basis.size(); a += 3) {
    for (std::size_t b = 0; b < basis.size(); b += 2) {
      SpElement xy = sp_bracket(sp, basis[a], basis[b]);
      for (const SpinorPoly& f : polys) {
        SpinorPoly direct = oscillatory_action(sp, xy, f);
        SpinorPoly nested = oscillatory_action(sp, basis[a], oscillatory_action(sp, basis[b], f)) -
                            oscillatory_action(sp, basis[b], oscillatory_action(sp, basis[a], f));
        CHECK(direct == nested);
      }
    }
  }
}

TEST_CASE("sp matrix round trip and bracket") {
  SymplecticSpace sp(2);
  for (const SpElement& x : sp_basis(2)) {
    CHECK(sp_from_matrix(sp, sp_matrix(sp, x)) == x);
  }
  // The cartan generators commute.
  SpElement h1 = SpElement::cartan(2, 1);
  SpElement h2 = SpElement::cartan(2, 2);
  CHECK(sp_bracket(sp, h1, h2).is_zero());
}

TEST_CASE("positive root vectors raise the cartan eigenvalue") {
  // [H, X_alpha] = alpha(H) X_alpha for every positive root vector.
  SymplecticSpace sp(2);
  for (const RootVector& rv : positive_root_vectors(2)) {
    REQUIRE(rv.root.size() == 2);
    for (int k = 1; k <= 2; ++k) {
      SpElement lhs = sp_bracket(sp, SpElement::cartan(2, k), rv.vec);
      CHECK(lhs == rv.vec.scaled(GaussianRational(Rational(rv.root[k - 1]))));
    }
  }
  CHECK(positive_root_vectors(2).size() == 4u);  // l^2 for sp(4)
  CHECK(negative_root_vectors(2).size() == 4u);
}
