#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "howe/linalg.hpp"
#include "howe/rational.hpp"
#include "howe/spinor_poly.hpp"

namespace howe {

/**
 * The symplectic vector space (R^{2l}, omega) with the block form
 * omega(e_i, e_{i+l}) = 1 for i <= l.  Holds the exact inverse pairing
 * omega^{jk}, solved from sum_k omega_ik omega^{kj} = delta_i^j at
 * construction, and the oscillator normalization scalar, calibrated at
 * construction from the bracket condition [L(X), v.] = (Xv). rather than
 * hardcoded.
 */
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int l);

  int l() const { return l_; }
  int dim() const { return 2 * l_; }

  /** omega(e_i, e_j), 1-based indices. */
  int omega(int i, int j) const;

  /** omega^{ij} from the inverse pairing, 1-based indices. */
  const Rational& omega_inverse(int i, int j) const;

  /** The unique c with L(a.b) = c*(a.b. + b.a.) equivariant; equals -i/2. */
  const GaussianRational& oscillatory_scalar() const { return osc_scalar_; }

 private:
  int l_;
  std::vector<Rational> omega_inv_;  // row-major 2l x 2l
  GaussianRational osc_scalar_;
};

/**
 * Element of sp(2l, C) presented as a symmetric two-tensor
 * sum_{a<=b} c_ab e_a.e_b acting on V by (a.b)(v) = omega(a,v) b + omega(b,v) a.
 * Coefficients live in Q(i); the map onto sp matrices is a Lie isomorphism.
 */
class SpElement {
 public:
  explicit SpElement(int l) : l_(l) {}

  /** Basis element e_a.e_b (requires 1 <= a <= b <= 2l). */
  static SpElement sym(int l, int a, int b);

  /** Cartan generator -e_k.e_{k+l}; acts on e_k with eigenvalue +1. */
  static SpElement cartan(int l, int k);

  int l() const { return l_; }
  bool is_zero() const { return coeff_.empty(); }
  const std::map<std::pair<int, int>, GaussianRational>& coeff() const { return coeff_; }

  void add(int a, int b, const GaussianRational& c);

  SpElement& operator+=(const SpElement& o);
  friend SpElement operator+(SpElement a, const SpElement& b) { return a += b; }
  SpElement scaled(const GaussianRational& c) const;

  friend bool operator==(const SpElement& a, const SpElement& b) {
    return a.l_ == b.l_ && a.coeff_ == b.coeff_;
  }

  std::string str() const;

 private:
  int l_;
  std::map<std::pair<int, int>, GaussianRational> coeff_;
};

/** 2l x 2l matrix of X in the defining representation. */
Matrix sp_matrix(const SymplecticSpace& sp, const SpElement& x);

/** Inverse of sp_matrix; throws std::invalid_argument if m is not in sp. */
SpElement sp_from_matrix(const SymplecticSpace& sp, const Matrix& m);

/** Lie bracket [x, y], computed through the matrix realization. */
SpElement sp_bracket(const SymplecticSpace& sp, const SpElement& x, const SpElement& y);

/** All l(2l+1) basis elements e_a.e_b, a <= b, in lexicographic order. */
std::vector<SpElement> sp_basis(int l);

/** A root vector of sp(2l) together with its root in epsilon coordinates. */
struct RootVector {
  std::vector<int> root;
  SpElement vec;
};

/** Root vectors for the positive system {eps_a - eps_b (a<b), eps_a + eps_b (a<=b)}. */
std::vector<RootVector> positive_root_vectors(int l);
std::vector<RootVector> negative_root_vectors(int l);

/**
 * Oscillator (Segal-Shale-Weil) action of X on S: the calibrated multiple
 * of the anticommutator of Clifford actions.  Satisfies
 * [L(X), v.] = (Xv). and L([X,Y]) = [L(X), L(Y)].
 */
SpinorPoly oscillatory_action(const SymplecticSpace& sp, const SpElement& x, const SpinorPoly& s);

/**
 * The scalar c with [v., w.] = c Id on S.  Asserts the identity on all
 * monomials of degree <= 3 before returning; c equals i * omega(v, w).
 */
GaussianRational clifford_commutator_scalar(const SymplecticSpace& sp,
                                            const std::vector<GaussianRational>& v,
                                            const std::vector<GaussianRational>& w);

}  // namespace howe
