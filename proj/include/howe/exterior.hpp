#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "howe/rational.hpp"
#include "howe/symplectic.hpp"

namespace howe {

// A wedge-basis word eps^{i1} ^ ... ^ eps^{ir} with i1 < ... < ir is stored
// as the bitmask with bits i1-1, ..., ir-1 set (indices are 1-based, so bit
// 0 is eps^1).  The empty mask is the degree-0 basis form 1.
namespace wedge_word {

int degree(std::uint32_t mask);

/** Indices of the word in increasing order, 1-based. */
std::vector<int> indices(std::uint32_t mask);

/**
 * Sign of eps^k ^ eps^{mask} when sorted into increasing order, together
 * with the merged mask; sign 0 when k already occurs.
 */
int insert_sign(std::uint32_t mask, int k);

/** Sign (-1)^{m-1} of removing the m-th smallest index k from the word. */
int remove_sign(std::uint32_t mask, int k);

std::string str(std::uint32_t mask);

/** All masks over indices 1..n, ascending; optionally only degree r. */
std::vector<std::uint32_t> enumerate(int n);
std::vector<std::uint32_t> enumerate_degree(int n, int r);

}  // namespace wedge_word

/**
 * Complex-valued exterior form on V, a finite sum of wedge-basis words with
 * Gaussian-rational coefficients.  Mixed degrees are allowed; operators
 * that care about homogeneity take components first.
 */
class ExteriorForm {
 public:
  ExteriorForm() : n_(0) {}
  explicit ExteriorForm(int n) : n_(n) {}

  static ExteriorForm unit(int n);  // the scalar 1 in degree 0
  static ExteriorForm basis(int n, std::uint32_t mask);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint32_t, GaussianRational>& terms() const { return terms_; }

  void add_term(std::uint32_t mask, const GaussianRational& c);

  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  ExteriorForm scaled(const GaussianRational& c) const;

  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExteriorForm& a, const ExteriorForm& b) { return !(a == b); }

  ExteriorForm degree_component(int r) const;

  /** Canonical rendering "(coef) * e^{i1}^...^{ir}", masks ascending. */
  std::string str() const;

 private:
  int n_;
  std::map<std::uint32_t, GaussianRational> terms_;
};

/** Left exterior multiplication eps^k ^ alpha. */
ExteriorForm wedge(int k, const ExteriorForm& alpha);

/** Interior product iota_{e_k} alpha, contraction in the first slot. */
ExteriorForm interior(int k, const ExteriorForm& alpha);

/**
 * Coadjoint action (X . alpha)(v_1, .., v_r) = -sum_m alpha(v_1, .., X v_m, .., v_r),
 * the derivation extension of the dual of the defining action.
 */
ExteriorForm coadjoint_action(const SymplecticSpace& sp, const SpElement& x,
                              const ExteriorForm& alpha);

}  // namespace howe
