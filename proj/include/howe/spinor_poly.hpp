#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "howe/rational.hpp"

namespace howe {

// Monomials z1^a1 ... zl^al are packed into a uint64 with z1 in the most
// significant byte, so unsigned integer order is lexicographic exponent
// order.  Supports l <= 8 variables with exponents <= 255; both bounds are
// far above anything the desk-scale checks reach and are enforced.
namespace mono {

constexpr int kMaxVars = 8;

inline int get(std::uint64_t code, int k) {  // k is 1-based
  return static_cast<int>((code >> (8 * (kMaxVars - k))) & 0xffu);
}

std::uint64_t with(std::uint64_t code, int k, int delta);

int total_degree(std::uint64_t code);

std::uint64_t pack(const std::vector<int>& exps);

std::string str(std::uint64_t code, int vars);

/** All exponent codes of total degree <= max_degree, ascending. */
std::vector<std::uint64_t> enumerate(int vars, int max_degree);

}  // namespace mono

/**
 * Element of the polynomial oscillator module S = C[z1..zl] with exact
 * Gaussian-rational coefficients.  Terms are kept in a sorted map with no
 * zero coefficients; the zero polynomial has an empty term map.
 */
class SpinorPoly {
 public:
  SpinorPoly() : vars_(0) {}
  explicit SpinorPoly(int vars) : vars_(vars) {}

  static SpinorPoly zero(int vars) { return SpinorPoly(vars); }
  static SpinorPoly one(int vars);
  static SpinorPoly monomial(int vars, std::uint64_t code, GaussianRational coeff);
  static SpinorPoly variable(int vars, int k);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint64_t, GaussianRational>& terms() const { return terms_; }

  void add_term(std::uint64_t code, const GaussianRational& c);

  SpinorPoly& operator+=(const SpinorPoly& o);
  SpinorPoly& operator-=(const SpinorPoly& o);
  friend SpinorPoly operator+(SpinorPoly a, const SpinorPoly& b) { return a += b; }
  friend SpinorPoly operator-(SpinorPoly a, const SpinorPoly& b) { return a -= b; }
  SpinorPoly scaled(const GaussianRational& c) const;

  friend bool operator==(const SpinorPoly& a, const SpinorPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SpinorPoly& a, const SpinorPoly& b) { return !(a == b); }

  SpinorPoly derivative(int k) const;
  SpinorPoly multiplied_by_z(int k) const;

  /** Largest total degree among terms; -1 for the zero polynomial. */
  int degree() const;

  /** Terms whose total degree is congruent to parity (0 or 1) mod 2. */
  SpinorPoly parity_component(int parity) const;

  /** Canonical rendering: terms ascending, "(coef) * z1^a1 ... zl^al". */
  std::string str() const;

 private:
  int vars_;
  std::map<std::uint64_t, GaussianRational> terms_;
};

/**
 * Symplectic Clifford action of the basis vector e_k on S: differentiation
 * by z^k for k <= l and multiplication by i*z^{k-l} for k > l, so that
 * [e_j., e_k.] = i * omega(e_j, e_k) * Id.
 */
SpinorPoly clifford(int l, int k, const SpinorPoly& s);

/** Clifford action of an arbitrary coefficient vector sum_k v_k e_k. */
SpinorPoly clifford_vector(int l, const std::vector<GaussianRational>& v, const SpinorPoly& s);

/** Projection of S onto the even (+1) or odd (-1) polynomial-degree part. */
SpinorPoly parity_project(int sign, const SpinorPoly& s);

}  // namespace howe
