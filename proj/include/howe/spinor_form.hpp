#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "howe/exterior.hpp"
#include "howe/spinor_poly.hpp"
#include "howe/symplectic.hpp"

namespace howe {

/**
 * Element of W = Lambda(V*) tensor S: a finite sum of wedge-basis words
 * with SpinorPoly coefficients.  The W-parity grading is by form degree;
 * the spinor parity grading is by polynomial degree of the S factor.
 */
class SpinorForm {
 public:
  SpinorForm() : l_(0) {}
  explicit SpinorForm(int l) : l_(l) {}

  static SpinorForm vacuum(int l);  // 1 tensor 1
  static SpinorForm term(int l, std::uint32_t mask, SpinorPoly s);

  int l() const { return l_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint32_t, SpinorPoly>& terms() const { return terms_; }

  void add_term(std::uint32_t mask, const SpinorPoly& s);

  SpinorForm& operator+=(const SpinorForm& o);
  SpinorForm& operator-=(const SpinorForm& o);
  friend SpinorForm operator+(SpinorForm a, const SpinorForm& b) { return a += b; }
  friend SpinorForm operator-(SpinorForm a, const SpinorForm& b) { return a -= b; }
  SpinorForm scaled(const GaussianRational& c) const;

  friend bool operator==(const SpinorForm& a, const SpinorForm& b) {
    return a.l_ == b.l_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SpinorForm& a, const SpinorForm& b) { return !(a == b); }

  SpinorForm degree_component(int r) const;

  /** Largest form degree present; -1 when zero. */
  int max_form_degree() const;

  std::string str() const;

 private:
  int l_;
  std::map<std::uint32_t, SpinorPoly> terms_;
};

/** Deliberate operator corruptions used as negative controls. */
enum class Corruption {
  none,
  f_minus_half,  // F- loses its 1/2 prefactor
  f_plus_sign,   // F+ flips sign
  h_scale,       // the rep hands out 2H instead of H
  a_zero,        // the ladder coefficient A is replaced by 0
};

/**
 * Evaluation context for the W operator calculus: the symplectic space
 * plus an optional corruption switch.  All operators below are pure; the
 * context is freely shareable.
 */
struct WContext {
  explicit WContext(int l, Corruption corrupt = Corruption::none)
      : space(l), corrupt(corrupt) {}

  SymplecticSpace space;
  Corruption corrupt;

  int l() const { return space.l(); }
};

/** rho(X) = coadjoint action on the form factor + oscillator action on S. */
SpinorForm rho(const WContext& ctx, const SpElement& x, const SpinorForm& w);

/** F+ (alpha tensor s) = (i/2) sum_k eps^k ^ alpha tensor e_k.s. */
SpinorForm f_plus(const WContext& ctx, const SpinorForm& w);

/** F- (alpha tensor s) = 1/2 sum omega^{jk} iota_{e_j} alpha tensor e_k.s. */
SpinorForm f_minus(const WContext& ctx, const SpinorForm& w);

/** H = 2(F+ F- + F- F+); acts on form degree r by (r - l)/2. */
SpinorForm h_op(const WContext& ctx, const SpinorForm& w);

/** E+/- = +-2 {F+-, F+-} = +-4 (F+-)^2; sign is +1 or -1. */
SpinorForm e_pm(const WContext& ctx, int sign, const SpinorForm& w);

/** Spinor parity projection p+ (sign +1) / p- (sign -1) on the S factor. */
SpinorForm p_pm(int sign, const SpinorForm& w);

/**
 * A W operator packaged with its declared form-degree shift and its
 * parity as an endomorphism of W = W_0 + W_1 (0 even, 1 odd).
 */
struct WOperator {
  std::string name;
  int degree_shift = 0;
  int parity = 0;
  std::function<SpinorForm(const SpinorForm&)> fn;

  SpinorForm operator()(const SpinorForm& w) const { return fn(w); }
};

WOperator make_f_plus(const WContext& ctx);
WOperator make_f_minus(const WContext& ctx);
WOperator make_h(const WContext& ctx);
WOperator make_e_plus(const WContext& ctx);
WOperator make_e_minus(const WContext& ctx);
WOperator make_p_plus();
WOperator make_p_minus();

/** Composition a after b, with shifts added and parities combined. */
WOperator compose(const WOperator& a, const WOperator& b);

}  // namespace howe
