#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "howe/branching.hpp"
#include "howe/spinor_form.hpp"

namespace howe {

using WEndo = std::function<SpinorForm(const SpinorForm&)>;

/** Scalar of F- F+ on the summand E_ij; vanishes exactly when i + j = 2l. */
Rational raise_lower_scalar(int l, int i, int j);

/** Scalar of F+ F- on E_ij, which equals raise_lower_scalar(l, i - 1, j). */
Rational lower_raise_scalar(int l, int i, int j);

/** Scalar of (F+)^m (F-)^m on E_ij. */
Rational ladder_power_scalar(int l, int i, int j, int m);

/** ladder_power_scalar at the full depth m = i - j; nonzero on all of Xi. */
Rational ladder_norm(int l, int i, int j);

/**
 * Coefficient c(k, i) in the swap identity
 *   (F-)^k F+ = (-1)^k F+ (F-)^k + c(k, i) (F-)^{k-1}   on form degree i:
 * k/8 for even k, (2i - 2l - k + 1)/8 for odd k, and 0 at k = 0.
 */
Rational swap_coefficient(int l, int k, int i);

/** Structural projection onto form degree i and spinor parity sign. */
WEndo degree_parity_projector(const WContext& ctx, int i, int sign);

/**
 * The same degree selector obtained spectrally, as the Lagrange product
 * prod_{k != i} (2H - k + l)/(i - k) over k = 0..2l.  Used as an oracle
 * against the structural selector; does not project parity.
 */
WEndo cartan_interpolation_projector(const WContext& ctx, int i);

/**
 * Spectral projector onto the summand E_ij of form degree i and spinor
 * parity sign: scaled (F+)^{i-j} (F-)^{i-j} after removing the summands
 * already split off below j.  The context must outlive the returned
 * endomorphism.
 */
WEndo summand_projector(const WContext& ctx, int i, int j, int sign);

/** The whole family S_i0 .. S_im for one degree and parity, in order. */
std::vector<WEndo> summand_projectors(const WContext& ctx, int i, int sign);

/**
 * Deterministic sweep for a nonzero image of the projector: applies it to
 * every basis element of the given form degree, spinor parity and
 * polynomial degree <= max_degree, returning the first nonzero image (the
 * zero form when the summand does not meet the truncation).  Random
 * probes can miss a summand; this cannot.
 */
SpinorForm nonzero_in_summand(const WContext& ctx, const WEndo& projector, int form_degree,
                              int parity_sign, int max_degree);

/** op applied power times. */
SpinorForm apply_power(const WEndo& op, int power, SpinorForm w);

/** Weight of the basis element e_A tensor z^a under the Cartan action. */
Weight basis_weight(int l, std::uint32_t mask, std::uint64_t mono_code);

/** One vector found by the highest-weight census. */
struct HighestWeightVector {
  int degree = 0;
  int sign = 0;
  Weight weight;
  SpinorForm vec;
};

/**
 * Exact joint kernel of the positive-root actions on the truncation of W
 * to polynomial degree <= max_degree, in one form degree and spinor
 * parity, blocked by weight.  Positive-root actions never raise the
 * polynomial degree and preserve both gradings, so the truncated space is
 * invariant and every reported vector is a genuine highest-weight vector
 * of W; raising max_degree can only add vectors, never change found ones.
 */
std::vector<HighestWeightVector> highest_weight_census(const WContext& ctx, int degree,
                                                       int sign, int max_degree);

/** Census over all form degrees and both parities, degree-major order. */
std::vector<HighestWeightVector> full_census(const WContext& ctx, int max_degree);

}  // namespace howe
