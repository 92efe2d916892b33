#pragma once

#include <string>
#include <utility>
#include <vector>

#include "howe/rational.hpp"

namespace howe {

/** Weight of sp(2l) in epsilon coordinates: a length-l rational vector. */
using Weight = std::vector<Rational>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);

/** Rendering "(1/2, -3/2)"; integral entries print without denominator. */
std::string weight_str(const Weight& w);

/** m_i = min(i, 2l - i), the top summand index in form degree i. */
int m_index(int l, int i);

/** The index set Xi = {(i, j) : 0 <= i <= 2l, 0 <= j <= m_i}. */
std::vector<std::pair<int, int>> xi_set(int l);

/** Xi minus the upper boundary {(i, 2l - i) : i >= l}. */
std::vector<std::pair<int, int>> xi_minus(int l);

/** Xi minus the diagonal {(j, j) : j <= l}. */
std::vector<std::pair<int, int>> xi_plus(int l);

/**
 * Highest weight of the even (index 0) or odd (index 1) half of the
 * oscillator module: (-1/2, .., -1/2) and (-1/2, .., -1/2, -3/2).
 */
Weight spinor_weight(int l, int parity_index);

/** Fundamental weight varpi_r = eps_1 + .. + eps_r; varpi_0 = 0. */
Weight varpi(int l, int r);

/** Coordinates of an integral dominant weight in the varpi basis. */
std::vector<long long> varpi_coords(const Weight& w);

/**
 * Closed-form highest weight of the summand E_ij of Lambda^i tensor
 * S_sign.  Degrees above l reflect to 2l - i; the corner (l, l) is the
 * one place the generic half-pattern is replaced by its own two values.
 */
Weight summand_weight(int l, int i, int j, int sign);

/** Weight multiset of Lambda^r C^{2l} over the defining weights +-eps_k. */
std::vector<Weight> wedge_weights(int l, int r);

/**
 * Weight support (with multiplicity) of the fundamental representation
 * F(varpi_r), obtained as wedge_weights(r) minus wedge_weights(r - 2).
 */
std::vector<Weight> pi_support(int l, int r);

/**
 * Displacement set: the shifts kappa = mu - sum_j d_j eps_j over integer
 * tuples d with 0 <= d_j <= mu^varpi_j for j < l,
 * 0 <= d_l + [parity_index == 1] <= 2 mu^varpi_l + 1, and sum_j d_j even.
 */
std::vector<Weight> displacement_set(int l, int parity_index, const Weight& mu);

/**
 * Branching of F(varpi_r) tensor S_parity into lowest-weight oscillator
 * irreducibles: spinor_weight + kappa over the displacement shifts kappa
 * that also lie in the weight support of F(varpi_r).
 */
std::vector<Weight> branch_fundamental_spinor(int l, int parity_index, int r);

/** One degree-and-parity row of the decomposition computed two ways. */
struct DecompositionRow {
  int i = 0;
  int sign = 0;
  std::vector<Weight> closed_form;  // sorted
  std::vector<Weight> branched;     // sorted
  bool match = false;
  bool multiplicity_free = false;
};

struct DecompositionTable {
  int l = 0;
  std::vector<DecompositionRow> rows;
  int total_summands = 0;
  bool all_match = false;
  bool all_multiplicity_free = false;
};

/**
 * The full decomposition of Lambda^i tensor S_+- for every i, computed
 * once from the closed-form weights and once through the branching rule
 * applied to the fundamental constituents of Lambda^i.
 */
DecompositionTable decomposition_table(int l);

}  // namespace howe
