#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "howe/branching.hpp"
#include "howe/osp.hpp"
#include "howe/projectors.hpp"
#include "howe/spinor_form.hpp"

using namespace howe;

namespace {

Weight w2(long long a_num, long long a_den, long long b_num, long long b_den) {
  return {Rational::of(a_num, a_den), Rational::of(b_num, b_den)};
}

std::uint32_t mask_of(std::initializer_list<int> indices) {
  std::uint32_t m = 0;
  for (int k : indices) m |= 1u << (k - 1);
  return m;
}

SpinorForm simple(int l, std::initializer_list<int> indices, std::vector<int> exps,
                  GaussianRational c = GaussianRational(1)) {
  return SpinorForm::term(l, mask_of(indices), SpinorPoly::monomial(l, mono::pack(exps), c));
}

}  // namespace

TEST_CASE("index bookkeeping") {
  CHECK(m_index(2, 0) == 0);
  CHECK(m_index(2, 1) == 1);
  CHECK(m_index(2, 2) == 2);
  CHECK(m_index(2, 3) == 1);
  CHECK(m_index(2, 4) == 0);
  CHECK(xi_set(2).size() == 9u);
  CHECK(xi_minus(2).size() == 6u);
  CHECK(xi_plus(2).size() == 6u);
  CHECK(xi_set(3).size() == 16u);
}

TEST_CASE("weight rendering and varpi coordinates") {
  CHECK(weight_str(w2(1, 2, -3, 2)) == "(1/2, -3/2)");
  CHECK(weight_str({Rational(1), Rational(0)}) == "(1, 0)");
  CHECK(varpi(2, 1) == Weight{Rational(1), Rational(0)});
  CHECK(varpi(2, 2) == Weight{Rational(1), Rational(1)});
  CHECK(varpi_coords({Rational(3), Rational(1)}) == std::vector<long long>{2, 1});
  CHECK(varpi_coords({Rational(2), Rational(2)}) == std::vector<long long>{0, 2});
}

TEST_CASE("spinor weights") {
  CHECK(spinor_weight(2, 0) == w2(-1, 2, -1, 2));
  CHECK(spinor_weight(2, 1) == w2(-1, 2, -3, 2));
  CHECK(spinor_weight(3, 1) ==
        Weight{Rational::of(-1, 2), Rational::of(-1, 2), Rational::of(-3, 2)});
}

TEST_CASE("closed form summand weights at l = 2") {
  // Derived by hand from the branching rule; the corner (l, l) and one
  // reflected degree are included deliberately.
  CHECK(summand_weight(2, 0, 0, +1) == w2(-1, 2, -1, 2));
  CHECK(summand_weight(2, 0, 0, -1) == w2(-1, 2, -3, 2));
  CHECK(summand_weight(2, 1, 0, +1) == w2(-1, 2, -3, 2));
  CHECK(summand_weight(2, 1, 1, +1) == w2(1, 2, -1, 2));
  CHECK(summand_weight(2, 2, 0, +1) == w2(-1, 2, -1, 2));
  CHECK(summand_weight(2, 2, 1, +1) == w2(1, 2, -3, 2));
  CHECK(summand_weight(2, 2, 2, +1) == w2(1, 2, 1, 2));
  CHECK(summand_weight(2, 2, 2, -1) == w2(1, 2, -5, 2));
  CHECK(summand_weight(2, 3, 0, -1) == w2(-1, 2, -1, 2));
  CHECK(summand_weight(2, 3, 1, -1) == w2(1, 2, -3, 2));
}

TEST_CASE("fundamental weight supports") {
  CHECK(pi_support(2, 0).size() == 1u);
  CHECK(pi_support(2, 1).size() == 4u);
  // dim F(varpi_2) = C(4,2) - C(4,0) = 5, with the zero weight once.
  std::vector<Weight> s2 = pi_support(2, 2);
  CHECK(s2.size() == 5u);
  CHECK(std::count(s2.begin(), s2.end(), Weight{Rational(0), Rational(0)}) == 1);
  CHECK(std::count(s2.begin(), s2.end(), w2(1, 1, 1, 1)) == 1);
  CHECK(std::count(s2.begin(), s2.end(), w2(-1, 1, 1, 1)) == 1);
}

TEST_CASE("displacement sets at l = 2") {
  std::vector<Weight> t0 = displacement_set(2, 0, {Rational(1), Rational(0)});
  std::sort(t0.begin(), t0.end());
  std::vector<Weight> expect0 = {w2(0, 1, -1, 1), w2(1, 1, 0, 1)};
  std::sort(expect0.begin(), expect0.end());
  CHECK(t0 == expect0);

  std::vector<Weight> t1 = displacement_set(2, 1, {Rational(1), Rational(0)});
  std::sort(t1.begin(), t1.end());
  std::vector<Weight> expect1 = {w2(0, 1, 1, 1), w2(1, 1, 0, 1)};
  std::sort(expect1.begin(), expect1.end());
  CHECK(t1 == expect1);
}

TEST_CASE("branching matches the hand expansion in degree one") {
  std::vector<Weight> b0 = branch_fundamental_spinor(2, 0, 1);
  std::sort(b0.begin(), b0.end());
  std::vector<Weight> expect = {w2(-1, 2, -3, 2), w2(1, 2, -1, 2)};
  std::sort(expect.begin(), expect.end());
  CHECK(b0 == expect);
}

TEST_CASE("decomposition table two ways") {
  DecompositionTable table = decomposition_table(2);
  CHECK(table.total_summands == 18);
  CHECK(table.all_match);
  CHECK(table.all_multiplicity_free);
  REQUIRE(table.rows.size() == 10u);
  // Lambda^0 tensor S_+ is a single summand at the spinor weight.
  const DecompositionRow& row0 = table.rows.front();
  CHECK(row0.i == 0);
  CHECK(row0.closed_form == std::vector<Weight>{w2(-1, 2, -1, 2)});
  for (int l : {3, 4, 5}) {
    DecompositionTable t = decomposition_table(l);
    CHECK(t.all_match);
    CHECK(t.all_multiplicity_free);
  }
}

TEST_CASE("ladder scalars at l = 2") {
  CHECK(raise_lower_scalar(2, 0, 0) == Rational::of(-1, 2));
  CHECK(raise_lower_scalar(2, 1, 0) == Rational::of(1, 4));
  CHECK(lower_raise_scalar(2, 1, 0) == Rational::of(-1, 2));
  // The F- F+ scalar vanishes exactly on the upper boundary i + j = 2l.
  for (auto [i, j] : xi_set(2)) {
    CHECK(raise_lower_scalar(2, i, j).is_zero() == (i + j == 4));
    CHECK(!ladder_norm(2, i, j).is_zero());
  }
}

TEST_CASE("swap coefficients") {
  CHECK(swap_coefficient(2, 0, 3).is_zero());
  CHECK(swap_coefficient(2, 1, 1) == Rational::of(-1, 4));
  CHECK(swap_coefficient(2, 2, 1) == Rational::of(1, 4));
  CHECK(swap_coefficient(2, 2, 3) == Rational::of(1, 4));
  // The swap coefficient at full depth reproduces the raising coefficient
  // of the ladder module, which is what ties the two calculi together.
  for (int l : {2, 3}) {
    for (auto [i, j] : xi_set(l)) {
      if (i + 1 - j >= 1 && i + 1 <= 2 * l) {
        CHECK(swap_coefficient(l, i + 1 - j, i) == ladder_coefficient(l, i + 1, j));
      }
    }
  }
}

TEST_CASE("summand projectors on an explicit one form") {
  // On eps^1 tensor 1 the two projector values can be written out by
  // hand: S_10 v = -(1/2) eps^1 tensor 1 - (i/2) eps^3 tensor z1^2
  //               - (i/2) eps^4 tensor z1 z2, and S_11 v = v - S_10 v.
  WContext ctx(2);
  SpinorForm v = simple(2, {1}, {0, 0});
  SpinorForm s10 = simple(2, {1}, {0, 0}, GaussianRational(Rational::of(-1, 2))) +
                   simple(2, {3}, {2, 0}, GaussianRational::of(0, 1, -1, 2)) +
                   simple(2, {4}, {1, 1}, GaussianRational::of(0, 1, -1, 2));
  WEndo p10 = summand_projector(ctx, 1, 0, +1);
  WEndo p11 = summand_projector(ctx, 1, 1, +1);
  CHECK(p10(v) == s10);
  CHECK(p11(v) == v - s10);
  // Orthogonal idempotents.
  CHECK(p10(p10(v)) == p10(v));
  CHECK(p11(p10(v)).is_zero());
  // The j = 1 part is a genuine bottom rung: F- kills it.
  CHECK(f_minus(ctx, p11(v)).is_zero());
  CHECK(!f_minus(ctx, p10(v)).is_zero());
}
