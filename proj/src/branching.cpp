#include "howe/branching.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

#include "howe/exterior.hpp"

namespace howe {

Weight weight_add(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  Weight out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  Weight out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ", ";
    if (w[k].denominator() == 1)
      os << w[k].numerator().str();
    else
      os << w[k].str();
  }
  os << ")";
  return os.str();
}

int m_index(int l, int i) { return std::min(i, 2 * l - i); }

std::vector<std::pair<int, int>> xi_set(int l) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= 2 * l; ++i)
    for (int j = 0; j <= m_index(l, i); ++j) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> xi_minus(int l) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : xi_set(l))
    if (!(i >= l && j == 2 * l - i)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> xi_plus(int l) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : xi_set(l))
    if (!(i <= l && j == i)) out.emplace_back(i, j);
  return out;
}

Weight spinor_weight(int l, int parity_index) {
  Weight w(l, Rational::of(-1, 2));
  if (parity_index == 1) w[l - 1] = Rational::of(-3, 2);
  return w;
}

Weight varpi(int l, int r) {
  if (r < 0 || r > l) throw std::invalid_argument("varpi: need 0 <= r <= l");
  Weight w(l, Rational(0));
  for (int k = 0; k < r; ++k) w[k] = Rational(1);
  return w;
}

std::vector<long long> varpi_coords(const Weight& w) {
  const int l = static_cast<int>(w.size());
  std::vector<long long> c(l);
  for (int j = 0; j < l; ++j) {
    Rational v = j + 1 < l ? w[j] - w[j + 1] : w[j];
    if (v.denominator() != 1 || v.sign() < 0)
      throw std::invalid_argument("varpi_coords: weight is not integral dominant");
    c[j] = v.numerator().convert_to<long long>();
  }
  return c;
}

Weight summand_weight(int l, int i, int j, int sign) {
  if (i > l) return summand_weight(l, 2 * l - i, j, sign);
  const Rational half = Rational::of(1, 2);
  if (j == l) {
    // Only the corner i = j = l, where the generic pattern has no slot
    // left for its final entry.
    Weight w(l, half);
    if (sign < 0) w[l - 1] = Rational::of(-5, 2);
    return w;
  }
  Weight w(l);
  for (int k = 0; k < j; ++k) w[k] = half;
  for (int k = j; k < l - 1; ++k) w[k] = -half;
  int sgn_index = sign > 0 ? 0 : 1;
  int flip = (i + j + sgn_index) % 2 == 0 ? 1 : -1;
  w[l - 1] = Rational(-1) + half * Rational(flip);
  return w;
}

std::vector<Weight> wedge_weights(int l, int r) {
  std::vector<Weight> out;
  if (r < 0) return out;
  for (std::uint32_t mask : wedge_word::enumerate_degree(2 * l, r)) {
    Weight w(l, Rational(0));
    for (int k : wedge_word::indices(mask)) {
      if (k <= l)
        w[k - 1] += Rational(1);
      else
        w[k - l - 1] -= Rational(1);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Weight> pi_support(int l, int r) {
  std::vector<Weight> big = wedge_weights(l, r);
  std::vector<Weight> small = wedge_weights(l, r - 2);
  std::sort(big.begin(), big.end());
  std::sort(small.begin(), small.end());
  std::vector<Weight> out;
  std::size_t s = 0;
  for (const Weight& w : big) {
    if (s < small.size() && small[s] == w) {
      ++s;
      continue;
    }
    out.push_back(w);
  }
  if (s != small.size())
    throw std::logic_error("pi_support: lower wedge weights do not embed");
  return out;
}

std::vector<Weight> displacement_set(int l, int parity_index, const Weight& mu) {
  std::vector<long long> coords = varpi_coords(mu);
  const long long delta = parity_index == 1 ? 1 : 0;
  std::vector<long long> lo(l), hi(l);
  for (int j = 0; j < l - 1; ++j) {
    lo[j] = 0;
    hi[j] = coords[j];
  }
  lo[l - 1] = -delta;
  hi[l - 1] = 2 * coords[l - 1] + 1 - delta;

  std::vector<Weight> out;
  std::vector<long long> d(lo);
  while (true) {
    long long total = 0;
    for (long long v : d) total += v;
    if (total % 2 == 0) {
      Weight kappa = mu;
      for (int j = 0; j < l; ++j) kappa[j] -= Rational(d[j]);
      out.push_back(std::move(kappa));
    }
    int k = l - 1;
    while (k >= 0 && d[k] == hi[k]) {
      d[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    ++d[k];
  }
  return out;
}

std::vector<Weight> branch_fundamental_spinor(int l, int parity_index, int r) {
  Weight mu = varpi(l, r);
  std::set<Weight> support;
  for (Weight& w : pi_support(l, r)) support.insert(std::move(w));
  Weight base = spinor_weight(l, parity_index);
  std::vector<Weight> out;
  for (const Weight& kappa : displacement_set(l, parity_index, mu)) {
    if (!support.count(kappa)) continue;
    out.push_back(weight_add(base, kappa));
  }
  return out;
}

DecompositionTable decomposition_table(int l) {
  DecompositionTable table;
  table.l = l;
  table.all_match = true;
  table.all_multiplicity_free = true;
  for (int i = 0; i <= 2 * l; ++i) {
    for (int sign : {+1, -1}) {
      DecompositionRow row;
      row.i = i;
      row.sign = sign;
      const int m = m_index(l, i);
      for (int j = 0; j <= m; ++j) row.closed_form.push_back(summand_weight(l, i, j, sign));
      const int parity_index = sign > 0 ? 0 : 1;
      for (int k = m; k >= 0; k -= 2)
        for (Weight& w : branch_fundamental_spinor(l, parity_index, k))
          row.branched.push_back(std::move(w));
      std::sort(row.closed_form.begin(), row.closed_form.end());
      std::sort(row.branched.begin(), row.branched.end());
      row.match = row.closed_form == row.branched;
      row.multiplicity_free =
          std::adjacent_find(row.closed_form.begin(), row.closed_form.end()) ==
          row.closed_form.end();
      table.total_summands += static_cast<int>(row.closed_form.size());
      table.all_match = table.all_match && row.match;
      table.all_multiplicity_free = table.all_multiplicity_free && row.multiplicity_free;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace howe
