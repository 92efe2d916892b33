#include "howe/duality.hpp"

#include <sstream>
#include <utility>

#include "howe/probe.hpp"

namespace howe {

int rung_sign(int sign, int i) { return i % 2 == 0 ? sign : -sign; }

namespace {

SpinorForm lower_power(const WContext& ctx, int power, SpinorForm w) {
  for (int t = 0; t < power; ++t) w = f_minus(ctx, w);
  return w;
}

/**
 * A nonzero projected probe on rung i, falling back to the deterministic
 * basis sweep when every random probe misses the summand.
 */
SpinorForm projected_probe(const WContext& ctx, const WEndo& projector, int i, int sign,
                           int max_degree, ProbeGenerator& gen, int attempts) {
  for (int t = 0; t < attempts; ++t) {
    SpinorForm v = projector(gen.form_of_degree(i, 3));
    if (!v.is_zero()) return v;
  }
  return nonzero_in_summand(ctx, projector, i, sign, max_degree);
}

}  // namespace

TowerElement tower_map(const WContext& ctx, int j, int i, const SpinorForm& v) {
  TowerElement out;
  SpinorForm dropped = lower_power(ctx, i - j, v);
  if (!dropped.is_zero()) out.emplace(i, std::move(dropped));
  return out;
}

Matrix forms_matrix(const std::vector<SpinorForm>& forms) {
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::size_t> columns;
  for (const SpinorForm& w : forms)
    for (const auto& [mask, poly] : w.terms())
      for (const auto& [code, coeff] : poly.terms())
        columns.emplace(std::make_pair(mask, code), columns.size());
  Matrix m(forms.size(), columns.size());
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (const auto& [mask, poly] : forms[r].terms())
      for (const auto& [code, coeff] : poly.terms())
        m.at(r, columns.at(std::make_pair(mask, code))) = coeff;
  return m;
}

std::optional<std::string> tower_equivariance_witness(const WContext& ctx, int j,
                                                      int base_sign, int max_degree,
                                                      int trials, std::uint64_t seed) {
  const int l = ctx.l();
  ProbeGenerator gen(l, max_degree, seed);
  for (int i = j; i <= 2 * l - j; ++i) {
    const int sign = rung_sign(base_sign, i);
    WEndo project = summand_projector(ctx, i, j, sign);
    auto describe = [&](const char* what, int probe) {
      std::ostringstream os;
      os << "tower j=" << j << " base=" << (base_sign > 0 ? "+" : "-") << " rung i=" << i
         << " probe #" << probe << ": " << what;
      return os.str();
    };
    for (int t = 0; t < trials; ++t) {
      SpinorForm v = projected_probe(ctx, project, i, sign, max_degree, gen, trials);
      if (v.is_zero())
        return describe("summand not met at this polynomial degree bound", t);

      // h acts by the rung scalar (i - l)/2 on both sides of the map.
      SpinorForm hv = h_op(ctx, v);
      if (hv != v.scaled(GaussianRational(Rational::of(i - l, 2))))
        return describe("h does not act by (i - l)/2", t);

      // f-: below the bottom rung there is nothing to land on.
      if (i == j && !f_minus(ctx, v).is_zero())
        return describe("f- does not vanish on the bottom rung", t);

      // e-: two lowerings from the bottom two rungs must die.
      if (i <= j + 1 && !e_pm(ctx, -1, v).is_zero())
        return describe("e- does not vanish near the bottom rung", t);

      // f+: dropping the raised vector must match the ladder coefficient.
      SpinorForm raised = f_plus(ctx, v);
      if (i == 2 * l - j) {
        if (!raised.is_zero()) return describe("f+ does not vanish on the top rung", t);
      } else {
        SpinorForm lhs = lower_power(ctx, i + 1 - j, raised);
        SpinorForm rhs = lower_power(ctx, i - j, v)
                             .scaled(GaussianRational(ladder_coefficient(l, i + 1, j)));
        if (lhs != rhs) return describe("f+ drop disagrees with the ladder coefficient", t);
      }

      // e+: two raisings, coefficient 4 A(i+2) A(i+1).
      SpinorForm double_raised = e_pm(ctx, +1, v);
      if (i >= 2 * l - j - 1) {
        if (!double_raised.is_zero())
          return describe("e+ does not vanish near the top rung", t);
      } else {
        SpinorForm lhs = lower_power(ctx, i + 2 - j, double_raised);
        Rational coeff = Rational(4) * ladder_coefficient(l, i + 2, j) *
                         ladder_coefficient(l, i + 1, j);
        SpinorForm rhs = lower_power(ctx, i - j, v).scaled(GaussianRational(coeff));
        if (lhs != rhs) return describe("e+ drop disagrees with the ladder coefficients", t);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> tower_injectivity_witness(const WContext& ctx, int j, int i,
                                                     int base_sign, int max_degree,
                                                     int trials, std::uint64_t seed) {
  const int sign = rung_sign(base_sign, i);
  ProbeGenerator gen(ctx.l(), max_degree, seed);
  WEndo project = summand_projector(ctx, i, j, sign);
  std::vector<SpinorForm> rung, dropped;
  rung.push_back(nonzero_in_summand(ctx, project, i, sign, max_degree));
  for (int t = 0; t < trials; ++t) rung.push_back(project(gen.form_of_degree(i, 3)));
  for (const SpinorForm& v : rung) dropped.push_back(lower_power(ctx, i - j, v));
  std::size_t rank_rung = forms_matrix(rung).rank();
  std::size_t rank_dropped = forms_matrix(dropped).rank();
  if (rank_rung == 0) {
    std::ostringstream os;
    os << "rung i=" << i << " of tower j=" << j << " base=" << (base_sign > 0 ? "+" : "-")
       << ": no nonzero vectors at this polynomial degree bound";
    return os.str();
  }
  if (rank_rung != rank_dropped) {
    std::ostringstream os;
    os << "rung i=" << i << " of tower j=" << j << " base=" << (base_sign > 0 ? "+" : "-")
       << ": rank " << rank_rung << " drops to " << rank_dropped << " under (F-)^" << (i - j);
    return os.str();
  }
  return std::nullopt;
}

std::optional<std::string> commutant_pattern_witness(const WContext& ctx, int max_degree,
                                                     int trials, std::uint64_t seed) {
  const int l = ctx.l();
  ProbeGenerator gen(l, max_degree, seed);
  for (auto [i, j] : xi_set(l)) {
    WEndo project = summand_projector(ctx, i, j, +1);
    SpinorForm v = projected_probe(ctx, project, i, +1, max_degree, gen, trials);
    if (v.is_zero()) {
      std::ostringstream os;
      os << "summand (" << i << ", " << j << "): not met at this polynomial degree bound";
      return os.str();
    }
    SpinorForm u = v;
    for (int p = 1; p <= 2 * l - i - j + 1; ++p) {
      u = f_plus(ctx, u);
      const bool expect_nonzero = i + j + p <= 2 * l;
      if (expect_nonzero == u.is_zero()) {
        std::ostringstream os;
        os << "summand (" << i << ", " << j << "): (F+)^" << p << " is "
           << (u.is_zero() ? "zero" : "nonzero") << " but i + j + p = " << (i + j + p)
           << " vs 2l = " << 2 * l;
        return os.str();
      }
    }
  }
  return std::nullopt;
}

}  // namespace howe
