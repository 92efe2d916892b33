#include "howe/checks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "howe/exterior.hpp"
#include "howe/symplectic.hpp"

namespace howe {

namespace {

nlohmann::ordered_json probe_params(const RunConfig& cfg) {
  nlohmann::ordered_json p;
  p["l"] = cfg.l;
  p["max_degree"] = cfg.max_degree;
  p["trials"] = cfg.trials;
  return p;
}

std::string sign_str(int sign) { return sign > 0 ? "+" : "-"; }

}  // namespace

Corruption parse_corruption(const std::string& name) {
  if (name.empty()) return Corruption::none;
  if (name == "f-minus") return Corruption::f_minus_half;
  if (name == "f-plus") return Corruption::f_plus_sign;
  if (name == "h") return Corruption::h_scale;
  if (name == "a-coeff") return Corruption::a_zero;
  throw std::invalid_argument("unknown corruption '" + name + "'");
}

CheckReport check_structure(const RunConfig& cfg) {
  const std::string name = "structure";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params;
  params["generators"] = kOspDim;
  params["triples"] = kOspDim * kOspDim * kOspDim;
  if (auto w = super_jacobi_witness()) return CheckReport::failed(name, params, seed, *w);
  return CheckReport::passed(name, params, seed);
}

CheckReport check_grading(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "grading";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params = probe_params(cfg);
  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);
  const int l = ctx.l();
  ProbeGenerator gen(l, cfg.max_degree, seed);
  for (int r = 0; r <= 2 * l; ++r) {
    for (int sign : {+1, -1}) {
      for (int t = 0; t < cfg.trials; ++t) {
        SpinorForm w = gen.form_of_degree_parity(r, sign, 3);
        if (w.is_zero()) continue;
        SpinorForm expect = w.scaled(GaussianRational(Rational::of(r - l, 2)));
        if (h_op(ctx, w) != expect) {
          std::ostringstream os;
          os << "H is not (r - l)/2 on degree " << r << " parity " << sign_str(sign)
             << " probe #" << t;
          return CheckReport::failed(name, params, seed, os.str());
        }
      }
    }
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_equivariance(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "equivariance";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params = probe_params(cfg);
  const int l = ctx.l();
  params["sp_basis"] = l * (2 * l + 1);
  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);
  std::vector<WOperator> ops = {make_f_plus(ctx), make_f_minus(ctx), make_h(ctx),
                                make_e_plus(ctx), make_e_minus(ctx), make_p_plus(),
                                make_p_minus()};
  std::vector<SpElement> basis = sp_basis(l);
  ProbeGenerator gen(l, cfg.max_degree, seed);
  for (int t = 0; t < cfg.trials; ++t) {
    SpinorForm w = gen.form(4);
    std::vector<SpinorForm> op_w;
    op_w.reserve(ops.size());
    for (const WOperator& op : ops) op_w.push_back(op(w));
    for (const SpElement& x : basis) {
      SpinorForm xw = rho(ctx, x, w);
      for (std::size_t k = 0; k < ops.size(); ++k) {
        if (ops[k](xw) != rho(ctx, x, op_w[k])) {
          std::ostringstream os;
          os << ops[k].name << " does not commute with rho(" << x.str() << ") on probe #"
             << t;
          return CheckReport::failed(name, params, seed, os.str());
        }
      }
    }
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_relations(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "relations";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params = probe_params(cfg);
  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);
  ProbeGenerator gen(ctx.l(), cfg.max_degree, seed);
  std::vector<SpinorForm> probes;
  for (int t = 0; t < cfg.trials; ++t) probes.push_back(gen.form(4));
  OspOperators ops = make_osp_operators(ctx);
  if (auto w = osp_relations_witness(ops, probes))
    return CheckReport::failed(name, params, seed, *w);
  return CheckReport::passed(name, params, seed);
}

CheckReport check_ladder(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "ladder";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params = probe_params(cfg);
  const int l = ctx.l();
  params["summands"] = static_cast<int>(xi_set(l).size());

  for (auto [i, j] : xi_set(l)) {
    const bool zero_expected = i + j == 2 * l;
    if (raise_lower_scalar(l, i, j).is_zero() != zero_expected) {
      std::ostringstream os;
      os << "F- F+ scalar has the wrong vanishing locus at (" << i << ", " << j << ")";
      return CheckReport::failed(name, params, seed, os.str());
    }
    if (ladder_norm(l, i, j).is_zero()) {
      std::ostringstream os;
      os << "full-depth ladder scalar vanishes at (" << i << ", " << j << ")";
      return CheckReport::failed(name, params, seed, os.str());
    }
  }

  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);
  ProbeGenerator gen(l, cfg.max_degree, seed);
  for (auto [i, j] : xi_set(l)) {
    GaussianRational scalar(raise_lower_scalar(l, i, j));
    for (int sign : {+1, -1}) {
      WEndo project = summand_projector(ctx, i, j, sign);
      bool any_nonzero = false;
      for (int t = 0; t < cfg.trials; ++t) {
        SpinorForm v = project(gen.form_of_degree(i, 3));
        if (v.is_zero()) continue;
        any_nonzero = true;
        if (f_minus(ctx, f_plus(ctx, v)) != v.scaled(scalar)) {
          std::ostringstream os;
          os << "F- F+ is not " << scalar.re.str() << " on summand (" << i << ", " << j
             << ") parity " << sign_str(sign) << " probe #" << t;
          return CheckReport::failed(name, params, seed, os.str());
        }
      }
      if (!any_nonzero) {
        // Sparse probes can miss a summand; fall back to the basis sweep.
        SpinorForm v = nonzero_in_summand(ctx, project, i, sign, cfg.max_degree);
        if (v.is_zero()) {
          std::ostringstream os;
          os << "summand (" << i << ", " << j << ") parity " << sign_str(sign)
             << " has no vector of polynomial degree <= " << cfg.max_degree;
          return CheckReport::failed(name, params, seed, os.str());
        }
        if (f_minus(ctx, f_plus(ctx, v)) != v.scaled(scalar)) {
          std::ostringstream os;
          os << "F- F+ is not the predicted scalar on summand (" << i << ", " << j
             << ") parity " << sign_str(sign) << " (swept vector)";
          return CheckReport::failed(name, params, seed, os.str());
        }
      }
    }
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_commutation(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "commutation";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  const int l = ctx.l();
  const int k_max = 4;
  std::vector<std::uint32_t> masks = wedge_word::enumerate(2 * l);
  std::vector<std::uint64_t> codes = mono::enumerate(l, cfg.max_degree);
  nlohmann::ordered_json params;
  params["l"] = cfg.l;
  params["max_degree"] = cfg.max_degree;
  params["k_max"] = k_max;
  params["basis_elements"] = static_cast<int>(masks.size() * codes.size());

  for (std::uint32_t mask : masks) {
    const int i = wedge_word::degree(mask);
    for (std::uint64_t code : codes) {
      SpinorForm b =
          SpinorForm::term(l, mask, SpinorPoly::monomial(l, code, GaussianRational(1)));
      std::vector<SpinorForm> down = {b};
      for (int k = 1; k <= k_max; ++k) down.push_back(f_minus(ctx, down.back()));
      std::vector<SpinorForm> mixed = {f_plus(ctx, b)};
      for (int k = 1; k <= k_max; ++k) mixed.push_back(f_minus(ctx, mixed.back()));
      for (int k = 0; k <= k_max; ++k) {
        SpinorForm rhs = f_plus(ctx, down[k]).scaled(GaussianRational(k % 2 ? -1 : 1));
        if (k >= 1)
          rhs += down[k - 1].scaled(GaussianRational(swap_coefficient(l, k, i)));
        if (mixed[k] != rhs) {
          std::ostringstream os;
          os << "swap identity fails at k=" << k << " on " << wedge_word::str(mask)
             << " (x) " << mono::str(code, l);
          return CheckReport::failed(name, params, seed, os.str());
        }
      }
    }
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_projectors(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "projectors";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params = probe_params(cfg);
  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);
  const int l = ctx.l();
  const int quadratic_trials = std::min(cfg.trials, 3);
  const int equivariance_trials = std::min(cfg.trials, 2);
  params["quadratic_trials"] = quadratic_trials;
  params["equivariance_trials"] = equivariance_trials;
  ProbeGenerator gen(l, cfg.max_degree, seed);
  std::vector<SpElement> basis = sp_basis(l);

  for (int i = 0; i <= 2 * l; ++i) {
    for (int sign : {+1, -1}) {
      const int m = m_index(l, i);
      std::vector<WEndo> family = summand_projectors(ctx, i, sign);
      WEndo selector = degree_parity_projector(ctx, i, sign);
      auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "degree " << i << " parity " << sign_str(sign) << ": " << what;
        return CheckReport::failed(name, params, seed, os.str());
      };

      for (int t = 0; t < quadratic_trials; ++t) {
        SpinorForm w = gen.form_of_degree(i, 4);
        std::vector<SpinorForm> parts;
        SpinorForm total(l);
        for (int j = 0; j <= m; ++j) {
          parts.push_back(family[static_cast<std::size_t>(j)](w));
          total += parts.back();
        }
        if (total != selector(w)) return fail("family does not sum to the selector");
        for (int j = 0; j <= m; ++j) {
          if (family[static_cast<std::size_t>(j)](parts[static_cast<std::size_t>(j)]) !=
              parts[static_cast<std::size_t>(j)]) {
            std::ostringstream os;
            os << "S_" << i << j << " is not idempotent";
            return fail(os.str());
          }
          for (int k = 0; k <= m; ++k) {
            if (k == j) continue;
            if (!family[static_cast<std::size_t>(j)](parts[static_cast<std::size_t>(k)])
                     .is_zero()) {
              std::ostringstream os;
              os << "S_" << i << j << " S_" << i << k << " is not zero";
              return fail(os.str());
            }
          }
        }
      }

      if (sign > 0) {
        // The spectral Lagrange form of the degree selector, checked on
        // mixed-degree probes (it is parity-blind, so once per degree).
        WEndo spectral = cartan_interpolation_projector(ctx, i);
        for (int t = 0; t < quadratic_trials; ++t) {
          SpinorForm u = gen.form(4);
          if (spectral(u) != u.degree_component(i))
            return fail("spectral degree selector disagrees with the structural one");
        }
      }

      for (int t = 0; t < equivariance_trials; ++t) {
        SpinorForm w = gen.form_of_degree(i, 3);
        std::vector<SpinorForm> proj_w;
        for (int j = 0; j <= m; ++j)
          proj_w.push_back(family[static_cast<std::size_t>(j)](w));
        for (const SpElement& x : basis) {
          SpinorForm xw = rho(ctx, x, w);
          for (int j = 0; j <= m; ++j) {
            if (family[static_cast<std::size_t>(j)](xw) !=
                rho(ctx, x, proj_w[static_cast<std::size_t>(j)])) {
              std::ostringstream os;
              os << "S_" << i << j << " does not commute with rho(" << x.str() << ")";
              return fail(os.str());
            }
          }
        }
      }
    }
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_irreducibility(const RunConfig& cfg) {
  const std::string name = "irreducibility";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params;
  params["l"] = cfg.l;
  params["modules"] = cfg.l + 1;
  Corruption corrupt = parse_corruption(cfg.corrupt);
  for (int j = 0; j <= cfg.l; ++j) {
    SigmaRep rep = build_sigma(cfg.l, j, corrupt);
    if (auto w = osp_relations_witness(rep)) return CheckReport::failed(name, params, seed, *w);
    if (auto w = sigma_orbit_witness(rep)) return CheckReport::failed(name, params, seed, *w);
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_casimir(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "casimir";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params;
  params["l"] = cfg.l;
  Corruption corrupt = parse_corruption(cfg.corrupt);
  auto sol = solve_casimir(cfg.l, corrupt);
  if (!sol)
    return CheckReport::failed(name, params, seed,
                               "no scalar-acting central quadratic element found");
  params["a"] = sol->a.str();
  params["b"] = sol->b.str();
  params["c"] = sol->c.str();
  nlohmann::ordered_json scalars = nlohmann::ordered_json::array();
  for (const Rational& s : sol->scalars) scalars.push_back(s.str());
  params["scalars"] = scalars;
  params["trials"] = cfg.trials;
  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);

  OspOperators ops = make_osp_operators(ctx);
  GaussianRational a(sol->a), b(sol->b), c(sol->c);
  auto casimir = [&](const SpinorForm& w) {
    SpinorForm out = ops.h(ops.h(w)).scaled(a);
    out += (ops.e_plus(ops.e_minus(w)) + ops.e_minus(ops.e_plus(w))).scaled(b);
    out += (ops.f_plus(ops.f_minus(w)) - ops.f_minus(ops.f_plus(w))).scaled(c);
    return out;
  };
  ProbeGenerator gen(ctx.l(), cfg.max_degree, seed);
  for (int t = 0; t < cfg.trials; ++t) {
    SpinorForm w = gen.form(4);
    SpinorForm cw = casimir(w);
    for (int g = 0; g < kOspDim; ++g) {
      if (casimir(ops.gen(g)(w)) != ops.gen(g)(cw)) {
        std::ostringstream os;
        os << "casimir does not commute with " << osp_gen_name(g) << " on probe #" << t;
        return CheckReport::failed(name, params, seed, os.str());
      }
    }
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_duality_equivariance(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "duality-equivariance";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params = probe_params(cfg);
  params["towers"] = cfg.l + 1;
  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);
  for (int j = 0; j <= cfg.l; ++j) {
    for (int base : {+1, -1}) {
      std::uint64_t stream = seed ^ static_cast<std::uint64_t>(2 * j + (base < 0 ? 1 : 0));
      if (auto w = tower_equivariance_witness(ctx, j, base, cfg.max_degree, cfg.trials, stream))
        return CheckReport::failed(name, params, seed, *w);
    }
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_duality_injectivity(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "duality-injectivity";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params = probe_params(cfg);
  params["towers"] = cfg.l + 1;
  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);
  const int l = cfg.l;
  for (int j = 0; j <= l; ++j) {
    for (int i = j; i <= 2 * l - j; ++i) {
      for (int base : {+1, -1}) {
        std::uint64_t stream =
            seed ^ static_cast<std::uint64_t>(100 * j + 2 * i + (base < 0 ? 1 : 0));
        if (auto w =
                tower_injectivity_witness(ctx, j, i, base, cfg.max_degree, cfg.trials, stream))
          return CheckReport::failed(name, params, seed, *w);
      }
    }
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_commutant(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "commutant";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  nlohmann::ordered_json params = probe_params(cfg);
  params["summands"] = static_cast<int>(xi_set(cfg.l).size());
  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);
  if (auto w = commutant_pattern_witness(ctx, cfg.max_degree, cfg.trials, seed))
    return CheckReport::failed(name, params, seed, *w);
  return CheckReport::passed(name, params, seed);
}

CheckReport check_decomposition(const RunConfig& cfg) {
  const std::string name = "decomposition";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  DecompositionTable table = decomposition_table(cfg.l);
  nlohmann::ordered_json params;
  params["l"] = cfg.l;
  params["total_summands"] = table.total_summands;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const DecompositionRow& row : table.rows) {
    nlohmann::ordered_json r;
    r["i"] = row.i;
    r["sign"] = sign_str(row.sign);
    nlohmann::ordered_json weights = nlohmann::ordered_json::array();
    for (const Weight& w : row.closed_form) weights.push_back(weight_str(w));
    r["weights"] = weights;
    r["match"] = row.match;
    rows.push_back(r);
  }
  params["rows"] = rows;
  for (const DecompositionRow& row : table.rows) {
    if (!row.match) {
      std::ostringstream os;
      os << "branched weights disagree with the closed form at degree " << row.i
         << " parity " << sign_str(row.sign);
      return CheckReport::failed(name, params, seed, os.str());
    }
    if (!row.multiplicity_free) {
      std::ostringstream os;
      os << "repeated summand at degree " << row.i << " parity " << sign_str(row.sign);
      return CheckReport::failed(name, params, seed, os.str());
    }
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_highest_weight_census(const WContext& ctx, const RunConfig& cfg) {
  const std::string name = "highest-weight-census";
  const std::uint64_t seed = derive_seed(cfg.seed, name);
  const int l = cfg.l;
  using Entry = std::tuple<int, int, Weight>;
  std::vector<Entry> expected;
  for (int i = 0; i <= 2 * l; ++i)
    for (int sign : {+1, -1})
      for (int j = 0; j <= m_index(l, i); ++j)
        expected.emplace_back(i, sign, summand_weight(l, i, j, sign));
  std::sort(expected.begin(), expected.end());

  std::vector<HighestWeightVector> census = full_census(ctx, cfg.max_degree);
  std::vector<Entry> found;
  nlohmann::ordered_json vectors = nlohmann::ordered_json::array();
  for (const HighestWeightVector& v : census) {
    found.emplace_back(v.degree, v.sign, v.weight);
    nlohmann::ordered_json jv;
    jv["degree"] = v.degree;
    jv["sign"] = sign_str(v.sign);
    jv["weight"] = weight_str(v.weight);
    vectors.push_back(jv);
  }
  std::sort(found.begin(), found.end());

  nlohmann::ordered_json params;
  params["l"] = l;
  params["max_degree"] = cfg.max_degree;
  params["found"] = static_cast<int>(found.size());
  params["expected"] = static_cast<int>(expected.size());
  params["vectors"] = vectors;

  for (const Entry& e : found) {
    if (!std::binary_search(expected.begin(), expected.end(), e)) {
      std::ostringstream os;
      os << "unexpected highest-weight vector at degree " << std::get<0>(e) << " parity "
         << sign_str(std::get<1>(e)) << " weight " << weight_str(std::get<2>(e));
      return CheckReport::failed(name, params, seed, os.str());
    }
  }
  if (found != expected) {
    std::ostringstream os;
    os << "census found " << found.size() << " of " << expected.size()
       << " highest-weight vectors at polynomial degree bound " << cfg.max_degree
       << "; raise the bound to see the rest";
    return CheckReport::failed(name, params, seed, os.str());
  }
  return CheckReport::passed(name, params, seed);
}

CheckReport check_operator_equivariance(const WContext& ctx, const RunConfig& cfg,
                                        const std::string& op_name, const WEndo& op) {
  const std::string name = "operator-equivariance";
  const std::uint64_t seed = derive_seed(cfg.seed, name + ":" + op_name);
  nlohmann::ordered_json params = probe_params(cfg);
  params["operator"] = op_name;
  if (cfg.trials == 0) return CheckReport::vacuous_result(name, params, seed);
  ProbeGenerator gen(ctx.l(), cfg.max_degree, seed);
  std::vector<SpElement> basis = sp_basis(ctx.l());
  for (int t = 0; t < cfg.trials; ++t) {
    SpinorForm w = gen.form(4);
    SpinorForm ow = op(w);
    for (const SpElement& x : basis) {
      if (op(rho(ctx, x, w)) != rho(ctx, x, ow)) {
        std::ostringstream os;
        os << op_name << " does not commute with rho(" << x.str() << ") on probe #" << t;
        return CheckReport::failed(name, params, seed, os.str());
      }
    }
  }
  return CheckReport::passed(name, params, seed);
}

}  // namespace howe
