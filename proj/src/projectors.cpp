#include "howe/projectors.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

#include "howe/exterior.hpp"
#include "howe/symplectic.hpp"

namespace howe {

Rational raise_lower_scalar(int l, int i, int j) {
  if ((i + j) % 2 != 0) return Rational(BigInt(1 + i - j), BigInt(8));
  return Rational(BigInt(i + j - 2 * l), BigInt(8));
}

Rational lower_raise_scalar(int l, int i, int j) { return raise_lower_scalar(l, i - 1, j); }

Rational ladder_power_scalar(int l, int i, int j, int m) {
  Rational out(1);
  for (int t = i - m; t <= i - 1; ++t) out *= raise_lower_scalar(l, t, j);
  return out;
}

Rational ladder_norm(int l, int i, int j) { return ladder_power_scalar(l, i, j, i - j); }

Rational swap_coefficient(int l, int k, int i) {
  if (k == 0) return Rational(0);
  if (k % 2 == 0) return Rational(BigInt(k), BigInt(8));
  return Rational(BigInt(2 * i - 2 * l - k + 1), BigInt(8));
}

WEndo degree_parity_projector(const WContext& ctx, int i, int sign) {
  (void)ctx;
  return [i, sign](const SpinorForm& w) {
    SpinorForm component = w.degree_component(i);
    SpinorForm out(w.l());
    for (const auto& [mask, poly] : component.terms())
      out.add_term(mask, parity_project(sign, poly));
    return out;
  };
}

WEndo cartan_interpolation_projector(const WContext& ctx, int i) {
  const WContext* c = &ctx;
  const int l = ctx.l();
  return [c, i, l](const SpinorForm& w) {
    SpinorForm acc = w;
    for (int k = 0; k <= 2 * l; ++k) {
      if (k == i) continue;
      SpinorForm numer = h_op(*c, acc).scaled(GaussianRational(2)) -
                         acc.scaled(GaussianRational(Rational(k - l)));
      acc = numer.scaled(GaussianRational(Rational(1) / Rational(i - k)));
    }
    return acc;
  };
}

namespace {

SpinorForm ladder_round_trip(const WContext& ctx, int depth, SpinorForm w) {
  for (int t = 0; t < depth; ++t) w = f_minus(ctx, w);
  for (int t = 0; t < depth; ++t) w = f_plus(ctx, w);
  return w;
}

}  // namespace

std::vector<WEndo> summand_projectors(const WContext& ctx, int i, int sign) {
  const WContext* c = &ctx;
  const int l = ctx.l();
  WEndo base = degree_parity_projector(ctx, i, sign);
  auto family = std::make_shared<std::vector<WEndo>>();
  const int m = m_index(l, i);
  for (int j = 0; j <= m; ++j) {
    GaussianRational inv_norm(ladder_norm(l, i, j).inv());
    WEndo self = [c, base, family, i, j, inv_norm](const SpinorForm& w) {
      SpinorForm v = base(w);
      for (int k = 0; k < j; ++k) v -= (*family)[static_cast<std::size_t>(k)](w);
      return ladder_round_trip(*c, i - j, std::move(v)).scaled(inv_norm);
    };
    family->push_back(std::move(self));
  }
  return *family;
}

WEndo summand_projector(const WContext& ctx, int i, int j, int sign) {
  return summand_projectors(ctx, i, sign).at(static_cast<std::size_t>(j));
}

SpinorForm nonzero_in_summand(const WContext& ctx, const WEndo& projector, int form_degree,
                              int parity_sign, int max_degree) {
  const int l = ctx.l();
  const int parity = parity_sign > 0 ? 0 : 1;
  for (std::uint32_t mask : wedge_word::enumerate_degree(2 * l, form_degree)) {
    for (std::uint64_t code : mono::enumerate(l, max_degree)) {
      if (mono::total_degree(code) % 2 != parity) continue;
      SpinorForm image = projector(
          SpinorForm::term(l, mask, SpinorPoly::monomial(l, code, GaussianRational(1))));
      if (!image.is_zero()) return image;
    }
  }
  return SpinorForm(l);
}

SpinorForm apply_power(const WEndo& op, int power, SpinorForm w) {
  for (int t = 0; t < power; ++t) w = op(w);
  return w;
}

Weight basis_weight(int l, std::uint32_t mask, std::uint64_t mono_code) {
  Weight w(l);
  for (int k = 1; k <= l; ++k) {
    int form_part = 0;
    if (mask & (1u << (k + l - 1))) form_part += 1;
    if (mask & (1u << (k - 1))) form_part -= 1;
    w[k - 1] = Rational(form_part) - Rational(mono::get(mono_code, k)) - Rational::of(1, 2);
  }
  return w;
}

std::vector<HighestWeightVector> highest_weight_census(const WContext& ctx, int degree,
                                                       int sign, int max_degree) {
  const int l = ctx.l();
  std::vector<std::pair<std::uint32_t, std::uint64_t>> basis;
  std::map<std::pair<std::uint32_t, std::uint64_t>, std::size_t> index;
  const int parity = sign > 0 ? 0 : 1;
  for (std::uint32_t mask : wedge_word::enumerate_degree(2 * l, degree)) {
    for (std::uint64_t code : mono::enumerate(l, max_degree)) {
      if (mono::total_degree(code) % 2 != parity) continue;
      index.emplace(std::make_pair(mask, code), basis.size());
      basis.emplace_back(mask, code);
    }
  }

  std::vector<RootVector> roots = positive_root_vectors(l);

  // Sparse coordinates of every positive-root image of every basis element.
  // The truncation is invariant (see header), so every image term resolves
  // to a basis index.
  using Coords = std::vector<std::pair<std::size_t, GaussianRational>>;
  std::vector<std::vector<Coords>> image(roots.size(), std::vector<Coords>(basis.size()));
  for (std::size_t x = 0; x < roots.size(); ++x) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      SpinorForm vec = SpinorForm::term(
          l, basis[b].first, SpinorPoly::monomial(l, basis[b].second, GaussianRational(1)));
      SpinorForm img = rho(ctx, roots[x].vec, vec);
      for (const auto& [mask, poly] : img.terms()) {
        for (const auto& [code, coeff] : poly.terms()) {
          auto it = index.find(std::make_pair(mask, code));
          if (it == index.end())
            throw std::logic_error("highest_weight_census: truncation escaped");
          image[x][b].emplace_back(it->second, coeff);
        }
      }
    }
  }

  std::map<Weight, std::vector<std::size_t>> blocks;
  for (std::size_t b = 0; b < basis.size(); ++b)
    blocks[basis_weight(l, basis[b].first, basis[b].second)].push_back(b);

  std::vector<HighestWeightVector> found;
  for (const auto& [weight, members] : blocks) {
    // Rows indexed by the (root, target coordinate) pairs that actually
    // occur among the images of this block.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_index;
    for (std::size_t c = 0; c < members.size(); ++c)
      for (std::size_t x = 0; x < roots.size(); ++x)
        for (const auto& [target, coeff] : image[x][members[c]])
          row_index.emplace(std::make_pair(x, target), row_index.size());

    Matrix mat(row_index.size(), members.size());
    for (std::size_t c = 0; c < members.size(); ++c)
      for (std::size_t x = 0; x < roots.size(); ++x)
        for (const auto& [target, coeff] : image[x][members[c]])
          mat.at(row_index.at(std::make_pair(x, target)), c) += coeff;

    for (const std::vector<GaussianRational>& kernel : mat.nullspace()) {
      SpinorForm vec(l);
      for (std::size_t c = 0; c < members.size(); ++c) {
        if (kernel[c].is_zero()) continue;
        vec.add_term(basis[members[c]].first,
                     SpinorPoly::monomial(l, basis[members[c]].second, kernel[c]));
      }
      found.push_back(HighestWeightVector{degree, sign, weight, std::move(vec)});
    }
  }
  return found;
}

std::vector<HighestWeightVector> full_census(const WContext& ctx, int max_degree) {
  std::vector<HighestWeightVector> out;
  for (int degree = 0; degree <= 2 * ctx.l(); ++degree) {
    for (int sign : {+1, -1}) {
      for (HighestWeightVector& v : highest_weight_census(ctx, degree, sign, max_degree))
        out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace howe
