#include "howe/probe.hpp"

#include <vector>

#include "howe/exterior.hpp"

namespace howe {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view check_name) {
  // FNV-1a over the check name, folded into the user seed.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : check_name) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 0x100000001b3ull;
  }
  return seed ^ h;
}

GaussianRational ProbeGenerator::coefficient() {
  long long re = rng_.range(-3, 3);
  long long im = rng_.range(-3, 3);
  return GaussianRational(Rational(re), Rational(im));
}

std::uint64_t ProbeGenerator::monomial() {
  // Spread a total degree budget over the l variables, left to right.
  int budget = static_cast<int>(rng_.range(0, max_degree_));
  std::uint64_t m = 0;
  for (int k = 1; k <= l_ && budget > 0; ++k) {
    int e = static_cast<int>(rng_.range(0, budget));
    m = mono::with(m, k, e);
    budget -= e;
  }
  return m;
}

SpinorForm ProbeGenerator::form(int terms) {
  SpinorForm w(l_);
  const std::uint32_t mask_limit = 1u << (2 * l_);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t mask = static_cast<std::uint32_t>(rng_.below(mask_limit));
    SpinorPoly p = SpinorPoly::monomial(l_, monomial(), coefficient());
    w.add_term(mask, p);
  }
  return w;
}

SpinorForm ProbeGenerator::form_of_degree(int degree, int terms) {
  std::vector<std::uint32_t> masks = wedge_word::enumerate_degree(2 * l_, degree);
  SpinorForm w(l_);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t mask = masks[rng_.below(masks.size())];
    SpinorPoly p = SpinorPoly::monomial(l_, monomial(), coefficient());
    w.add_term(mask, p);
  }
  return w;
}

SpinorForm ProbeGenerator::form_of_degree_parity(int degree, int parity_sign, int terms) {
  SpinorForm w = form_of_degree(degree, terms);
  return p_pm(parity_sign, w);
}

}  // namespace howe
