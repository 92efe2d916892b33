#pragma once

#include <cstdint>
#include <string_view>

#include "howe/spinor_form.hpp"

namespace howe {

/**
 * SplitMix64, the fixed pseudo-random generator behind every probe.  The
 * algorithm is pinned here (not delegated to std:: distributions) so that
 * identical seeds give identical probes on every platform, which is what
 * makes reports byte-reproducible.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /** Uniform-enough value in [0, n); n == 0 is invalid. */
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /** Integer in [lo, hi], inclusive. */
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/** Deterministic per-check stream: seed xor FNV-1a of the check name. */
std::uint64_t derive_seed(std::uint64_t seed, std::string_view check_name);

/**
 * Seeded probe factory for W.  Coefficients are drawn from the integer box
 * [-3, 3] on both the real and imaginary parts, monomials have total
 * degree <= max_degree, and form masks are unrestricted unless a fixed
 * degree is requested.
 */
class ProbeGenerator {
 public:
  ProbeGenerator(int l, int max_degree, std::uint64_t seed)
      : l_(l), max_degree_(max_degree), rng_(seed) {}

  GaussianRational coefficient();
  std::uint64_t monomial();

  /** Mixed-degree probe with the given number of terms (zeros dropped). */
  SpinorForm form(int terms);

  /** Probe concentrated in one form degree. */
  SpinorForm form_of_degree(int degree, int terms);

  /** Probe in one form degree with fixed spinor parity (+1 even, -1 odd). */
  SpinorForm form_of_degree_parity(int degree, int parity_sign, int terms);

 private:
  int l_;
  int max_degree_;
  SplitMix64 rng_;
};

}  // namespace howe
