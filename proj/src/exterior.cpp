#include "howe/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace howe {

namespace wedge_word {

int degree(std::uint32_t mask) { return std::popcount(mask); }

std::vector<int> indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int k = 1; mask != 0; ++k, mask >>= 1)
    if (mask & 1u) out.push_back(k);
  return out;
}

int insert_sign(std::uint32_t mask, int k) {
  std::uint32_t bit = std::uint32_t(1) << (k - 1);
  if (mask & bit) return 0;
  int below = std::popcount(mask & (bit - 1));
  return below % 2 == 0 ? 1 : -1;
}

int remove_sign(std::uint32_t mask, int k) {
  std::uint32_t bit = std::uint32_t(1) << (k - 1);
  if (!(mask & bit)) return 0;
  int below = std::popcount(mask & (bit - 1));
  return below % 2 == 0 ? 1 : -1;
}

std::string str(std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string out = "e";
  for (int k : indices(mask)) {
    out += "^{";
    out += std::to_string(k);
    out += '}';
  }
  return out;
}

std::vector<std::uint32_t> enumerate(int n) {
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t(1) << n);
  for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m) out.push_back(m);
  return out;
}

std::vector<std::uint32_t> enumerate_degree(int n, int r) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m)
    if (std::popcount(m) == r) out.push_back(m);
  return out;
}

}  // namespace wedge_word

ExteriorForm ExteriorForm::unit(int n) { return basis(n, 0); }

ExteriorForm ExteriorForm::basis(int n, std::uint32_t mask) {
  ExteriorForm f(n);
  f.terms_[mask] = GaussianRational(1);
  return f;
}

void ExteriorForm::add_term(std::uint32_t mask, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (mask >= (std::uint32_t(1) << n_)) throw std::out_of_range("ExteriorForm: index beyond 2l");
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) {
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

ExteriorForm ExteriorForm::scaled(const GaussianRational& c) const {
  ExteriorForm out(n_);
  if (c.is_zero()) return out;
  for (const auto& [mask, v] : terms_) out.terms_[mask] = v * c;
  return out;
}

ExteriorForm ExteriorForm::degree_component(int r) const {
  ExteriorForm out(n_);
  for (const auto& [mask, c] : terms_)
    if (wedge_word::degree(mask) == r) out.terms_[mask] = c;
  return out;
}

std::string ExteriorForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mask, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += '(';
    out += c.str();
    out += ") * ";
    out += wedge_word::str(mask);
  }
  return out;
}

ExteriorForm wedge(int k, const ExteriorForm& alpha) {
  ExteriorForm out(alpha.n());
  for (const auto& [mask, c] : alpha.terms()) {
    int s = wedge_word::insert_sign(mask, k);
    if (s == 0) continue;
    out.add_term(mask | (std::uint32_t(1) << (k - 1)), s > 0 ? c : -c);
  }
  return out;
}

ExteriorForm interior(int k, const ExteriorForm& alpha) {
  ExteriorForm out(alpha.n());
  for (const auto& [mask, c] : alpha.terms()) {
    int s = wedge_word::remove_sign(mask, k);
    if (s == 0) continue;
    out.add_term(mask & ~(std::uint32_t(1) << (k - 1)), s > 0 ? c : -c);
  }
  return out;
}

ExteriorForm coadjoint_action(const SymplecticSpace& sp, const SpElement& x,
                              const ExteriorForm& alpha) {
  const int n = sp.dim();
  if (alpha.n() != n) throw std::invalid_argument("coadjoint_action: dimension mismatch");
  Matrix m = sp_matrix(sp, x);
  ExteriorForm out(n);
  for (const auto& [mask, c] : alpha.terms()) {
    std::vector<int> idx = wedge_word::indices(mask);
    for (std::size_t slot = 0; slot < idx.size(); ++slot) {
      int k = idx[slot];
      std::uint32_t rest = mask & ~(std::uint32_t(1) << (k - 1));
      // Slot replacement eps^k -> X.eps^k = -sum_u M[k][u] eps^u; the sign
      // (-1)^{slot + below(u)} re-sorts the replaced word.
      for (int u = 1; u <= n; ++u) {
        const GaussianRational& entry = m.at(k - 1, u - 1);
        if (entry.is_zero()) continue;
        int s = wedge_word::insert_sign(rest, u);
        if (s == 0) continue;
        int parity = (static_cast<int>(slot) + (s > 0 ? 0 : 1)) % 2;
        GaussianRational contribution = c * entry;
        if (parity == 0) contribution = -contribution;
        out.add_term(rest | (std::uint32_t(1) << (u - 1)), contribution);
      }
    }
  }
  return out;
}

}  // namespace howe
