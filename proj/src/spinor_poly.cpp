#include "howe/spinor_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace howe {

namespace mono {

std::uint64_t with(std::uint64_t code, int k, int delta) {
  int shift = 8 * (kMaxVars - k);
  int value = static_cast<int>((code >> shift) & 0xffu) + delta;
  if (value < 0 || value > 255) throw std::out_of_range("mono: exponent out of range");
  return (code & ~(std::uint64_t(0xff) << shift)) | (std::uint64_t(value) << shift);
}

int total_degree(std::uint64_t code) {
  int total = 0;
  while (code != 0) {
    total += static_cast<int>(code & 0xffu);
    code >>= 8;
  }
  return total;
}

std::uint64_t pack(const std::vector<int>& exps) {
  if (exps.size() > kMaxVars) throw std::out_of_range("mono: too many variables");
  std::uint64_t code = 0;
  for (std::size_t k = 0; k < exps.size(); ++k) code = with(code, static_cast<int>(k) + 1, exps[k]);
  return code;
}

std::string str(std::uint64_t code, int vars) {
  std::string out;
  for (int k = 1; k <= vars; ++k) {
    if (k > 1) out += ' ';
    out += 'z';
    out += std::to_string(k);
    out += '^';
    out += std::to_string(get(code, k));
  }
  return out;
}

namespace {

void enumerate_rec(int vars, int k, int remaining, std::uint64_t code,
                   std::vector<std::uint64_t>& out) {
  if (k > vars) {
    out.push_back(code);
    return;
  }
  for (int a = 0; a <= remaining; ++a)
    enumerate_rec(vars, k + 1, remaining - a, with(code, k, a), out);
}

}  // namespace

std::vector<std::uint64_t> enumerate(int vars, int max_degree) {
  std::vector<std::uint64_t> out;
  enumerate_rec(vars, 1, max_degree, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mono

SpinorPoly SpinorPoly::one(int vars) {
  SpinorPoly p(vars);
  p.terms_[0] = GaussianRational(1);
  return p;
}

SpinorPoly SpinorPoly::monomial(int vars, std::uint64_t code, GaussianRational coeff) {
  SpinorPoly p(vars);
  if (!coeff.is_zero()) p.terms_[code] = std::move(coeff);
  return p;
}

SpinorPoly SpinorPoly::variable(int vars, int k) {
  if (k < 1 || k > vars) throw std::out_of_range("SpinorPoly: variable index");
  return monomial(vars, mono::with(0, k, 1), GaussianRational(1));
}

void SpinorPoly::add_term(std::uint64_t code, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(code, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpinorPoly& SpinorPoly::operator+=(const SpinorPoly& o) {
  for (const auto& [code, c] : o.terms_) add_term(code, c);
  return *this;
}

SpinorPoly& SpinorPoly::operator-=(const SpinorPoly& o) {
  for (const auto& [code, c] : o.terms_) add_term(code, -c);
  return *this;
}

SpinorPoly SpinorPoly::scaled(const GaussianRational& c) const {
  SpinorPoly out(vars_);
  if (c.is_zero()) return out;
  for (const auto& [code, v] : terms_) out.terms_[code] = v * c;
  return out;
}

SpinorPoly SpinorPoly::derivative(int k) const {
  SpinorPoly out(vars_);
  for (const auto& [code, c] : terms_) {
    int a = mono::get(code, k);
    if (a == 0) continue;
    out.add_term(mono::with(code, k, -1), c * GaussianRational(a));
  }
  return out;
}

SpinorPoly SpinorPoly::multiplied_by_z(int k) const {
  SpinorPoly out(vars_);
  for (const auto& [code, c] : terms_) out.terms_[mono::with(code, k, +1)] = c;
  return out;
}

int SpinorPoly::degree() const {
  int deg = -1;
  for (const auto& [code, c] : terms_) deg = std::max(deg, mono::total_degree(code));
  return deg;
}

SpinorPoly SpinorPoly::parity_component(int parity) const {
  SpinorPoly out(vars_);
  for (const auto& [code, c] : terms_)
    if (mono::total_degree(code) % 2 == parity) out.terms_[code] = c;
  return out;
}

std::string SpinorPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [code, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += '(';
    out += c.str();
    out += ") * ";
    out += mono::str(code, vars_);
  }
  return out;
}

SpinorPoly clifford(int l, int k, const SpinorPoly& s) {
  if (k < 1 || k > 2 * l) throw std::out_of_range("clifford: basis index");
  if (k <= l) return s.derivative(k);
  return s.multiplied_by_z(k - l).scaled(GaussianRational::i());
}

SpinorPoly clifford_vector(int l, const std::vector<GaussianRational>& v, const SpinorPoly& s) {
  if (static_cast<int>(v.size()) != 2 * l)
    throw std::invalid_argument("clifford_vector: coefficient count");
  SpinorPoly out(s.vars());
  for (int k = 1; k <= 2 * l; ++k) {
    if (v[k - 1].is_zero()) continue;
    out += clifford(l, k, s).scaled(v[k - 1]);
  }
  return out;
}

SpinorPoly parity_project(int sign, const SpinorPoly& s) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("parity_project: sign must be +1/-1");
  return s.parity_component(sign == 1 ? 0 : 1);
}

}  // namespace howe
