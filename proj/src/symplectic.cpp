#include "howe/symplectic.hpp"

#include <stdexcept>

namespace howe {

namespace {

// Oscillator action of the basis element e_a.e_b with unit normalization,
// i.e. (e_a. e_b. + e_b. e_a.) s.
SpinorPoly anticommutator_action(int l, int a, int b, const SpinorPoly& s) {
  return clifford(l, a, clifford(l, b, s)) + clifford(l, b, clifford(l, a, s));
}

// Solves for the scalar c0 making c0*(a.b. + b.a.) satisfy the bracket
// condition [L(X), v.] = (Xv). against every basis X = e_a.e_b, basis
// vector v and monomial of degree <= 2.  The system is heavily
// overdetermined; any inconsistency is a programming error.
GaussianRational calibrate_oscillator_scalar(const SymplecticSpace& sp) {
  const int l = sp.l();
  GaussianRational c0;
  bool have_c0 = false;
  std::vector<std::uint64_t> codes = mono::enumerate(l, 2);
  for (int a = 1; a <= 2 * l; ++a) {
    for (int b = a; b <= 2 * l; ++b) {
      SpElement x = SpElement::sym(l, a, b);
      Matrix m = sp_matrix(sp, x);
      for (int v = 1; v <= 2 * l; ++v) {
        std::vector<GaussianRational> xv(2 * l);
        for (int u = 1; u <= 2 * l; ++u) xv[u - 1] = m.at(u - 1, v - 1);
        for (std::uint64_t code : codes) {
          SpinorPoly s = SpinorPoly::monomial(l, code, GaussianRational(1));
          SpinorPoly u = anticommutator_action(l, a, b, clifford(l, v, s)) -
                         clifford(l, v, anticommutator_action(l, a, b, s));
          SpinorPoly w = clifford_vector(l, xv, s);
          if (u.is_zero()) {
            if (!w.is_zero())
              throw std::logic_error("oscillator calibration: inconsistent bracket system");
            continue;
          }
          GaussianRational candidate =
              w.is_zero() ? GaussianRational(0)
                          : w.terms().begin()->second * u.terms().begin()->second.inv();
          if (!have_c0) {
            c0 = candidate;
            have_c0 = true;
          }
          if (u.scaled(c0) != w)
            throw std::logic_error("oscillator calibration: scalar is not consistent");
        }
      }
    }
  }
  if (!have_c0 || c0.is_zero())
    throw std::logic_error("oscillator calibration: bracket system is degenerate");
  return c0;
}

}  // namespace

SymplecticSpace::SymplecticSpace(int l) : l_(l) {
  if (l < 1 || l > mono::kMaxVars) throw std::out_of_range("SymplecticSpace: l out of range");
  const int n = 2 * l;
  Matrix form(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) form.at(i - 1, j - 1) = GaussianRational(omega(i, j));
  auto inv = form.inverse();
  if (!inv) throw std::logic_error("SymplecticSpace: omega is singular");
  omega_inv_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GaussianRational& v = inv->at(i, j);
      if (!v.im.is_zero()) throw std::logic_error("SymplecticSpace: complex omega inverse");
      omega_inv_[static_cast<std::size_t>(i) * n + j] = v.re;
    }
  osc_scalar_ = calibrate_oscillator_scalar(*this);
}

int SymplecticSpace::omega(int i, int j) const {
  if (i < 1 || i > 2 * l_ || j < 1 || j > 2 * l_)
    throw std::out_of_range("SymplecticSpace: omega index");
  if (i <= l_ && j == i + l_) return 1;
  if (i > l_ && j == i - l_) return -1;
  return 0;
}

const Rational& SymplecticSpace::omega_inverse(int i, int j) const {
  if (i < 1 || i > 2 * l_ || j < 1 || j > 2 * l_)
    throw std::out_of_range("SymplecticSpace: omega_inverse index");
  return omega_inv_[static_cast<std::size_t>(i - 1) * 2 * l_ + (j - 1)];
}

SpElement SpElement::sym(int l, int a, int b) {
  SpElement x(l);
  x.add(a, b, GaussianRational(1));
  return x;
}

SpElement SpElement::cartan(int l, int k) {
  if (k < 1 || k > l) throw std::out_of_range("SpElement: cartan index");
  SpElement x(l);
  x.add(k, k + l, GaussianRational(-1));
  return x;
}

void SpElement::add(int a, int b, const GaussianRational& c) {
  if (a < 1 || b < 1 || a > 2 * l_ || b > 2 * l_) throw std::out_of_range("SpElement: basis index");
  if (a > b) std::swap(a, b);
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto [it, inserted] = coeff_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeff_.erase(it);
  }
}

SpElement& SpElement::operator+=(const SpElement& o) {
  for (const auto& [key, c] : o.coeff_) add(key.first, key.second, c);
  return *this;
}

SpElement SpElement::scaled(const GaussianRational& c) const {
  SpElement out(l_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : coeff_) out.coeff_[key] = v * c;
  return out;
}

std::string SpElement::str() const {
  if (coeff_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : coeff_) {
    if (!out.empty()) out += " + ";
    out += '(';
    out += c.str();
    out += ") * e";
    out += std::to_string(key.first);
    out += "*e";
    out += std::to_string(key.second);
  }
  return out;
}

Matrix sp_matrix(const SymplecticSpace& sp, const SpElement& x) {
  const int n = sp.dim();
  Matrix m(n, n);
  for (const auto& [key, c] : x.coeff()) {
    auto [a, b] = key;
    // (a.b)(e_v) = omega(a, e_v) b + omega(b, e_v) a.
    for (int v = 1; v <= n; ++v) {
      int wa = sp.omega(a, v);
      if (wa != 0) m.at(b - 1, v - 1) += c * GaussianRational(wa);
      int wb = sp.omega(b, v);
      if (wb != 0) m.at(a - 1, v - 1) += c * GaussianRational(wb);
    }
  }
  return m;
}

SpElement sp_from_matrix(const SymplecticSpace& sp, const Matrix& m) {
  const int n = sp.dim();
  const int l = sp.l();
  if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("sp_from_matrix: shape mismatch");
  // The symmetric pairing B(u, v) = omega(M u, v) determines the
  // coefficients: B(e_a.e_b) concentrates on the omega-dual index pair.
  auto dual = [l](int p) { return p <= l ? p + l : p - l; };
  auto sign = [l](int p) { return p <= l ? 1 : -1; };
  Matrix b(n, n);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      GaussianRational acc;
      for (int k = 1; k <= n; ++k) {
        int w = sp.omega(k, v);
        if (w != 0) acc += m.at(k - 1, u - 1) * GaussianRational(w);
      }
      b.at(u - 1, v - 1) = acc;
    }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (b.at(u, v) != b.at(v, u)) throw std::invalid_argument("sp_from_matrix: not in sp");
  SpElement x(l);
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q) {
      GaussianRational c = b.at(dual(p) - 1, dual(q) - 1) * GaussianRational(sign(p) * sign(q));
      if (p == q) c = c * GaussianRational(Rational::of(1, 2));
      x.add(p, q, c);
    }
  if (!(sp_matrix(sp, x) == m)) throw std::invalid_argument("sp_from_matrix: not in sp");
  return x;
}

SpElement sp_bracket(const SymplecticSpace& sp, const SpElement& x, const SpElement& y) {
  Matrix mx = sp_matrix(sp, x);
  Matrix my = sp_matrix(sp, y);
  return sp_from_matrix(sp, mx * my - my * mx);
}

std::vector<SpElement> sp_basis(int l) {
  std::vector<SpElement> basis;
  for (int a = 1; a <= 2 * l; ++a)
    for (int b = a; b <= 2 * l; ++b) basis.push_back(SpElement::sym(l, a, b));
  return basis;
}

std::vector<RootVector> positive_root_vectors(int l) {
  std::vector<RootVector> out;
  auto root = [l](int a, int sa, int b, int sb) {
    std::vector<int> r(l, 0);
    r[a - 1] += sa;
    r[b - 1] += sb;
    return r;
  };
  // eps_a + eps_b (a <= b): e_a.e_b with both indices in the first block.
  for (int a = 1; a <= l; ++a)
    for (int b = a; b <= l; ++b) out.push_back({root(a, +1, b, +1), SpElement::sym(l, a, b)});
  // eps_a - eps_b (a < b): e_a.e_{b+l}.
  for (int a = 1; a <= l; ++a)
    for (int b = a + 1; b <= l; ++b) out.push_back({root(a, +1, b, -1), SpElement::sym(l, a, b + l)});
  return out;
}

std::vector<RootVector> negative_root_vectors(int l) {
  std::vector<RootVector> out;
  auto root = [l](int a, int sa, int b, int sb) {
    std::vector<int> r(l, 0);
    r[a - 1] += sa;
    r[b - 1] += sb;
    return r;
  };
  for (int a = 1; a <= l; ++a)
    for (int b = a; b <= l; ++b)
      out.push_back({root(a, -1, b, -1), SpElement::sym(l, a + l, b + l)});
  for (int a = 1; a <= l; ++a)
    for (int b = a + 1; b <= l; ++b)
      out.push_back({root(a, -1, b, +1), SpElement::sym(l, b, a + l)});
  return out;
}

SpinorPoly oscillatory_action(const SymplecticSpace& sp, const SpElement& x, const SpinorPoly& s) {
  const int l = sp.l();
  SpinorPoly out(s.vars());
  const GaussianRational& c0 = sp.oscillatory_scalar();
  for (const auto& [key, c] : x.coeff()) {
    auto [a, b] = key;
    out += anticommutator_action(l, a, b, s).scaled(c0 * c);
  }
  return out;
}

GaussianRational clifford_commutator_scalar(const SymplecticSpace& sp,
                                            const std::vector<GaussianRational>& v,
                                            const std::vector<GaussianRational>& w) {
  const int l = sp.l();
  GaussianRational expected;
  for (int i = 1; i <= 2 * l; ++i)
    for (int j = 1; j <= 2 * l; ++j) {
      int o = sp.omega(i, j);
      if (o != 0) expected += v[i - 1] * w[j - 1] * GaussianRational(o);
    }
  expected *= GaussianRational::i();
  for (std::uint64_t code : mono::enumerate(l, 3)) {
    SpinorPoly s = SpinorPoly::monomial(l, code, GaussianRational(1));
    SpinorPoly lhs = clifford_vector(l, v, clifford_vector(l, w, s)) -
                     clifford_vector(l, w, clifford_vector(l, v, s));
    if (lhs != s.scaled(expected))
      throw std::logic_error("clifford_commutator_scalar: commutator is not the expected scalar");
  }
  return expected;
}

}  // namespace howe
