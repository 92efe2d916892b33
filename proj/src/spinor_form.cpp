#include "howe/spinor_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace howe {

SpinorForm SpinorForm::vacuum(int l) { return term(l, 0, SpinorPoly::one(l)); }

SpinorForm SpinorForm::term(int l, std::uint32_t mask, SpinorPoly s) {
  SpinorForm w(l);
  w.add_term(mask, s);
  return w;
}

void SpinorForm::add_term(std::uint32_t mask, const SpinorPoly& s) {
  if (s.is_zero()) return;
  if (mask >= (std::uint32_t(1) << (2 * l_))) throw std::out_of_range("SpinorForm: index beyond 2l");
  auto [it, inserted] = terms_.try_emplace(mask, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpinorForm& SpinorForm::operator+=(const SpinorForm& o) {
  for (const auto& [mask, s] : o.terms_) add_term(mask, s);
  return *this;
}

SpinorForm& SpinorForm::operator-=(const SpinorForm& o) {
  for (const auto& [mask, s] : o.terms_) add_term(mask, s.scaled(GaussianRational(-1)));
  return *this;
}

SpinorForm SpinorForm::scaled(const GaussianRational& c) const {
  SpinorForm out(l_);
  if (c.is_zero()) return out;
  for (const auto& [mask, s] : terms_) out.terms_[mask] = s.scaled(c);
  return out;
}

SpinorForm SpinorForm::degree_component(int r) const {
  SpinorForm out(l_);
  for (const auto& [mask, s] : terms_)
    if (wedge_word::degree(mask) == r) out.terms_[mask] = s;
  return out;
}

int SpinorForm::max_form_degree() const {
  int deg = -1;
  for (const auto& [mask, s] : terms_) deg = std::max(deg, wedge_word::degree(mask));
  return deg;
}

std::string SpinorForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mask, s] : terms_) {
    if (!out.empty()) out += "  +  ";
    out += wedge_word::str(mask);
    out += " (x) [";
    out += s.str();
    out += ']';
  }
  return out;
}

SpinorForm rho(const WContext& ctx, const SpElement& x, const SpinorForm& w) {
  const int l = ctx.l();
  Matrix m = sp_matrix(ctx.space, x);
  SpinorForm out(l);
  for (const auto& [mask, s] : w.terms()) {
    // Form factor: coadjoint action, slot by slot.
    ExteriorForm alpha = ExteriorForm::basis(2 * l, mask);
    ExteriorForm moved = coadjoint_action(ctx.space, x, alpha);
    for (const auto& [mask2, c] : moved.terms()) out.add_term(mask2, s.scaled(c));
    // Spinor factor: oscillator action.
    out.add_term(mask, oscillatory_action(ctx.space, x, s));
  }
  return out;
}

SpinorForm f_plus(const WContext& ctx, const SpinorForm& w) {
  const int l = ctx.l();
  GaussianRational half_i(Rational(0), Rational::of(1, 2));
  if (ctx.corrupt == Corruption::f_plus_sign) half_i = -half_i;
  SpinorForm out(l);
  for (const auto& [mask, s] : w.terms()) {
    for (int k = 1; k <= 2 * l; ++k) {
      int sign = wedge_word::insert_sign(mask, k);
      if (sign == 0) continue;
      SpinorPoly moved = clifford(l, k, s).scaled(sign > 0 ? half_i : -half_i);
      out.add_term(mask | (std::uint32_t(1) << (k - 1)), moved);
    }
  }
  return out;
}

SpinorForm f_minus(const WContext& ctx, const SpinorForm& w) {
  const int l = ctx.l();
  GaussianRational prefactor(Rational::of(1, 2));
  if (ctx.corrupt == Corruption::f_minus_half) prefactor = GaussianRational(1);
  SpinorForm out(l);
  for (const auto& [mask, s] : w.terms()) {
    for (int j = 1; j <= 2 * l; ++j) {
      int sign = wedge_word::remove_sign(mask, j);
      if (sign == 0) continue;
      std::uint32_t rest = mask & ~(std::uint32_t(1) << (j - 1));
      for (int k = 1; k <= 2 * l; ++k) {
        const Rational& o = ctx.space.omega_inverse(j, k);
        if (o.is_zero()) continue;
        GaussianRational c = prefactor * GaussianRational(o);
        if (sign < 0) c = -c;
        out.add_term(rest, clifford(l, k, s).scaled(c));
      }
    }
  }
  return out;
}

SpinorForm h_op(const WContext& ctx, const SpinorForm& w) {
  SpinorForm acc = f_plus(ctx, f_minus(ctx, w)) + f_minus(ctx, f_plus(ctx, w));
  int scale = ctx.corrupt == Corruption::h_scale ? 4 : 2;
  return acc.scaled(GaussianRational(scale));
}

SpinorForm e_pm(const WContext& ctx, int sign, const SpinorForm& w) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("e_pm: sign must be +1/-1");
  SpinorForm sq = sign == 1 ? f_plus(ctx, f_plus(ctx, w)) : f_minus(ctx, f_minus(ctx, w));
  return sq.scaled(GaussianRational(4 * sign));
}

SpinorForm p_pm(int sign, const SpinorForm& w) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("p_pm: sign must be +1/-1");
  SpinorForm out(w.l());
  for (const auto& [mask, s] : w.terms()) out.add_term(mask, parity_project(sign, s));
  return out;
}

WOperator make_f_plus(const WContext& ctx) {
  return {"F+", +1, 1, [&ctx](const SpinorForm& w) { return f_plus(ctx, w); }};
}

WOperator make_f_minus(const WContext& ctx) {
  return {"F-", -1, 1, [&ctx](const SpinorForm& w) { return f_minus(ctx, w); }};
}

WOperator make_h(const WContext& ctx) {
  return {"H", 0, 0, [&ctx](const SpinorForm& w) { return h_op(ctx, w); }};
}

WOperator make_e_plus(const WContext& ctx) {
  return {"E+", +2, 0, [&ctx](const SpinorForm& w) { return e_pm(ctx, +1, w); }};
}

WOperator make_e_minus(const WContext& ctx) {
  return {"E-", -2, 0, [&ctx](const SpinorForm& w) { return e_pm(ctx, -1, w); }};
}

WOperator make_p_plus() {
  return {"p+", 0, 0, [](const SpinorForm& w) { return p_pm(+1, w); }};
}

WOperator make_p_minus() {
  return {"p-", 0, 0, [](const SpinorForm& w) { return p_pm(-1, w); }};
}

WOperator compose(const WOperator& a, const WOperator& b) {
  return {a.name + "*" + b.name, a.degree_shift + b.degree_shift, (a.parity + b.parity) % 2,
          [a, b](const SpinorForm& w) { return a.fn(b.fn(w)); }};
}

}  // namespace howe
