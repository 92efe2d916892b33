#include "howe/osp.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace howe {

namespace {

OspElement zero_elem() { return OspElement{}; }

OspElement single(int gen, Rational c) {
  OspElement e{};
  e[gen] = std::move(c);
  return e;
}

OspElement add(OspElement a, const OspElement& b) {
  for (int g = 0; g < kOspDim; ++g) a[g] += b[g];
  return a;
}

OspElement scale(OspElement a, const Rational& c) {
  for (int g = 0; g < kOspDim; ++g) a[g] *= c;
  return a;
}

bool elem_zero(const OspElement& a) {
  for (int g = 0; g < kOspDim; ++g)
    if (!a[g].is_zero()) return false;
  return true;
}

/** One defining relation [x,y] (or {x,y}) = coeff * rhs. */
struct RelationSpec {
  bool anti;
  int x, y;
  int rhs;
  Rational coeff;
  const char* text;
};

const std::vector<RelationSpec>& relation_specs() {
  static const std::vector<RelationSpec> specs = {
      {false, osp_h, osp_e_plus, osp_e_plus, Rational(1), "[h,e+] = e+"},
      {false, osp_h, osp_e_minus, osp_e_minus, Rational(-1), "[h,e-] = -e-"},
      {false, osp_e_plus, osp_e_minus, osp_h, Rational(2), "[e+,e-] = 2h"},
      {false, osp_h, osp_f_plus, osp_f_plus, Rational::of(1, 2), "[h,f+] = f+/2"},
      {false, osp_h, osp_f_minus, osp_f_minus, Rational::of(-1, 2), "[h,f-] = -f-/2"},
      {true, osp_f_plus, osp_f_minus, osp_h, Rational::of(1, 2), "{f+,f-} = h/2"},
      {false, osp_e_plus, osp_f_minus, osp_f_plus, Rational(-1), "[e+,f-] = -f+"},
      {false, osp_e_minus, osp_f_plus, osp_f_minus, Rational(-1), "[e-,f+] = -f-"},
      {true, osp_f_plus, osp_f_plus, osp_e_plus, Rational::of(1, 2), "{f+,f+} = e+/2"},
      {true, osp_f_minus, osp_f_minus, osp_e_minus, Rational::of(-1, 2), "{f-,f-} = -e-/2"},
  };
  return specs;
}

}  // namespace

int osp_parity(int gen) { return gen >= osp_f_plus ? 1 : 0; }

const char* osp_gen_name(int gen) {
  switch (gen) {
    case osp_h: return "h";
    case osp_e_plus: return "e+";
    case osp_e_minus: return "e-";
    case osp_f_plus: return "f+";
    case osp_f_minus: return "f-";
  }
  return "?";
}

OspElement super_bracket(int x, int y) {
  // The ten defining relations plus graded (anti)symmetry determine every
  // pair; everything not reachable that way is zero.
  for (const RelationSpec& r : relation_specs()) {
    if (r.x == x && r.y == y) return single(r.rhs, r.coeff);
    if (r.x == y && r.y == x) {
      // [y,x] = -(-1)^{|x||y|} [x,y]; for {f,f} the swap is the identity.
      int sgn = (osp_parity(x) * osp_parity(y)) % 2 == 1 ? 1 : -1;
      return single(r.rhs, r.coeff * Rational(sgn));
    }
  }
  return zero_elem();
}

namespace {

OspElement bracket_with_elem(int x, const OspElement& a) {
  OspElement out = zero_elem();
  for (int g = 0; g < kOspDim; ++g) {
    if (a[g].is_zero()) continue;
    out = add(std::move(out), scale(super_bracket(x, g), a[g]));
  }
  return out;
}

}  // namespace

std::optional<std::string> super_jacobi_witness() {
  for (int x = 0; x < kOspDim; ++x) {
    for (int y = 0; y < kOspDim; ++y) {
      for (int z = 0; z < kOspDim; ++z) {
        int px = osp_parity(x), py = osp_parity(y), pz = osp_parity(z);
        auto sgn = [](int p) { return p % 2 == 1 ? Rational(-1) : Rational(1); };
        OspElement t1 = scale(bracket_with_elem(x, super_bracket(y, z)), sgn(px * pz));
        OspElement t2 = scale(bracket_with_elem(y, super_bracket(z, x)), sgn(py * px));
        OspElement t3 = scale(bracket_with_elem(z, super_bracket(x, y)), sgn(pz * py));
        OspElement total = add(add(std::move(t1), t2), t3);
        if (!elem_zero(total)) {
          std::ostringstream os;
          os << "graded Jacobi fails on (" << osp_gen_name(x) << ", " << osp_gen_name(y)
             << ", " << osp_gen_name(z) << ")";
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

Rational ladder_coefficient(int l, int i, int j) {
  if ((i - j) % 2 == 0) return Rational(BigInt(i - j), BigInt(8));
  return Rational(BigInt(i + j - 2 * l - 1), BigInt(8));
}

const Matrix& SigmaRep::gen(int g) const {
  switch (g) {
    case osp_h: return h;
    case osp_e_plus: return e_plus;
    case osp_e_minus: return e_minus;
    case osp_f_plus: return f_plus;
    case osp_f_minus: return f_minus;
  }
  throw std::invalid_argument("SigmaRep::gen: bad generator index");
}

SigmaRep build_sigma(int l, int j, Corruption corrupt) {
  if (l < 1 || j < 0 || j > l) throw std::invalid_argument("build_sigma: need 0 <= j <= l");
  SigmaRep rep;
  rep.l = l;
  rep.j = j;
  rep.dim = 2 * l - 2 * j + 1;
  const std::size_t n = static_cast<std::size_t>(rep.dim);

  // The chain must close of its own accord at the top.
  assert(ladder_coefficient(l, 2 * l - j + 1, j).is_zero());

  rep.f_minus = Matrix(n, n);
  for (int i = j + 1; i <= 2 * l - j; ++i)
    rep.f_minus.at(static_cast<std::size_t>(i - 1 - j), static_cast<std::size_t>(i - j)) =
        GaussianRational(1);

  rep.f_plus = Matrix(n, n);
  for (int i = j; i < 2 * l - j; ++i) {
    Rational a = corrupt == Corruption::a_zero ? Rational(0) : ladder_coefficient(l, i + 1, j);
    rep.f_plus.at(static_cast<std::size_t>(i + 1 - j), static_cast<std::size_t>(i - j)) =
        GaussianRational(a);
  }

  rep.h = (rep.f_plus * rep.f_minus + rep.f_minus * rep.f_plus).scaled(GaussianRational(2));
  if (corrupt == Corruption::h_scale) rep.h = rep.h.scaled(GaussianRational(2));
  rep.e_plus = (rep.f_plus * rep.f_plus).scaled(GaussianRational(4));
  rep.e_minus = (rep.f_minus * rep.f_minus).scaled(GaussianRational(-4));
  return rep;
}

std::optional<std::string> osp_relations_witness(const SigmaRep& rep) {
  for (const RelationSpec& r : relation_specs()) {
    const Matrix& x = rep.gen(r.x);
    const Matrix& y = rep.gen(r.y);
    Matrix lhs = r.anti ? x * y + y * x : x * y - y * x;
    Matrix residual = lhs - rep.gen(r.rhs).scaled(GaussianRational(r.coeff));
    if (!residual.is_zero()) {
      std::ostringstream os;
      os << "relation " << r.text << " fails on G^" << rep.j << " at l=" << rep.l;
      return os.str();
    }
  }
  return std::nullopt;
}

const WOperator& OspOperators::gen(int g) const {
  switch (g) {
    case osp_h: return h;
    case osp_e_plus: return e_plus;
    case osp_e_minus: return e_minus;
    case osp_f_plus: return f_plus;
    case osp_f_minus: return f_minus;
  }
  throw std::invalid_argument("OspOperators::gen: bad generator index");
}

OspOperators make_osp_operators(const WContext& ctx) {
  return OspOperators{make_h(ctx), make_e_plus(ctx), make_e_minus(ctx), make_f_plus(ctx),
                      make_f_minus(ctx)};
}

std::optional<std::string> osp_relations_witness(const OspOperators& ops,
                                                 const std::vector<SpinorForm>& probes) {
  for (std::size_t p = 0; p < probes.size(); ++p) {
    const SpinorForm& w = probes[p];
    for (const RelationSpec& r : relation_specs()) {
      const WOperator& x = ops.gen(r.x);
      const WOperator& y = ops.gen(r.y);
      SpinorForm xy = x(y(w));
      SpinorForm yx = y(x(w));
      SpinorForm lhs = r.anti ? xy + yx : xy - yx;
      SpinorForm rhs = ops.gen(r.rhs)(w).scaled(GaussianRational(r.coeff));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "relation " << r.text << " fails on probe #" << p;
        return os.str();
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<GaussianRational> apply_matrix(const Matrix& m,
                                           const std::vector<GaussianRational>& v) {
  std::vector<GaussianRational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    GaussianRational acc;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_zero() || v[c].is_zero()) continue;
      acc += m.at(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

std::size_t span_rank(const std::vector<std::vector<GaussianRational>>& vecs, std::size_t n) {
  Matrix m(vecs.size(), n);
  for (std::size_t r = 0; r < vecs.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = vecs[r][c];
  return m.rank();
}

}  // namespace

std::optional<std::string> sigma_orbit_witness(const SigmaRep& rep) {
  const std::size_t n = static_cast<std::size_t>(rep.dim);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::vector<GaussianRational>> span;
    std::vector<GaussianRational> seed(n);
    seed[start] = GaussianRational(1);
    span.push_back(seed);
    std::size_t rank = 1;
    std::size_t cursor = 0;
    while (cursor < span.size()) {
      for (const Matrix* m : {&rep.f_plus, &rep.f_minus}) {
        std::vector<GaussianRational> img = apply_matrix(*m, span[cursor]);
        span.push_back(img);
        std::size_t r = span_rank(span, n);
        if (r > rank)
          rank = r;
        else
          span.pop_back();
      }
      ++cursor;
    }
    if (rank < n) {
      std::ostringstream os;
      os << "orbit of basis vector f_" << (rep.j + static_cast<int>(start)) << " spans only "
         << rank << " of " << n << " dimensions on G^" << rep.j;
      return os.str();
    }
  }
  return std::nullopt;
}

std::optional<CasimirSolution> solve_casimir(int l, Corruption corrupt) {
  SigmaRep base = build_sigma(l, 0, corrupt);
  const std::size_t n = static_cast<std::size_t>(base.dim);

  Matrix q_h = base.h * base.h;
  Matrix q_e = base.e_plus * base.e_minus + base.e_minus * base.e_plus;
  Matrix q_f = base.f_plus * base.f_minus - base.f_minus * base.f_plus;

  // Entries of [C, sigma(f+-)] are linear in (a, b, c); stack both
  // commutators into one homogeneous system.
  std::vector<const Matrix*> odd = {&base.f_plus, &base.f_minus};
  Matrix system(2 * n * n, 3);
  std::size_t row = 0;
  for (const Matrix* x : odd) {
    Matrix ka = q_h * *x - *x * q_h;
    Matrix kb = q_e * *x - *x * q_e;
    Matrix kc = q_f * *x - *x * q_f;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        system.at(row, 0) = ka.at(r, c);
        system.at(row, 1) = kb.at(r, c);
        system.at(row, 2) = kc.at(r, c);
        ++row;
      }
    }
  }

  auto kernel = system.nullspace();
  if (kernel.empty()) return std::nullopt;
  std::vector<GaussianRational> v = kernel.front();
  for (const GaussianRational& g : v)
    if (!g.im.is_zero()) return std::nullopt;
  if (v[0].re.is_zero()) return std::nullopt;

  CasimirSolution sol;
  sol.a = Rational(1);
  sol.b = v[1].re / v[0].re;
  sol.c = v[2].re / v[0].re;

  for (int j = 0; j <= l; ++j) {
    SigmaRep rep = build_sigma(l, j, corrupt);
    Matrix cas = (rep.h * rep.h).scaled(GaussianRational(sol.a)) +
                 (rep.e_plus * rep.e_minus + rep.e_minus * rep.e_plus)
                     .scaled(GaussianRational(sol.b)) +
                 (rep.f_plus * rep.f_minus - rep.f_minus * rep.f_plus)
                     .scaled(GaussianRational(sol.c));
    for (int g = 0; g < kOspDim; ++g) {
      Matrix comm = cas * rep.gen(g) - rep.gen(g) * cas;
      if (!comm.is_zero()) return std::nullopt;
    }
    const std::size_t dim = static_cast<std::size_t>(rep.dim);
    GaussianRational scalar = cas.at(0, 0);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        if (cas.at(r, c) != (r == c ? scalar : GaussianRational())) return std::nullopt;
    if (!scalar.im.is_zero()) return std::nullopt;
    sol.scalars.push_back(scalar.re);
  }
  return sol;
}

}  // namespace howe
