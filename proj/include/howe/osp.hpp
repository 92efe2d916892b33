#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "howe/linalg.hpp"
#include "howe/rational.hpp"
#include "howe/spinor_form.hpp"

namespace howe {

// Basis order of the Lie superalgebra osp(1|2): h, e+, e- span the even
// part, f+, f- the odd part.  The defining relations are
//   [h, e+-] = +-e+-        [e+, e-] = 2h
//   [h, f+-] = +-(1/2)f+-   {f+, f-} = (1/2)h
//   [e+-, f-+] = -f+-       {f+-, f+-} = +-(1/2)e+-
enum OspGenerator {
  osp_h = 0,
  osp_e_plus = 1,
  osp_e_minus = 2,
  osp_f_plus = 3,
  osp_f_minus = 4,
};

inline constexpr int kOspDim = 5;

/** Z_2 degree of a basis generator: 0 for h, e+-; 1 for f+-. */
int osp_parity(int gen);

const char* osp_gen_name(int gen);

/** Element sum_g coeff[g] * gen_g with rational coefficients. */
using OspElement = std::array<Rational, kOspDim>;

/** Super bracket of two basis generators, expanded in the basis. */
OspElement super_bracket(int x, int y);

/**
 * Checks the graded Jacobi identity on every triple of basis generators;
 * returns a description of the first violated instance, if any.
 */
std::optional<std::string> super_jacobi_witness();

/**
 * The ladder coefficient A(l, i, j): (i - j)/8 when i - j is even and
 * (i + j - 2l - 1)/8 when odd.  Vanishes at i = 2l - j + 1, which is what
 * terminates the raising chain at the top of G^j.
 */
Rational ladder_coefficient(int l, int i, int j);

/**
 * The (2l - 2j + 1)-dimensional osp(1|2) module G^j with basis
 * f_j, .., f_{2l-j}:
 *   sigma(f-) f_i = f_{i-1}          sigma(f+) f_i = A(l, i+1, j) f_{i+1}
 *   sigma(h)  = 2 {sigma(f+), sigma(f-)}     sigma(e+-) = +-4 sigma(f+-)^2
 * with f outside the range read as 0.  Matrices act on coordinates in the
 * listed basis order, so column i - j is the image of f_i.
 */
struct SigmaRep {
  int l = 0;
  int j = 0;
  int dim = 0;
  Matrix h, e_plus, e_minus, f_plus, f_minus;

  const Matrix& gen(int g) const;
};

SigmaRep build_sigma(int l, int j, Corruption corrupt = Corruption::none);

/** First violated defining relation of the matrices, if any. */
std::optional<std::string> osp_relations_witness(const SigmaRep& rep);

/**
 * The five W operators as one osp(1|2) action: h -> H, e+- -> E+-,
 * f+- -> F+-.
 */
struct OspOperators {
  WOperator h, e_plus, e_minus, f_plus, f_minus;

  const WOperator& gen(int g) const;
};

OspOperators make_osp_operators(const WContext& ctx);

/** First defining relation violated on one of the probe vectors, if any. */
std::optional<std::string> osp_relations_witness(const OspOperators& ops,
                                                 const std::vector<SpinorForm>& probes);

/**
 * Verifies that the orbit of every basis vector of G^j under f+ and f-
 * spans the whole module, the hands-on form of irreducibility for these
 * ladders.  Returns a witness for the first stuck orbit.
 */
std::optional<std::string> sigma_orbit_witness(const SigmaRep& rep);

/**
 * Quadratic Casimir ansatz C = a h^2 + b (e+e- + e-e+) + c (f+f- - f-f+).
 * The coefficient family is solved from [C, sigma(f+-)] = 0 on G^0, then
 * centrality is re-verified against all five generators on every G^j and
 * the scalar of C on each G^j is recorded.
 */
struct CasimirSolution {
  Rational a, b, c;
  std::vector<Rational> scalars;  // scalar of C on G^j, j = 0..l
};

std::optional<CasimirSolution> solve_casimir(int l, Corruption corrupt = Corruption::none);

}  // namespace howe
