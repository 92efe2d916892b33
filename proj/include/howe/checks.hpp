#pragma once

#include <string>

#include "howe/branching.hpp"
#include "howe/duality.hpp"
#include "howe/osp.hpp"
#include "howe/probe.hpp"
#include "howe/projectors.hpp"
#include "howe/report.hpp"
#include "howe/spinor_form.hpp"

namespace howe {

/** Maps "", "f-minus", "f-plus", "h", "a-coeff" to the corruption switch. */
Corruption parse_corruption(const std::string& name);

// Every check is a pure function of the context and configuration: the
// probe stream is derived from cfg.seed and the check name, so reports
// are reproducible byte for byte.

/** Graded Jacobi identity of the abstract bracket on all basis triples. */
CheckReport check_structure(const RunConfig& cfg);

/** H acts on form degree r by the scalar (r - l)/2, both parities. */
CheckReport check_grading(const WContext& ctx, const RunConfig& cfg);

/** Every W operator commutes with rho(X) for every basis X of sp(2l). */
CheckReport check_equivariance(const WContext& ctx, const RunConfig& cfg);

/** The ten defining relations of osp(1|2) hold for the W operators. */
CheckReport check_relations(const WContext& ctx, const RunConfig& cfg);

/**
 * Ladder scalars: F- F+ is the predicted scalar on every summand E_ij,
 * including the vanishing locus i + j = 2l, and the full-depth products
 * never vanish on Xi.
 */
CheckReport check_ladder(const WContext& ctx, const RunConfig& cfg);

/** The swap identity for (F-)^k past F+, k = 0..4, on every basis element. */
CheckReport check_commutation(const WContext& ctx, const RunConfig& cfg);

/**
 * The projector family: idempotent, mutually orthogonal, summing to the
 * degree selector, equivariant, and matching the spectral Lagrange form
 * of the degree selector.
 */
CheckReport check_projectors(const WContext& ctx, const RunConfig& cfg);

/** Defining relations and orbit irreducibility of every ladder module G^j. */
CheckReport check_irreducibility(const RunConfig& cfg);

/**
 * Quadratic Casimir: the coefficient solve has a nontrivial solution,
 * its scalar on each G^j is recorded, and the induced W operator
 * commutes with all five W operators on probes.
 */
CheckReport check_casimir(const WContext& ctx, const RunConfig& cfg);

/** Five-generator equivariance of the tower maps, every tower and base. */
CheckReport check_duality_equivariance(const WContext& ctx, const RunConfig& cfg);

/** Injectivity of the rung drops on every rung of every tower. */
CheckReport check_duality_injectivity(const WContext& ctx, const RunConfig& cfg);

/** Nonvanishing pattern of raising powers against the index set. */
CheckReport check_commutant(const WContext& ctx, const RunConfig& cfg);

/** Decomposition table computed two independent ways, plus freeness. */
CheckReport check_decomposition(const RunConfig& cfg);

/** Highest-weight census against the closed-form expectation. */
CheckReport check_highest_weight_census(const WContext& ctx, const RunConfig& cfg);

/** Equivariance harness for an arbitrary endomorphism (control hook). */
CheckReport check_operator_equivariance(const WContext& ctx, const RunConfig& cfg,
                                        const std::string& op_name, const WEndo& op);

}  // namespace howe
