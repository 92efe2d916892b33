#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "howe/linalg.hpp"
#include "howe/osp.hpp"
#include "howe/projectors.hpp"

namespace howe {

/** Spinor parity of the degree-i rung of a tower with base parity sign. */
int rung_sign(int sign, int i);

/**
 * Element of W tensor G^j: rung index -> W component of the tensor with
 * f_{rung}.  Zero components are dropped.
 */
using TowerElement = std::map<int, SpinorForm>;

/** The rung-i intertwiner: v in form degree i goes to (F-)^{i-j} v tensor f_i. */
TowerElement tower_map(const WContext& ctx, int j, int i, const SpinorForm& v);

/** Coordinate matrix of a family of spinor forms, one row per form. */
Matrix forms_matrix(const std::vector<SpinorForm>& forms);

/**
 * Checks that the tower map over G^j intertwines the five W operators
 * with 1 tensor sigma_j on seeded projected probes, rung by rung, with
 * the boundary rungs checked for genuine vanishing.  Returns the first
 * violation found.
 */
std::optional<std::string> tower_equivariance_witness(const WContext& ctx, int j,
                                                      int base_sign, int max_degree,
                                                      int trials, std::uint64_t seed);

/**
 * Checks injectivity of v -> (F-)^{i-j} v on the rung-i summand: the
 * coordinate rank of a batch of projected probes must survive the drop to
 * the bottom rung.
 */
std::optional<std::string> tower_injectivity_witness(const WContext& ctx, int j, int i,
                                                     int base_sign, int max_degree,
                                                     int trials, std::uint64_t seed);

/**
 * Checks the nonvanishing pattern of raising powers against the index
 * set: (F+)^p on the summand E_ij is nonzero exactly while i + j + p
 * stays within 2l.
 */
std::optional<std::string> commutant_pattern_witness(const WContext& ctx, int max_degree,
                                                     int trials, std::uint64_t seed);

}  // namespace howe
