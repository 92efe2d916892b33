#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace howe {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/** Shared knobs for a verification run. */
struct RunConfig {
  int l = 2;
  int max_degree = 4;
  int trials = 20;
  std::uint64_t seed = 0;
  std::string corrupt;  // empty = faithful operators
};

enum class CheckStatus { pass, fail, vacuous };

std::string to_string(CheckStatus s);

/**
 * Outcome of one named check.  `witness` is a human-readable description of
 * the first counterexample when the check fails; it stays empty on success.
 * Wall-clock time is deliberately not part of this record: reports with the
 * same configuration must be byte-identical across runs.
 */
struct CheckReport {
  std::string name;
  nlohmann::ordered_json params;  // small name->value map, check-specific
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  std::uint64_t seed = 0;

  static CheckReport passed(std::string name, nlohmann::ordered_json params,
                            std::uint64_t seed);
  static CheckReport failed(std::string name, nlohmann::ordered_json params,
                            std::uint64_t seed, std::string witness);
  static CheckReport vacuous_result(std::string name, nlohmann::ordered_json params,
                                    std::uint64_t seed);

  bool ok() const { return status != CheckStatus::fail; }
};

/** Full report for one CLI invocation. */
struct RunReport {
  std::string command;
  RunConfig config;
  std::vector<CheckReport> checks;

  bool overall_ok() const;
  bool any_vacuous() const;

  nlohmann::ordered_json to_json() const;
  std::string to_table() const;
};

}  // namespace howe
