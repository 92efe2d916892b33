#include "howe/report.hpp"

#include <algorithm>
#include <sstream>

namespace howe {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::vacuous:
      return "vacuous";
  }
  return "unknown";
}

CheckReport CheckReport::passed(std::string name, nlohmann::ordered_json params,
                                std::uint64_t seed) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.status = CheckStatus::pass;
  r.seed = seed;
  return r;
}

CheckReport CheckReport::failed(std::string name, nlohmann::ordered_json params,
                                std::uint64_t seed, std::string witness) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.status = CheckStatus::fail;
  r.witness = std::move(witness);
  r.seed = seed;
  return r;
}

CheckReport CheckReport::vacuous_result(std::string name, nlohmann::ordered_json params,
                                        std::uint64_t seed) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.status = CheckStatus::vacuous;
  r.seed = seed;
  return r;
}

bool RunReport::overall_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.ok(); });
}

bool RunReport::any_vacuous() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckReport& c) {
    return c.status == CheckStatus::vacuous;
  });
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  nlohmann::ordered_json cfg;
  cfg["l"] = config.l;
  cfg["max_degree"] = config.max_degree;
  cfg["trials"] = config.trials;
  cfg["seed"] = config.seed;
  if (!config.corrupt.empty()) cfg["corrupt"] = config.corrupt;
  j["config"] = cfg;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckReport& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["params"] = c.params.is_null() ? nlohmann::ordered_json::object() : c.params;
    jc["status"] = to_string(c.status);
    if (!c.witness.empty()) jc["witness"] = c.witness;
    jc["seed"] = c.seed;
    arr.push_back(jc);
  }
  j["checks"] = arr;
  j["overall"] = overall_ok() ? "pass" : "fail";
  return j;
}

std::string RunReport::to_table() const {
  std::ostringstream out;
  std::size_t width = 4;
  for (const CheckReport& c : checks) width = std::max(width, c.name.size());
  out << command << "  (l=" << config.l << ", degree=" << config.max_degree
      << ", trials=" << config.trials << ", seed=" << config.seed;
  if (!config.corrupt.empty()) out << ", corrupt=" << config.corrupt;
  out << ")\n";
  for (const CheckReport& c : checks) {
    out << "  " << c.name << std::string(width - c.name.size() + 2, ' ')
        << to_string(c.status);
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    out << "\n";
  }
  out << "overall: " << (overall_ok() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace howe
