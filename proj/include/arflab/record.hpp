#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arflab/duplication.hpp"

namespace arflab {

inline constexpr const char* kArflabVersion = "0.1.0";

// One line of structured CLI output: the instance data plus a
// command-identity header, so every verdict can be recomputed from the
// record alone. Serialization round-trips losslessly.
struct ReportRecord {
  std::string command;
  std::string version = kArflabVersion;
  nlohmann::json parameters = nlohmann::json::object();

  std::vector<int> sgens;
  std::vector<int> ideal_small;
  int m = 1;
  std::vector<int> dup_small;
  int dup_conductor = 0;
  std::optional<bool> predicate;
  std::optional<bool> oracle;
  std::optional<bool> equality;
  std::optional<int> witness;
  std::optional<std::string> reason;

  bool operator==(const ReportRecord& other) const;
};

nlohmann::json to_json(const ReportRecord& record);
ReportRecord report_record_from_json(const nlohmann::json& j);

ReportRecord make_report_record(const std::string& command, nlohmann::json parameters,
                                const ExploreRecord& rec);

}  // namespace arflab
