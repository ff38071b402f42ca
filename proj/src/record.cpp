#include "arflab/record.hpp"

namespace arflab {

namespace {

template <typename T>
nlohmann::json opt_json(const std::optional<T>& value) {
  if (!value) return nullptr;
  return *value;
}

template <typename T>
std::optional<T> opt_from(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

bool ReportRecord::operator==(const ReportRecord& other) const {
  return command == other.command && version == other.version && parameters == other.parameters &&
         sgens == other.sgens && ideal_small == other.ideal_small && m == other.m &&
         dup_small == other.dup_small && dup_conductor == other.dup_conductor &&
         predicate == other.predicate && oracle == other.oracle && equality == other.equality &&
         witness == other.witness && reason == other.reason;
}

nlohmann::json to_json(const ReportRecord& record) {
  return nlohmann::json{{"command", record.command},
                        {"version", record.version},
                        {"parameters", record.parameters},
                        {"sgens", record.sgens},
                        {"ideal_small", record.ideal_small},
                        {"m", record.m},
                        {"dup_small", record.dup_small},
                        {"dup_conductor", record.dup_conductor},
                        {"predicate", opt_json(record.predicate)},
                        {"oracle", opt_json(record.oracle)},
                        {"equality", opt_json(record.equality)},
                        {"witness", opt_json(record.witness)},
                        {"reason", opt_json(record.reason)}};
}

ReportRecord report_record_from_json(const nlohmann::json& j) {
  ReportRecord record;
  record.command = j.at("command").get<std::string>();
  record.version = j.at("version").get<std::string>();
  record.parameters = j.at("parameters");
  record.sgens = j.at("sgens").get<std::vector<int>>();
  record.ideal_small = j.at("ideal_small").get<std::vector<int>>();
  record.m = j.at("m").get<int>();
  record.dup_small = j.at("dup_small").get<std::vector<int>>();
  record.dup_conductor = j.at("dup_conductor").get<int>();
  record.predicate = opt_from<bool>(j, "predicate");
  record.oracle = opt_from<bool>(j, "oracle");
  record.equality = opt_from<bool>(j, "equality");
  record.witness = opt_from<int>(j, "witness");
  record.reason = opt_from<std::string>(j, "reason");
  return record;
}

ReportRecord make_report_record(const std::string& command, nlohmann::json parameters,
                                const ExploreRecord& rec) {
  ReportRecord record;
  record.command = command;
  record.parameters = std::move(parameters);
  record.sgens = rec.sgens;
  record.ideal_small = rec.ideal_small;
  record.m = rec.m;
  record.dup_small = rec.dup_small;
  record.dup_conductor = rec.dup_conductor;
  record.predicate = rec.predicate;
  record.oracle = rec.oracle;
  record.equality = rec.equality;
  record.witness = rec.witness;
  record.reason = rec.reason;
  return record;
}

}  // namespace arflab
