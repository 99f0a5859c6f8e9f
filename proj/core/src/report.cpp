#include "subgrad/report.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "subgrad/errors.hpp"

namespace subgrad {

std::string record_to_json(const CheckRecord& record) {
  nlohmann::ordered_json j;
  j["check_id"] = record.check_id;
  j["params_digest"] = record.params_digest;
  j["lhs"] = record.lhs;
  j["rhs"] = record.rhs;
  j["margin"] = record.margin;
  j["pass"] = record.pass;
  if (!record.note.empty()) j["note"] = record.note;
  return j.dump();
}

void write_report_jsonl(std::ostream& out,
                        const std::vector<CheckGroup>& groups) {
  for (const auto& group : groups) {
    for (const auto& record : group.records) {
      out << record_to_json(record) << '\n';
    }
  }
}

void write_report_jsonl(const std::string& path,
                        const std::vector<CheckGroup>& groups) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open report path '" + path + "'");
  write_report_jsonl(out, groups);
}

}  // namespace subgrad
