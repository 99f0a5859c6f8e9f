#ifndef SUBGRAD_REPORT_HPP
#define SUBGRAD_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "subgrad/suites.hpp"

namespace subgrad {

// One JSON object per record: {check_id, params_digest, lhs, rhs, margin,
// pass} plus a free-form note when present.
std::string record_to_json(const CheckRecord& record);

void write_report_jsonl(std::ostream& out,
                        const std::vector<CheckGroup>& groups);
void write_report_jsonl(const std::string& path,
                        const std::vector<CheckGroup>& groups);

}  // namespace subgrad

#endif  // SUBGRAD_REPORT_HPP
