// Acceptance harness: runs every verification group at its pinned
// parameters and prints one pass/fail line per criterion.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "subgrad/report.hpp"
#include "subgrad/suites.hpp"

namespace {

struct CriterionLine {
  int number;
  const char* group;
  const char* label;
};

// Group names as emitted by the suites, in criterion order.
const CriterionLine kCriteria[] = {
    {1, "shor-hyperplane-sweep",
     "hyperplane-distance guarantee on every deterministic instance"},
    {2, "rate-quadratic-growth-model",
     "quadratic-envelope rate L R^2 / (2(T+1)) and observed slope"},
    {3, "rate-holder-growth-model",
     "Holder-envelope rate R^1.5 / (1.5 (T+1)^0.75) and observed slope"},
    {4, "rate-additive-composite", "additive-composite rate bound"},
    {5, "per-step-inequality-trajectories",
     "enumerated per-step expectation inequality along svm trajectories"},
    {6, "expectation-rate-T5", "extended stochastic rate, constant step"},
    {7, "expectation-rate-C5",
     "quadratically regularized rate with certified optimum"},
    {8, "expectation-rate-quadratic-growth",
     "quadratic-growth rate without strong convexity"},
    {9, "steepness-growth-characterization",
     "steepness bound <-> quadratic upper bound, both directions"},
    {10, "schedule-algebra",
     "schedule recurrences, bounded products, L1=0 reduction"},
    {11, "declared-model-certification",
     "growth-envelope and second-moment sweeps for the whole zoo"},
};

const char* kSupplementary[] = {
    "rate-generic-envelope",
    "expectation-rate-T3",
    "expectation-rate-T4",
    "expectation-rate-T6",
};

void print_group(const subgrad::CheckGroup& group, const char* tag,
                 const char* label) {
  std::size_t passed = 0;
  for (const auto& record : group.records) passed += record.pass ? 1 : 0;
  std::printf("[%4s] %s  %s (%zu/%zu checks, %.2fs)\n", tag,
              group.pass() ? "PASS" : "FAIL", label, passed,
              group.records.size(), group.seconds);
  for (const auto& record : group.records) {
    if (!record.pass) {
      std::printf("        FAILED %s: lhs=%.12g rhs=%.12g margin=%.3g%s%s\n",
                  record.check_id.c_str(), record.lhs, record.rhs,
                  record.margin, record.note.empty() ? "" : " -- ",
                  record.note.c_str());
    }
  }
}

}  // namespace

int main() {
  std::vector<subgrad::CheckGroup> groups = subgrad::exact_suite();
  {
    std::vector<subgrad::CheckGroup> statistical = subgrad::statistical_suite();
    groups.insert(groups.end(), statistical.begin(), statistical.end());
  }

  std::map<std::string, const subgrad::CheckGroup*> by_name;
  for (const auto& group : groups) by_name[group.name] = &group;

  bool all_pass = true;
  std::printf("== acceptance criteria ==\n");
  for (const auto& criterion : kCriteria) {
    const auto it = by_name.find(criterion.group);
    if (it == by_name.end()) {
      std::printf("[%4d] FAIL  %s (group missing)\n", criterion.number,
                  criterion.label);
      all_pass = false;
      continue;
    }
    char tag[8];
    std::snprintf(tag, sizeof tag, "%d", criterion.number);
    print_group(*it->second, tag, criterion.label);
    all_pass = all_pass && it->second->pass();
  }

  std::printf("== supplementary checks ==\n");
  for (const char* name : kSupplementary) {
    const auto it = by_name.find(name);
    if (it == by_name.end()) continue;
    print_group(*it->second, "supp", it->second->name.c_str());
    all_pass = all_pass && it->second->pass();
  }

  subgrad::write_report_jsonl("acceptance_report.jsonl", groups);
  std::printf("report: acceptance_report.jsonl\n");
  std::printf("overall: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
