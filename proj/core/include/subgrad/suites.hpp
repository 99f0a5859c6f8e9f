#ifndef SUBGRAD_SUITES_HPP
#define SUBGRAD_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "subgrad/checks.hpp"

namespace subgrad {

// A named bundle of verification records; the suites below are the
// pass/fail surface of the toolkit.
struct CheckGroup {
  std::string name;
  std::vector<CheckRecord> records;
  double seconds = 0.0;

  bool pass() const {
    for (const auto& r : records) {
      if (!r.pass) return false;
    }
    return true;
  }
};

// Synthetic SVM instance (n=50, d=5, lambda=0.1) with a long-run certified
// optimum. The certificate residual is a duality gap; throws if it cannot be
// driven below the target.
Problem certified_synthetic_svm(std::uint64_t data_seed = 7,
                                std::uint64_t certify_budget = 200000);

// Inequality checks with exactly enumerable sides: hyperplane-distance
// guarantee, deterministic gap rates, per-step expectation inequality along
// trajectories, the steepness/growth characterization, schedule algebra and
// declared-model sweeps.
std::vector<CheckGroup> exact_suite(std::uint64_t base_seed = 1);

// Seed-ensemble expectation bounds (mean + 3 SE against each theorem
// display) and the observed-rate fits.
std::vector<CheckGroup> statistical_suite(std::uint64_t base_seed = 1);

}  // namespace subgrad

#endif  // SUBGRAD_SUITES_HPP
