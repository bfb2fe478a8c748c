#pragma once

// Seeded verification campaigns: each suite samples inputs, runs its checks
// and renders a plain-text report that is identical for identical configs.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pfister/milnor_k.hpp"

namespace pfister::campaign {

struct CampaignConfig {
  std::uint64_t seed = 1;
  int samples = 100;
  // 0 selects the suite default.
  std::int64_t coeff_bound = 0;
  // Empty selects the suite default.
  std::set<int> degree_set;
  int depth = 8;
  std::string out_path;
  int jobs = 1;
  bool record_time = false;
  int krs_degree = 1;
  // Restrict to these check names; empty runs all checks of the suite.
  std::set<std::string> checks;
};

enum class Outcome { kPass, kFail, kSkip };

struct SampleResult {
  Outcome outcome = Outcome::kPass;
  // Failure exhibit or skip reason.
  std::string detail;
  // Single-shot CLI invocation reproducing the compared value.
  std::string replay;
};

struct CheckReport {
  std::string name;
  int pass = 0;
  int fail = 0;
  int skip = 0;
  // Sample index paired with its non-pass result, ascending.
  std::vector<std::pair<int, SampleResult>> notes;
};

struct Report {
  std::string suite;
  CampaignConfig config;
  std::vector<CheckReport> checks;
  double wall_seconds = 0;

  bool all_passed() const;
  std::string render() const;
};

const std::vector<std::string>& suite_names();
std::vector<std::string> check_names(const std::string& suite);
bool is_suite(const std::string& name);

// Throws DomainError for an unknown suite or check.
Report run(const std::string& suite, const CampaignConfig& config);

// Deterministic generator used by all samplers.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  // +-(product of at most three distinct primes <= bound), |value| <= bound.
  SquareClass square_class(std::int64_t bound);
  SquareClass nontrivial_class(std::int64_t bound);
  Symbol symbol(int degree, std::int64_t bound);
  // Nonzero rational with numerator and denominator bounded by bound.
  Rational nonzero_rational(std::int64_t bound);

 private:
  std::mt19937_64 rng_;
};

std::uint64_t sub_seed(std::uint64_t seed, const std::string& check,
                       std::uint64_t index);

}  // namespace pfister::campaign
