#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acsl/invariants.hpp"
#include "acsl/surgery.hpp"

namespace acsl::cli {

/// Evaluation result that also records an undefined (zero-normalisation)
/// presentation, so Kirby-equivalent presentations can be compared.
struct Outcome {
  bool denominator_zero = false;
  std::optional<Invariant> invariant;

  friend bool operator==(const Outcome&, const Outcome&) = default;
  std::string describe() const;
};

Outcome evaluate(const SurgeryPresentation& p, const GaussSumOptions& options = {});

struct SuiteOptions {
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  /// Levels cycled through trial by trial.
  std::vector<std::int64_t> levels{1, 2, 3};
  std::uint64_t max_terms = kDefaultOracleTerms;
  unsigned threads = 1;
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  /// First few failure descriptions.
  std::vector<std::string> failures;
};

const std::vector<std::string>& suite_names();

/// Runs one named property suite; deterministic for a given seed.
SuiteReport run_suite(const SuiteOptions& options);

}  // namespace acsl::cli
