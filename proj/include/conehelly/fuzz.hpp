#pragma once

// Seeded property fuzzing of the Helly statements on random integer
// instances.

#include <cstdint>
#include <optional>
#include <string>

#include "conehelly/ratlin.hpp"

namespace conehelly {

struct FuzzConfig {
  std::size_t d_max = 4;
  std::size_t n_max = 10;
  std::uint64_t bound = 2;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
};

struct PropertyTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct FuzzFailure {
  std::uint64_t trial = 0;
  std::string property;
  std::size_t k = 0;
  std::string detail;
  VectorSet instance;
};

struct FuzzSummary {
  FuzzConfig config;
  std::vector<PropertyTally> properties;
  std::optional<FuzzFailure> first_failure;

  std::uint64_t total_failures() const;
};

/// The instance drawn for a trial: d and n uniform in [1, d_max] and
/// [1, n_max], entries from gen_random, everything derived from (seed, trial).
VectorSet fuzz_instance(const FuzzConfig& config, std::uint64_t trial);

/// Runs every property on one instance, adding to `summary`. Returns false
/// on the first failing property.
bool check_instance(const VectorSet& a, std::uint64_t trial, FuzzSummary& summary);

FuzzSummary run_fuzz(const FuzzConfig& config);

}  // namespace conehelly
