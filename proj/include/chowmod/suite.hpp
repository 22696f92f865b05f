#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowmod/random.hpp"
#include "chowmod/witness.hpp"

namespace chowmod {

enum class Mutation {
  None,
  /// Boundary with the sign of the last coordinate's faces flipped.
  BoundarySignFlip,
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Overrides of the per-suite instance counts, by suite name.
  std::map<std::string, std::size_t> sizes;
  Mutation mutation = Mutation::None;
};

struct InstanceOutcome {
  bool pass = true;
  std::string detail;
};

struct PropertySuite {
  std::string name;
  std::size_t default_size = 0;
  std::function<InstanceOutcome(Rng&, std::size_t index, const SuiteOptions&)> run;
};

/// Every property suite, sorted by name.
const std::vector<PropertySuite>& property_suites();

struct SuiteResult {
  std::string name;
  std::size_t total = 0;
  std::size_t passed = 0;
  /// Index and detail of the first failing instance.
  std::optional<std::pair<std::size_t, std::string>> first_failure;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool all_pass() const;
  /// Deterministic: no timings, suites in name order.
  Json to_json() const;
};

/// Instances run in parallel with OpenMP; each draws from its own
/// generator seeded by (seed, suite name, index).
SuiteReport run_suites(const SuiteOptions& options, const std::vector<std::string>& only = {});
/// Same instances, one after another.
SuiteReport run_suites_serial(const SuiteOptions& options, const std::vector<std::string>& only = {});

}  // namespace chowmod
