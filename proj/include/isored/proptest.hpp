#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isored/random.hpp"

namespace isored {

/// A property draws one random instance from the generator and returns a
/// failure description, or nullopt when the instance satisfies it.
using PropertyBody = std::function<std::optional<std::string>(Rng&)>;

struct PropertySpec {
  std::string name;
  PropertyBody body;
};

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  double seconds = 0;
  bool ok() const { return failures == 0; }
};

/// Runs `cases` instances. Case k uses an Rng seeded from (seed, name, k), so
/// any failure is reproducible in isolation. Exceptions count as failures.
PropertyResult run_property(const PropertySpec& spec, int cases, std::uint64_t seed);

/// The full invariant catalogue, in a fixed order.
const std::vector<PropertySpec>& all_properties();
/// Lookup by exact name; throws std::out_of_range.
const PropertySpec& property(const std::string& name);

/// Runs every property whose name starts with `prefix` (all when empty).
std::vector<PropertyResult> run_properties(int cases, std::uint64_t seed, const std::string& prefix = "");

std::string format_result(const PropertyResult& r);

}  // namespace isored
