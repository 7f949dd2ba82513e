#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pvf/vecfield.hpp"

namespace pvf::verify {

/// Operations the suite exercises through an indirection, so a test can
/// substitute a broken implementation and watch the right families fail.
struct Ops {
  std::function<VectorField(const VectorField&, const VectorField&)> bracket = pvf::bracket;
};

struct Config {
  std::uint64_t seed = 42;
  // Overrides every family's default case count when set.
  std::optional<std::size_t> cases;
  // Family names to run; empty means all.
  std::vector<std::string> only;
  std::size_t max_dimension = 3;
  unsigned max_degree = 3;
  std::size_t max_letters = 4;
  unsigned elementary_degree = 3;
};

struct FamilyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  // Description of the first failing case.
  std::optional<std::string> failure;
  bool ok() const noexcept { return passed == cases; }
};

struct Summary {
  std::vector<FamilyResult> families;
  bool ok() const noexcept;
};

/// Names of all property families, in run order.
std::vector<std::string> family_names();

/// Runs the selected families. Each family draws from its own generator
/// seeded from (seed, family name), so results do not depend on which other
/// families run. Throws std::invalid_argument for an unknown family name.
Summary run(const Config& config, const Ops& ops = {});

}  // namespace pvf::verify
