#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "pot/network.hpp"

namespace pot {

enum class GenMode { Planted, Uniform };

struct GenSpec {
  int n = 0;
  double density = 0.5;  // fraction of constrained pairs
  uint64_t seed = 0;
  GenMode mode = GenMode::Uniform;
  // Optional distribution over the 15 non-empty RelSets, indexed by
  // bits-1 (so index 0 is {<}, index 14 is the full set).
  std::optional<std::array<double, 15>> mask_weights;
};

// Samples a random partial order with merging, reads off its atomic
// network, and relaxes each emitted constraint to a uniform superset of
// the true relation. The returned model verifies by construction.
std::pair<Instance, Model> gen_planted(const GenSpec& spec);

// Each pair constrained independently with probability density; masks
// drawn from mask_weights (uniform over the 15 non-empty sets by
// default). Satisfiability is not controlled.
Instance gen_uniform(const GenSpec& spec);

}  // namespace pot
