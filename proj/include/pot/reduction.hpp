#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "pot/consistency.hpp"
#include "pot/network.hpp"
#include "pot/orders.hpp"

namespace pot {

struct RuleCounters {
  uint64_t rule2_fires = 0;
  uint64_t rule3_fires = 0;
  uint64_t rule4_fires = 0;
  uint64_t greedy_steps = 0;

  RuleCounters& operator+=(const RuleCounters& o);
};

// The (P, f) pair threaded through the simplification rules. net is kept
// composed with the scaffold: every extension immediately removes > from
// the newly ordered pair, so net always equals scaffold o f.
struct ReductionState {
  PairedOrder scaffold;
  Network net;
  RuleCounters stats;
};

ReductionState make_state(const PairedOrder& p, const Network& f);

// Fixpoint of the simplification rules, in priority order: free pair
// orientation (a pair slot missing < or > in its mask costs nothing to
// decide), breaking of unopposed chain links, and 4-variable local
// consistency. Stops when no rule applies, the scaffold is total, or a
// mask empties (the empty mask is carried to the caller).
void simplify(ReductionState& state);

// Decides satisfiability of a (composed) network. Used by the
// oracle-checked reduction; exact and expensive.
using SatOracle = std::function<bool(const Network&)>;

struct ReductionResult {
  PairedOrder scaffold;
  Network net;
  RuleCounters stats;
  // Oracle-checked runs only: set when the greedy smaller-first choice
  // was rejected at least once; the state right before that first
  // rejection is kept for divergence analysis.
  bool diverged = false;
  std::optional<ReductionState> divergence_state;
};

// The greedy total driver: simplify, then orient the lowest undecided
// pair slot smaller-index-first, repeat. Always returns a total order of
// which p is a stub; polynomial; makes no satisfiability promise.
ReductionResult r_tot(const PairedOrder& p, const Network& f);

// Like r_tot, but every greedy orientation must be confirmed satisfiable
// by the oracle; falls back to the other orientation, and stops with the
// current (P, f) when neither is confirmed. Test scale only.
ReductionResult r_corr(const PairedOrder& p, const Network& f, const SatOracle& oracle);

// True iff r_tot and r_corr produce the same scaffold and network.
bool is_reducible(const PairedOrder& p, const Network& f, const SatOracle& oracle);

}  // namespace pot
