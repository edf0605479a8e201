#include "pot/reduction.hpp"

#include <algorithm>

#include "pot/structure.hpp"

namespace pot {

namespace {

const RelSet kKeepAfterSplit = RelSet(REL_FULL & ~REL_GT);  // {<,||,=}

// Orders (x, y) in the scaffold and mirrors the decision into the
// composed network.
void orient(ReductionState& s, int x, int y) {
  s.scaffold = s.scaffold.extend(x, y);
  s.net.refine(x, y, kKeepAfterSplit);
}

// Lowest-position pair slot, contents normalized smaller index first.
std::optional<std::pair<int, int>> lowest_pair(const PairedOrder& p) {
  for (const auto& slot : p.slots())
    if (slot.is_pair()) return std::pair{std::min(slot.a, slot.b), std::max(slot.a, slot.b)};
  return std::nullopt;
}

// Rule 2, corrected orientation: decide a pair so that the extension
// removes nothing from its mask. Returns true if some pair was split.
bool apply_rule2(ReductionState& s) {
  for (const auto& slot : s.scaffold.slots()) {
    if (!slot.is_pair()) continue;
    int x = std::min(slot.a, slot.b), y = std::max(slot.a, slot.b);
    RelSet m = s.net.rel(x, y);
    if (!m.contains(Atom::GT)) {
      orient(s, x, y);
      ++s.stats.rule2_fires;
      return true;
    }
    if (!m.contains(Atom::LT)) {
      orient(s, y, x);
      ++s.stats.rule2_fires;
      return true;
    }
  }
  return false;
}

// Rule 3: break the first unopposed chain link by orienting all of its
// pairs b-before-a.
bool apply_rule3(ReductionState& s) {
  std::vector<Link> links = unopposed_chain_links(s.scaffold, s.net);
  if (links.empty()) return false;
  const Link& l = links.front();
  for (auto [a, b] : l.pairs)
    if (s.scaffold.pair_mates(a, b)) orient(s, b, a);
  ++s.stats.rule3_fires;
  return true;
}

// Rule 4: 4-variable local consistency, with triple propagation as a
// cheap first stage (triple consistency is implied by quad consistency,
// so the fixpoint is unchanged).
bool apply_rule4(ReductionState& s) {
  const int n = s.net.n();
  if (n < 4) return false;
  bool changed = propagate_triples(s.net).changed;
  if (s.net.has_empty_pair()) return changed;
  std::vector<int> sub(4);
  bool quad_changed = true;
  while (quad_changed) {
    quad_changed = false;
    for (sub[0] = 0; sub[0] < n; ++sub[0])
      for (sub[1] = sub[0] + 1; sub[1] < n; ++sub[1])
        for (sub[2] = sub[1] + 1; sub[2] < n; ++sub[2])
          for (sub[3] = sub[2] + 1; sub[3] < n; ++sub[3])
            if (local_consistency_inplace(s.net, sub)) {
              ++s.stats.rule4_fires;
              quad_changed = true;
              changed = true;
              if (s.net.has_empty_pair()) return true;
            }
  }
  return changed;
}

}  // namespace

RuleCounters& RuleCounters::operator+=(const RuleCounters& o) {
  rule2_fires += o.rule2_fires;
  rule3_fires += o.rule3_fires;
  rule4_fires += o.rule4_fires;
  greedy_steps += o.greedy_steps;
  return *this;
}

ReductionState make_state(const PairedOrder& p, const Network& f) {
  return ReductionState{p, compose_with(p, f), {}};
}

void simplify(ReductionState& state) {
  while (!state.scaffold.is_total()) {
    if (state.net.has_empty_pair()) return;
    if (apply_rule2(state)) continue;
    if (apply_rule3(state)) continue;
    if (apply_rule4(state)) continue;
    return;
  }
}

namespace {

// Shared driver: oracle == nullptr gives r_tot, otherwise r_corr.
ReductionResult run_reduction(const PairedOrder& p, const Network& f, const SatOracle* oracle) {
  ReductionState state = make_state(p, f);
  ReductionResult result;
  while (true) {
    simplify(state);
    if (state.scaffold.is_total()) break;
    if (state.net.has_empty_pair() && !oracle) {
      // Dead end; finish the scaffold without further analysis.
      while (auto pr = lowest_pair(state.scaffold)) {
        orient(state, pr->first, pr->second);
        ++state.stats.greedy_steps;
      }
      break;
    }
    auto pr = lowest_pair(state.scaffold);
    int x = pr->first, y = pr->second;
    if (!oracle) {
      orient(state, x, y);
      ++state.stats.greedy_steps;
      continue;
    }
    // Oracle-checked greedy step.
    Network with_xy = state.net;
    with_xy.refine(x, y, kKeepAfterSplit);
    if ((*oracle)(with_xy)) {
      orient(state, x, y);
      ++state.stats.greedy_steps;
      continue;
    }
    if (!result.diverged) {
      result.diverged = true;
      result.divergence_state = state;
    }
    Network with_yx = state.net;
    with_yx.refine(y, x, kKeepAfterSplit);
    if ((*oracle)(with_yx)) {
      orient(state, y, x);
      ++state.stats.greedy_steps;
      continue;
    }
    break;  // neither orientation confirmed: return (P, f) as is
  }
  result.scaffold = std::move(state.scaffold);
  result.net = std::move(state.net);
  result.stats = state.stats;
  return result;
}

}  // namespace

ReductionResult r_tot(const PairedOrder& p, const Network& f) {
  return run_reduction(p, f, nullptr);
}

ReductionResult r_corr(const PairedOrder& p, const Network& f, const SatOracle& oracle) {
  return run_reduction(p, f, &oracle);
}

bool is_reducible(const PairedOrder& p, const Network& f, const SatOracle& oracle) {
  ReductionResult t = r_tot(p, f);
  ReductionResult c = r_corr(p, f, oracle);
  return t.scaffold == c.scaffold && t.net == c.net;
}

}  // namespace pot
