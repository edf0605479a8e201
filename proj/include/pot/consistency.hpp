#pragma once

#include <optional>
#include <vector>

#include "pot/network.hpp"
#include "pot/orders.hpp"

namespace pot {

struct PropagationReport {
  bool changed = false;
  bool empty_pair_found = false;
  int rounds = 0;
};

// Fixpoint of rel(x,z) &= compose(rel(x,y), rel(y,z)) over all ordered
// triples, in ascending sweeps. Refines in place.
PropagationReport propagate_triples(Network& f);

struct TotalOrderSolveResult {
  std::optional<Model> model;
  // Set when the pipeline produced an atomic network that then failed the
  // final realizability check (never observed on planted suites; counted
  // to keep an eye on it).
  bool verification_failed = false;
};

// Polynomial decision of T o f: compose, propagate, drop = from every
// non-singleton mask, propagate, collapse every ||-bearing mask to {||},
// then verify and extract a witness.
TotalOrderSolveResult solve_under_total_order(const TotalOrder& t, const Network& f);

// Replaces every mask inside s by the union over all realizable atomic
// assignments to the pairs inside s that fit the current masks. Masks
// touching variables outside s are untouched. |s| must be <= k_max.
Network local_consistency(const Network& f, const std::vector<int>& s, int k_max = 4);

// In-place variant; returns true if some mask strictly shrank.
bool local_consistency_inplace(Network& f, const std::vector<int>& s, int k_max = 4);

namespace detail {
// Atomic networks on k variables are packed as 2-bit relation indices in
// lexicographic pair order ((0,1),(0,2),...). The table marks the codes
// whose atomic network is realizable.
const std::vector<uint8_t>& realizable_codes(int k);  // k in [2,4]
int pair_index(int k, int i, int j);
}  // namespace detail

}  // namespace pot
