#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "pot/network.hpp"
#include "pot/orders.hpp"
#include "pot/reduction.hpp"

namespace pot {

// Thrown when a request exceeds a hard size guard (e.g. brute force past
// its variable limit).
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Algo { Ptop, Total, Brute };

std::optional<Algo> algo_from_name(const std::string& name);
std::string algo_name(Algo a);

struct SolveStats {
  uint64_t leaves = 0;  // enumerated scaffolds / orders / full assignments
  RuleCounters rules;
  uint64_t verification_failures = 0;
  double millis = 0.0;
};

struct Answer {
  bool yes = false;
  std::optional<Model> model;  // present iff yes
  SolveStats stats;
  bool timed_out = false;
};

struct SolveOptions {
  Algo algo = Algo::Ptop;
  int threads = 1;
  bool strict_determinism = false;
  int brute_guard = 8;
  int64_t timeout_ms = 0;  // 0 = unlimited
};

// Exhaustive oracle: depth-first atomic assignment pair by pair with
// realizability pruning. Exact; guarded by variable count.
Answer solve_brute(const Instance& ins, int guard = 8);

// Baseline: enumerate all n! total orders, solve each composed instance
// with the polynomial sub-solver.
Answer solve_total_orders(const Instance& ins, const SolveOptions& opts = {.algo = Algo::Total});

// Main algorithm: enumerate all n!/2^floor(n/2) PTOPs, reduce each with
// the greedy driver, solve the resulting total-order instance.
Answer solve_ptop(const Instance& ins, const SolveOptions& opts = {});

// Dispatch on opts.algo; parallel runs split the rank space between
// workers and the first verified YES wins.
Answer solve(const Instance& ins, const SolveOptions& opts);

// Satisfiability oracle over composed networks, backed by solve_brute.
SatOracle brute_oracle(int guard = 8);

// The constraints of a network, viewed as an instance (one constraint
// per unordered pair with a non-full mask).
Instance network_as_instance(const Network& net);

}  // namespace pot
