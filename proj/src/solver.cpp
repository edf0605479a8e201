#include "pot/solver.hpp"

#include <omp.h>

#include <atomic>
#include <chrono>
#include <mutex>

#include "pot/consistency.hpp"

namespace pot {

namespace {

using Clock = std::chrono::steady_clock;

struct Stopwatch {
  Clock::time_point start = Clock::now();
  double millis() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
};

struct BruteSearch {
  Network net;
  std::vector<std::pair<int, int>> pair_order;  // variable-major: (i, k), i < k
  uint64_t leaves = 0;
  std::optional<Model> model;

  bool dfs(size_t depth) {
    if (depth == pair_order.size()) {
      ++leaves;
      if (!realizable(net)) return false;
      model = extract_model(net);
      return true;
    }
    auto [i, k] = pair_order[depth];
    RelSet mask = net.rel(i, k);
    for (int a = 0; a < 4; ++a) {
      if (!mask.contains(Atom(a))) continue;
      RelSet r{Atom(a)};
      // Triangle check against the already-assigned pairs of this row.
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (!net.rel(j, k).subset_of(compose(net.rel(j, i), r))) ok = false;
      if (!ok) continue;
      net.set(i, k, r);
      bool prune = false;
      if (i == k - 1) {
        // Row complete: the atomic prefix over variables 0..k must embed.
        Network prefix(k + 1);
        for (int u = 0; u <= k; ++u)
          for (int v = u + 1; v <= k; ++v) prefix.set(u, v, net.rel(u, v));
        prune = !realizable(prefix);
      }
      if (!prune && dfs(depth + 1)) return true;
    }
    net.set(i, k, mask);
    return false;
  }
};

bool deadline_passed(const Stopwatch& sw, int64_t timeout_ms) {
  return timeout_ms > 0 && sw.millis() > double(timeout_ms);
}

// Shared enumeration driver for the two rank-indexable algorithms.
// process(rank, local_stats) returns a model when the instance is solved
// at that rank.
template <typename Process>
Answer enumerate_ranks(uint64_t count, const SolveOptions& opts, Process process) {
  Stopwatch sw;
  Answer ans;
  const bool parallel = opts.threads > 1 && !opts.strict_determinism;

  if (!parallel) {
    for (uint64_t rank = 0; rank < count; ++rank) {
      if ((rank & 0x3ff) == 0 && deadline_passed(sw, opts.timeout_ms)) {
        ans.timed_out = true;
        break;
      }
      ++ans.stats.leaves;
      std::optional<Model> m = process(rank, ans.stats);
      if (m) {
        ans.yes = true;
        ans.model = std::move(m);
        break;
      }
    }
    ans.stats.millis = sw.millis();
    return ans;
  }

  std::atomic<uint64_t> next_chunk{0};
  std::atomic<bool> found{false};
  std::atomic<bool> timed_out{false};
  std::mutex result_mu;
  const uint64_t chunk = std::max<uint64_t>(1, count / (uint64_t(opts.threads) * 64));

#pragma omp parallel num_threads(opts.threads)
  {
    SolveStats local;
    std::optional<Model> local_model;
    while (!found.load(std::memory_order_relaxed) && !timed_out.load(std::memory_order_relaxed)) {
      uint64_t lo = next_chunk.fetch_add(chunk);
      if (lo >= count) break;
      uint64_t hi = std::min(count, lo + chunk);
      for (uint64_t rank = lo; rank < hi; ++rank) {
        if (found.load(std::memory_order_relaxed)) break;
        if ((rank & 0x3ff) == 0 && deadline_passed(sw, opts.timeout_ms)) {
          timed_out.store(true);
          break;
        }
        ++local.leaves;
        std::optional<Model> m = process(rank, local);
        if (m) {
          local_model = std::move(m);
          found.store(true);
          break;
        }
      }
    }
    std::lock_guard<std::mutex> lock(result_mu);
    ans.stats.leaves += local.leaves;
    ans.stats.rules += local.rules;
    ans.stats.verification_failures += local.verification_failures;
    if (local_model && !ans.model) {
      ans.yes = true;
      ans.model = std::move(local_model);
    }
  }
  ans.timed_out = timed_out.load() && !ans.yes;
  ans.stats.millis = sw.millis();
  return ans;
}

}  // namespace

std::optional<Algo> algo_from_name(const std::string& name) {
  if (name == "ptop") return Algo::Ptop;
  if (name == "total") return Algo::Total;
  if (name == "brute") return Algo::Brute;
  return std::nullopt;
}

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::Ptop: return "ptop";
    case Algo::Total: return "total";
    case Algo::Brute: return "brute";
  }
  return "?";
}

Instance network_as_instance(const Network& net) {
  Instance ins;
  ins.n = net.n();
  for (int i = 0; i < net.n(); ++i)
    for (int j = i + 1; j < net.n(); ++j)
      if (!net.rel(i, j).is_full()) ins.constraints.push_back({i, j, net.rel(i, j)});
  return ins;
}

Answer solve_brute(const Instance& ins, int guard) {
  if (ins.n > guard)
    throw ResourceError("solve_brute: " + std::to_string(ins.n) +
                        " variables exceeds the guard of " + std::to_string(guard));
  Stopwatch sw;
  Answer ans;
  BruteSearch search{from_instance(ins), {}, 0, {}};
  if (!search.net.has_empty_pair()) {
    for (int k = 1; k < ins.n; ++k)
      for (int i = 0; i < k; ++i) search.pair_order.emplace_back(i, k);
    if (search.dfs(0)) {
      ans.yes = true;
      ans.model = std::move(search.model);
    }
  }
  ans.stats.leaves = search.leaves;
  ans.stats.millis = sw.millis();
  return ans;
}

Answer solve_total_orders(const Instance& ins, const SolveOptions& opts) {
  const Network base = from_instance(ins);
  TotalOrderEnumerator en(ins.n);
  return enumerate_ranks(en.count(), opts, [&](uint64_t rank, SolveStats& stats) {
    TotalOrderSolveResult res = solve_under_total_order(en.order(rank), base);
    if (res.verification_failed) ++stats.verification_failures;
    return std::move(res.model);
  });
}

Answer solve_ptop(const Instance& ins, const SolveOptions& opts) {
  const Network base = from_instance(ins);
  PtopEnumerator en(ins.n);
  return enumerate_ranks(en.count(), opts, [&](uint64_t rank, SolveStats& stats) -> std::optional<Model> {
    ReductionResult red = r_tot(en.scaffold(rank), base);
    stats.rules += red.stats;
    TotalOrderSolveResult res = solve_under_total_order(TotalOrder(red.scaffold), red.net);
    if (res.verification_failed) ++stats.verification_failures;
    return std::move(res.model);
  });
}

Answer solve(const Instance& ins, const SolveOptions& opts) {
  switch (opts.algo) {
    case Algo::Ptop: return solve_ptop(ins, opts);
    case Algo::Total: return solve_total_orders(ins, opts);
    case Algo::Brute: return solve_brute(ins, opts.brute_guard);
  }
  throw std::invalid_argument("solve: unknown algorithm selector");
}

SatOracle brute_oracle(int guard) {
  return [guard](const Network& net) {
    return solve_brute(network_as_instance(net), guard).yes;
  };
}

}  // namespace pot
