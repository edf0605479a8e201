// potsol: solver CLI for partial-order point networks.
//
// Exit codes follow the SAT-competition convention: 10 = satisfiable,
// 20 = unsatisfiable, 1 = any error. `verify` uses 0/20/1 instead.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pot/instancegen.hpp"
#include "pot/io.hpp"
#include "pot/solver.hpp"
#include "pot/structure.hpp"

namespace {

constexpr int kExitYes = 10;
constexpr int kExitNo = 20;
constexpr int kExitError = 1;

void print_stats(const pot::SolveStats& s) {
  std::printf("leaves=%llu\n", (unsigned long long)s.leaves);
  std::printf("rule2_fires=%llu\n", (unsigned long long)s.rules.rule2_fires);
  std::printf("rule3_fires=%llu\n", (unsigned long long)s.rules.rule3_fires);
  std::printf("rule4_fires=%llu\n", (unsigned long long)s.rules.rule4_fires);
  std::printf("greedy_steps=%llu\n", (unsigned long long)s.rules.greedy_steps);
  std::printf("verification_failures=%llu\n", (unsigned long long)s.verification_failures);
  std::printf("millis=%.3f\n", s.millis);
}

int run_solve(const std::string& input, const std::string& algo_name, int threads,
              bool want_stats, bool explain, bool strict, const std::string& model_out) {
  std::optional<pot::Algo> algo = pot::algo_from_name(algo_name);
  if (!algo) {
    std::cerr << "error: unknown algorithm '" << algo_name << "'\n";
    return kExitError;
  }
  pot::Instance ins = pot::load_instance(input);
  if (explain) {
    // Link/chain diagnostics on the first scaffold of the enumeration.
    pot::PtopEnumerator en(ins.n);
    pot::PairedOrder p = en.scaffold(0);
    pot::Network g = pot::compose_with(p, pot::from_instance(ins));
    for (const pot::Link& l : pot::find_links(p, g)) std::printf("L: %s\n", l.str().c_str());
    for (const pot::Chain& c : pot::find_chains(p, g)) std::printf("C: %s\n", c.str().c_str());
  }
  pot::SolveOptions opts;
  opts.algo = *algo;
  opts.threads = threads;
  opts.strict_determinism = strict;
  pot::Answer ans = pot::solve(ins, opts);
  if (want_stats) print_stats(ans.stats);
  std::printf("s %s\n", ans.yes ? "yes" : "no");
  if (!model_out.empty()) {
    pot::ModelFile mf;
    mf.yes = ans.yes;
    if (ans.yes) mf.model = *ans.model;
    pot::save_model(mf, model_out);
  }
  return ans.yes ? kExitYes : kExitNo;
}

int run_gen(int n, double density, uint64_t seed, const std::string& mode,
            const std::string& out) {
  pot::GenSpec spec;
  spec.n = n;
  spec.density = density;
  spec.seed = seed;
  if (mode == "planted") {
    spec.mode = pot::GenMode::Planted;
    auto [ins, model] = pot::gen_planted(spec);
    pot::save_instance(ins, out);
    pot::ModelFile mf{true, model};
    pot::save_model(mf, out + ".model");
  } else if (mode == "uniform") {
    spec.mode = pot::GenMode::Uniform;
    pot::save_instance(pot::gen_uniform(spec), out);
  } else {
    std::cerr << "error: unknown mode '" << mode << "'\n";
    return kExitError;
  }
  return 0;
}

int run_verify(const std::string& input, const std::string& model_path) {
  pot::Instance ins = pot::load_instance(input);
  pot::ModelFile mf = pot::load_model(model_path);
  if (!mf.yes) {
    std::cerr << "error: model file reports 's no'; nothing to verify\n";
    return kExitError;
  }
  if (int(mf.model.class_of.size()) != ins.n) {
    std::cerr << "error: model covers " << mf.model.class_of.size() << " variables, instance has "
              << ins.n << "\n";
    return kExitError;
  }
  return pot::verify_model(ins, mf.model) ? 0 : kExitNo;
}

struct SizeRange {
  int lo = 0;
  int hi = 0;
};

bool parse_sizes(const std::string& text, SizeRange& out) {
  size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      out.lo = out.hi = std::stoi(text);
    } else {
      out.lo = std::stoi(text.substr(0, dots));
      out.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (...) {
    return false;
  }
  return out.lo >= 1 && out.lo <= out.hi;
}

int run_bench(const std::string& algos_csv, const std::string& sizes, int per_size, uint64_t seed,
              const std::string& csv_path, int64_t timeout_ms) {
  SizeRange range;
  if (!parse_sizes(sizes, range)) {
    std::cerr << "error: bad --sizes '" << sizes << "' (expected A..B)\n";
    return kExitError;
  }
  std::vector<pot::Algo> algos;
  std::stringstream ss(algos_csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    std::optional<pot::Algo> a = pot::algo_from_name(name);
    if (!a) {
      std::cerr << "error: unknown algorithm '" << name << "'\n";
      return kExitError;
    }
    algos.push_back(*a);
  }
  if (algos.empty()) {
    std::cerr << "error: --algos is empty\n";
    return kExitError;
  }
  std::ofstream csv(csv_path);
  if (!csv) {
    std::cerr << "error: cannot open " << csv_path << "\n";
    return kExitError;
  }
  csv << "algo,n,seed,instance,verdict,leaves,millis,timeout\n";
  for (int n = range.lo; n <= range.hi; ++n)
    for (int k = 0; k < per_size; ++k) {
      pot::GenSpec spec;
      spec.n = n;
      spec.density = 0.5;
      spec.seed = seed + uint64_t(n) * 1000003u + uint64_t(k);
      spec.mode = pot::GenMode::Uniform;
      pot::Instance ins = pot::gen_uniform(spec);
      for (pot::Algo a : algos) {
        pot::SolveOptions opts;
        opts.algo = a;
        opts.timeout_ms = timeout_ms;
        opts.brute_guard = 1 << 20;  // the harness trusts --timeout-ms instead
        pot::Answer ans = pot::solve(ins, opts);
        csv << pot::algo_name(a) << ',' << n << ',' << spec.seed << ',' << k << ','
            << (ans.timed_out ? "unknown" : (ans.yes ? "yes" : "no")) << ',' << ans.stats.leaves
            << ',' << ans.stats.millis << ',' << (ans.timed_out ? 1 : 0) << '\n';
      }
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers for point networks over partial orders"};
  app.require_subcommand(1);

  // solve
  std::string in_path, algo = "ptop", model_out;
  int threads = 1;
  bool want_stats = false, explain = false, strict = false;
  CLI::App* solve = app.add_subcommand("solve", "decide an instance file");
  solve->add_option("--input", in_path, "instance file")->required();
  solve->add_option("--algo", algo, "ptop | total | brute");
  solve->add_option("--model-out", model_out, "write the witness (or 's no') here");
  solve->add_option("--threads", threads, "worker count for the enumeration");
  solve->add_flag("--stats", want_stats, "print key=value counters");
  solve->add_flag("--explain", explain, "print link/chain diagnostics for the first scaffold");
  solve->add_flag("--strict-determinism", strict, "force the sequential reference path");

  // gen
  int gen_n = 0;
  double density = 0.5;
  uint64_t seed = 0;
  std::string mode = "uniform", gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gen_n, "variable count")->required();
  gen->add_option("--density", density, "fraction of constrained pairs");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--mode", mode, "planted | uniform");
  gen->add_option("-o,--output", gen_out, "instance file to write")->required();

  // verify
  std::string v_in, v_model;
  CLI::App* verify = app.add_subcommand("verify", "check a model against an instance");
  verify->add_option("--input", v_in, "instance file")->required();
  verify->add_option("--model", v_model, "model file")->required();

  // bench
  std::string algos_csv = "ptop,total", sizes = "4..7", csv_path;
  int per_size = 5;
  int64_t timeout_ms = 0;
  uint64_t bench_seed = 0;
  CLI::App* bench = app.add_subcommand("bench", "run algorithms over generated instances");
  bench->add_option("--algos", algos_csv, "comma-separated list");
  bench->add_option("--sizes", sizes, "A..B inclusive");
  bench->add_option("--per-size", per_size, "instances per size");
  bench->add_option("--seed", bench_seed, "rng seed");
  bench->add_option("--csv", csv_path, "output CSV file")->required();
  bench->add_option("--timeout-ms", timeout_ms, "per-run budget, 0 = unlimited");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (solve->parsed()) return run_solve(in_path, algo, threads, want_stats, explain, strict, model_out);
    if (gen->parsed()) return run_gen(gen_n, density, seed, mode, gen_out);
    if (verify->parsed()) return run_verify(v_in, v_model);
    if (bench->parsed()) return run_bench(algos_csv, sizes, per_size, bench_seed, csv_path, timeout_ms);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
