// Compares the sequential reference enumeration against the OpenMP
// partitioned one on the same generated instances and prints a small
// table. Run with: par_vs_seq [n] [per_size] [threads]

#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "pot/instancegen.hpp"
#include "pot/solver.hpp"

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 8;
  int per_size = argc > 2 ? std::atoi(argv[2]) : 5;
  int threads = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();

  std::printf("n=%d instances=%d threads=%d\n", n, per_size, threads);
  std::printf("%-8s %-8s %12s %12s %10s %10s %8s\n", "instance", "verdict", "seq_leaves",
              "par_leaves", "seq_ms", "par_ms", "speedup");
  double seq_total = 0, par_total = 0;
  for (int k = 0; k < per_size; ++k) {
    pot::GenSpec spec;
    spec.n = n;
    spec.density = 0.5;
    spec.seed = 0xb3ac0000u + uint64_t(k);
    spec.mode = pot::GenMode::Uniform;
    pot::Instance ins = pot::gen_uniform(spec);

    pot::SolveOptions seq;
    seq.algo = pot::Algo::Ptop;
    seq.threads = 1;
    pot::Answer a_seq = pot::solve(ins, seq);

    pot::SolveOptions par = seq;
    par.threads = threads;
    pot::Answer a_par = pot::solve(ins, par);

    if (a_seq.yes != a_par.yes) {
      std::printf("VERDICT MISMATCH on instance %d\n", k);
      return 1;
    }
    seq_total += a_seq.stats.millis;
    par_total += a_par.stats.millis;
    std::printf("%-8d %-8s %12llu %12llu %10.2f %10.2f %7.2fx\n", k, a_seq.yes ? "yes" : "no",
                (unsigned long long)a_seq.stats.leaves, (unsigned long long)a_par.stats.leaves,
                a_seq.stats.millis, a_par.stats.millis,
                a_par.stats.millis > 0 ? a_seq.stats.millis / a_par.stats.millis : 0.0);
  }
  std::printf("total: seq %.2f ms, par %.2f ms, speedup %.2fx\n", seq_total, par_total,
              par_total > 0 ? seq_total / par_total : 0.0);
  return 0;
}
