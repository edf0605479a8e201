#include <doctest.h>

#include "oracles.hpp"
#include "pot/instancegen.hpp"
#include "pot/solver.hpp"

using namespace pot;

namespace {

Instance three_var(uint8_t m01, uint8_t m02, uint8_t m12) {
  Instance ins;
  ins.n = 3;
  ins.constraints = {{0, 1, RelSet(m01)}, {0, 2, RelSet(m02)}, {1, 2, RelSet(m12)}};
  return ins;
}

}  // namespace

TEST_CASE("three solvers agree on every three-variable instance") {
  SolveOptions ptop, total;
  ptop.algo = Algo::Ptop;
  total.algo = Algo::Total;
  for (uint32_t m01 = 1; m01 < 16; ++m01)
    for (uint32_t m02 = 1; m02 < 16; ++m02)
      for (uint32_t m12 = 1; m12 < 16; ++m12) {
        Instance ins = three_var(uint8_t(m01), uint8_t(m02), uint8_t(m12));
        Answer brute = solve_brute(ins);
        Answer via_ptop = solve(ins, ptop);
        Answer via_total = solve(ins, total);
        CAPTURE(m01);
        CAPTURE(m02);
        CAPTURE(m12);
        REQUIRE(via_ptop.yes == brute.yes);
        REQUIRE(via_total.yes == brute.yes);
        if (brute.yes) {
          REQUIRE(verify_model(ins, *via_ptop.model));
          REQUIRE(verify_model(ins, *via_total.model));
          REQUIRE(verify_model(ins, *brute.model));
        } else {
          // Exhausted NO: the enumerations visit the whole rank space.
          REQUIRE(via_ptop.stats.leaves == PtopEnumerator::count_for(3));
          REQUIRE(via_total.stats.leaves == TotalOrderEnumerator::count_for(3));
        }
      }
}

TEST_CASE("leaf counts on exhausted NO instances follow the count laws") {
  for (int n = 4; n <= 6; ++n) {
    Instance ins;
    ins.n = n;
    ins.constraints = {{0, 1, RelSet(Atom::LT)}, {1, 0, RelSet(Atom::LT)}};  // contradiction
    SolveOptions opts;
    opts.algo = Algo::Ptop;
    Answer a = solve(ins, opts);
    CHECK_FALSE(a.yes);
    CHECK(a.stats.leaves == PtopEnumerator::count_for(n));
    opts.algo = Algo::Total;
    a = solve(ins, opts);
    CHECK_FALSE(a.yes);
    CHECK(a.stats.leaves == TotalOrderEnumerator::count_for(n));
  }
}

TEST_CASE("brute guard raises a resource error") {
  Instance big;
  big.n = 20;
  CHECK_THROWS_AS(solve_brute(big), ResourceError);
  SolveOptions opts;
  opts.algo = Algo::Brute;
  CHECK_THROWS_AS(solve(big, opts), ResourceError);
}

TEST_CASE("algorithm names round-trip") {
  for (Algo a : {Algo::Ptop, Algo::Total, Algo::Brute}) CHECK(algo_from_name(algo_name(a)) == a);
  CHECK_FALSE(algo_from_name("nope").has_value());
}

TEST_CASE("parallel and sequential runs agree") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    GenSpec spec;
    spec.n = 6;
    spec.density = 0.5;
    spec.seed = 1000 + seed;
    spec.mode = GenMode::Uniform;
    Instance ins = gen_uniform(spec);
    SolveOptions seq, par;
    seq.algo = par.algo = Algo::Ptop;
    seq.threads = 1;
    par.threads = 4;
    Answer a = solve(ins, seq);
    Answer b = solve(ins, par);
    CAPTURE(seed);
    REQUIRE(a.yes == b.yes);
    if (b.yes) REQUIRE(verify_model(ins, *b.model));
    // Strict determinism forces the sequential path even with threads.
    par.strict_determinism = true;
    Answer c = solve(ins, par);
    REQUIRE(c.yes == a.yes);
    REQUIRE(c.stats.leaves == a.stats.leaves);
  }
}

TEST_CASE("planted instances are always YES with verified witnesses") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec spec;
    spec.n = 6;
    spec.density = 0.7;
    spec.seed = seed;
    spec.mode = GenMode::Planted;
    auto [ins, planted] = gen_planted(spec);
    REQUIRE(verify_model(ins, planted));
    SolveOptions opts;
    opts.algo = Algo::Ptop;
    Answer a = solve(ins, opts);
    REQUIRE(a.yes);
    REQUIRE(verify_model(ins, *a.model));
  }
}

TEST_CASE("timeouts are reported, not fatal") {
  // An exhausted NO at n = 9 takes long enough to trip a 1 ms budget.
  Instance ins;
  ins.n = 9;
  ins.constraints = {{0, 1, RelSet(Atom::LT)}, {1, 0, RelSet(Atom::LT)}};
  SolveOptions opts;
  opts.algo = Algo::Total;
  opts.timeout_ms = 1;
  Answer a = solve(ins, opts);
  if (a.timed_out) {
    CHECK_FALSE(a.yes);
    CHECK(a.stats.leaves < TotalOrderEnumerator::count_for(9));
  }
}
