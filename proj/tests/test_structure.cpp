#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pot/structure.hpp"

using namespace pot;

namespace {

// Indices of the worked 10-variable example: a_i = 2(i-1), b_i = 2i-1.
int A(int i) { return 2 * (i - 1); }
int B(int i) { return 2 * (i - 1) + 1; }

Link link(std::vector<std::pair<int, int>> pairs) { return Link{std::move(pairs)}; }

}  // namespace

TEST_CASE("worked example: exactly five maximal links") {
  PairedOrder p = oracle::example1_scaffold();
  Network g = compose_with(p, oracle::example1_network());
  std::vector<Link> links = find_links(p, g);

  std::vector<Link> expected = {
      link({{A(1), B(1)}}),
      link({{A(2), B(2)}, {A(3), B(3)}}),
      link({{B(3), A(3)}}),
      link({{B(4), A(4)}}),
      link({{B(5), A(5)}}),
  };
  REQUIRE(links.size() == 5);
  CHECK(links == expected);
}

TEST_CASE("worked example: exactly two chains overlapping in one pair") {
  PairedOrder p = oracle::example1_scaffold();
  Network g = compose_with(p, oracle::example1_network());
  std::vector<Chain> chains = find_chains(p, g);
  REQUIRE(chains.size() == 2);

  Chain first{A(1), A(4), {link({{A(1), B(1)}}), link({{B(3), A(3)}}), link({{B(4), A(4)}})}};
  Chain second{A(2), A(5), {link({{A(2), B(2)}, {A(3), B(3)}}), link({{B(5), A(5)}})}};
  CHECK(std::count(chains.begin(), chains.end(), first) == 1);
  CHECK(std::count(chains.begin(), chains.end(), second) == 1);

  CHECK(first.length() == 3);
  CHECK(first.pair_count() == 3);
  CHECK(second.length() == 2);
  CHECK(second.pair_count() == 3);

  // The overlap: the (A3,B3) pair occurs in both orientations.
  bool fwd = false, rev = false;
  for (const Chain& c : chains)
    for (const Link& l : c.links)
      for (auto pr : l.pairs) {
        if (pr == std::pair{A(3), B(3)}) fwd = true;
        if (pr == std::pair{B(3), A(3)}) rev = true;
      }
  CHECK(fwd);
  CHECK(rev);
}

TEST_CASE("worked example: unopposed constituents exclude the shared pair") {
  PairedOrder p = oracle::example1_scaffold();
  Network g = compose_with(p, oracle::example1_network());
  std::vector<Link> free = unopposed_chain_links(p, g);
  // (A3,B3) appears in both orientations, poisoning the two links that
  // contain it; the other three constituents are safe to break.
  REQUIRE(free.size() == 3);
  CHECK(std::count(free.begin(), free.end(), link({{A(1), B(1)}})) == 1);
  CHECK(std::count(free.begin(), free.end(), link({{B(4), A(4)}})) == 1);
  CHECK(std::count(free.begin(), free.end(), link({{B(5), A(5)}})) == 1);
}

TEST_CASE("is_broken fires when some link is fully decided against the path") {
  PairedOrder p = oracle::example1_scaffold();
  Network g = compose_with(p, oracle::example1_network());
  std::vector<Chain> chains = find_chains(p, g);
  Chain first{A(1), A(4), {link({{A(1), B(1)}}), link({{B(3), A(3)}}), link({{B(4), A(4)}})}};
  REQUIRE(std::count(chains.begin(), chains.end(), first) == 1);

  CHECK_FALSE(is_broken(first, g));
  Network broken = g;
  broken.set(B(1), A(1), RelSet(Atom::LT));  // decide the single-pair link
  CHECK(is_broken(first, broken));

  // Deciding it the other way does not break the chain.
  Network routed = g;
  routed.set(A(1), B(1), RelSet(Atom::LT));
  CHECK_FALSE(is_broken(first, routed));
}

TEST_CASE("breaking a chain restores satisfiability of the head/tail clash") {
  // Minimal chain: one pair (1,2) between head 0 and tail 3, with
  // head || tail demanded. Leaving the pair unbroken forces 0 < 3.
  PairedOrder p = PairedOrder::from_slots(4, {{0, -1}, {1, 2}, {3, -1}});
  Network f(4);
  f.set(0, 3, RelSet(Atom::INC));
  f.set(1, 2, RelSet(uint8_t(REL_LT | REL_GT)));
  f.set(0, 2, RelSet(uint8_t(REL_LT | REL_EQ)));  // head attaches to the pair
  f.set(1, 3, RelSet(uint8_t(REL_LT | REL_EQ)));  // pair attaches to tail
  Network g = compose_with(p, f);

  std::vector<Chain> chains = find_chains(p, g);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].head == 0);
  CHECK(chains[0].tail == 3);
  REQUIRE(chains[0].links.size() == 1);
  CHECK(chains[0].links[0] == link({{2, 1}}));

  // Forcing the chain through (2 < 1, completing the head-to-tail path)
  // contradicts 0 || 3; breaking it (1 < 2) stays satisfiable.
  Network through = g;
  through.set(2, 1, RelSet(Atom::LT));
  CHECK_FALSE(oracle::embeds(through));
  Network broken = g;
  broken.set(2, 1, RelSet(Atom::GT));
  CHECK(oracle::embeds(broken));
  CHECK(is_broken(chains[0], broken));
}

TEST_CASE("no structures without the defining masks") {
  PairedOrder p(4);  // pairs (0,1) and (2,3)
  Network f(4);      // everything unconstrained
  Network g = compose_with(p, f);
  CHECK(find_links(p, g).empty());   // full masks are not {<,>}-exact
  CHECK(find_chains(p, g).empty());  // and nothing is forced incomparable
}
