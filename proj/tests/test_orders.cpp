#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "pot/orders.hpp"

using namespace pot;

TEST_CASE("scaffold counts follow n!/2^floor(n/2)") {
  const uint64_t expected[] = {0, 1, 1, 3, 6, 30, 90, 630, 2520};
  for (int n = 1; n <= 8; ++n) CHECK(PtopEnumerator::count_for(n) == expected[n]);
  CHECK(TotalOrderEnumerator::count_for(4) == 24);
  CHECK(TotalOrderEnumerator::count_for(8) == 40320);
  CHECK_THROWS(PtopEnumerator::count_for(60));
  CHECK_THROWS(TotalOrderEnumerator::count_for(30));
}

TEST_CASE("scaffold enumeration is exhaustive, proper and duplicate-free") {
  for (int n = 1; n <= 6; ++n) {
    PtopEnumerator en(n);
    std::set<std::vector<std::pair<int, int>>> seen;
    for (uint64_t r = 0; r < en.count(); ++r) {
      PairedOrder p = en.scaffold(r);
      REQUIRE(p.n() == n);
      REQUIRE(p.is_proper());
      std::vector<std::pair<int, int>> key;
      for (const auto& s : p.slots()) {
        REQUIRE((s.is_pair() ? std::min(s.a, s.b) : s.a) >= 0);
        if (s.is_pair()) REQUIRE(s.a < s.b);  // canonical orientation inside a slot
        key.emplace_back(s.a, s.b);
      }
      // Odd n: the singleton sits last (the unpaired variable is maximal).
      if (n % 2 == 1) {
        REQUIRE_FALSE(p.slots().back().is_pair());
        for (size_t k = 0; k + 1 < p.slots().size(); ++k) REQUIRE(p.slots()[k].is_pair());
      }
      seen.insert(key);
    }
    CHECK(seen.size() == en.count());
    // Determinism: same rank, same scaffold.
    if (en.count() > 1) CHECK(en.scaffold(1) == en.scaffold(1));
  }
}

TEST_CASE("total order enumeration hits every permutation once") {
  TotalOrderEnumerator en(4);
  std::set<std::vector<int>> seen;
  for (uint64_t r = 0; r < en.count(); ++r) seen.insert(en.order(r).perm());
  CHECK(seen.size() == 24);
}

TEST_CASE("paired order basics: before, pair_mates, extend") {
  PairedOrder p = PairedOrder::from_slots(5, {{0, 3}, {1, 4}, {2, -1}});
  CHECK(p.before(0, 1));
  CHECK(p.before(3, 2));
  CHECK_FALSE(p.before(0, 3));
  CHECK(p.pair_mates(0, 3));
  CHECK_FALSE(p.pair_mates(0, 4));
  CHECK_FALSE(p.is_total());
  CHECK(p.is_proper());

  PairedOrder q = p.extend(3, 0);
  CHECK(q.before(3, 0));
  CHECK_FALSE(q.pair_mates(0, 3));
  CHECK_FALSE(q.is_proper());  // singletons out of shape now
  CHECK_THROWS_AS(p.extend(0, 4), std::logic_error);

  PairedOrder total = q.extend(1, 4);
  CHECK(total.is_total());
  CHECK(total.as_permutation() == std::vector<int>{3, 0, 1, 4, 2});
}

TEST_CASE("compose_with removes > along the scaffold and spares pair-mates") {
  Network f(4);
  f.set(0, 2, RelSet(uint8_t(REL_GT | REL_INC)));
  PairedOrder p = PairedOrder::from_slots(4, {{0, 1}, {2, 3}});
  Network g = compose_with(p, f);
  CHECK(preceq(g, f));
  CHECK(g.rel(0, 2) == RelSet(Atom::INC));               // > removed: 0 before 2
  CHECK(g.rel(0, 1) == RelSet::full());                  // pair-mates untouched
  CHECK(g.rel(1, 3) == RelSet(uint8_t(REL_FULL & ~REL_GT)));

  TotalOrder t(std::vector<int>{3, 2, 1, 0});
  Network h = compose_with(t, f);
  CHECK(h.rel(3, 0) == RelSet(uint8_t(REL_FULL & ~REL_GT)));
  CHECK(h.rel(0, 2) == RelSet(uint8_t(REL_GT | REL_INC)));  // 2 before 0: nothing to remove
  CHECK(h.rel(0, 3) == RelSet(uint8_t(REL_FULL & ~REL_LT)));
}

TEST_CASE("topological_sorts streams every linear extension") {
  Network anti(3);  // all incomparable
  anti.set(0, 1, RelSet(Atom::INC));
  anti.set(0, 2, RelSet(Atom::INC));
  anti.set(1, 2, RelSet(Atom::INC));
  int count = 0;
  topological_sorts(anti, [&](const TotalOrder&) {
    ++count;
    return true;
  });
  CHECK(count == 6);

  Network line(3);
  line.set(0, 1, RelSet(Atom::LT));
  line.set(1, 2, RelSet(Atom::LT));
  line.set(0, 2, RelSet(Atom::LT));
  std::vector<std::vector<int>> sorts;
  topological_sorts(line, [&](const TotalOrder& t) {
    sorts.push_back(t.perm());
    return true;
  });
  REQUIRE(sorts.size() == 1);
  CHECK(sorts[0] == std::vector<int>{0, 1, 2});

  // Early stop.
  count = 0;
  topological_sorts(anti, [&](const TotalOrder&) {
    ++count;
    return false;
  });
  CHECK(count == 1);
}
