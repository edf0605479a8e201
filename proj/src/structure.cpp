#include "pot/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pot {

namespace {

RelSet no_eq(RelSet s) { return s - RelSet(Atom::EQ); }
const RelSet kOrderBoth = RelSet(REL_LT | REL_GT);
const RelSet kLtOnly = RelSet(REL_LT);
const RelSet kLtInc = RelSet(REL_LT | REL_INC);
const RelSet kLeEq = RelSet(REL_LT | REL_EQ);

struct Candidate {
  int slot;
  int x, y;  // as stored in the slot
};

std::vector<Candidate> link_candidates(const PairedOrder& p, const Network& g) {
  std::vector<Candidate> out;
  for (int s = 0; s < int(p.slots().size()); ++s) {
    const auto& slot = p.slots()[s];
    if (!slot.is_pair()) continue;
    if (no_eq(g.rel(slot.a, slot.b)) == kOrderBoth) out.push_back({s, slot.a, slot.b});
  }
  return out;
}

bool pair_compatible(const Network& g, const std::pair<int, int>& earlier,
                     const std::pair<int, int>& later) {
  if (no_eq(g.rel(earlier.first, later.first)) != kLtOnly) return false;
  if (no_eq(g.rel(earlier.second, later.second)) != kLtOnly) return false;
  if (!g.rel(earlier.first, later.second).contains(Atom::INC)) return false;
  if (!g.rel(later.first, earlier.second).contains(Atom::INC)) return false;
  return true;
}

// Every qualifying oriented pair sequence (both orientations of every
// candidate slot, all subsets compatible pairwise), slot-ascending.
std::vector<Link> all_link_sequences(const PairedOrder& p, const Network& g) {
  std::vector<Candidate> cands = link_candidates(p, g);
  std::vector<Link> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (!cur.empty()) out.push_back(Link{cur});
    for (size_t k = idx; k < cands.size(); ++k) {
      for (auto oriented : {std::pair{cands[k].x, cands[k].y}, std::pair{cands[k].y, cands[k].x}}) {
        bool ok = true;
        for (const auto& prev : cur)
          if (!pair_compatible(g, prev, oriented)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(oriented);
        self(self, k + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

std::set<std::pair<int, int>> oriented_pair_set(const Link& l) {
  return {l.pairs.begin(), l.pairs.end()};
}

std::set<std::pair<int, int>> unordered_pair_set(const Link& l) {
  std::set<std::pair<int, int>> s;
  for (auto [a, b] : l.pairs) s.insert({std::min(a, b), std::max(a, b)});
  return s;
}

bool link_before(const PairedOrder& p, const Link& a, const Link& b) {
  // All pairs of a strictly before all pairs of b.
  return p.slot_of(a.pairs.back().first) < p.slot_of(b.pairs.front().first);
}

bool cross_link_ok(const Network& g, const Link& earlier, const Link& later) {
  for (auto [ae, be] : earlier.pairs)
    for (auto [al, bl] : later.pairs) {
      if (no_eq(g.rel(ae, al)) != kLtInc) return false;
      if (no_eq(g.rel(be, bl)) != kLtInc) return false;
    }
  return true;
}

bool head_attaches(const Network& g, int head, const Link& first) {
  int a_head = first.pairs.front().first;
  return head == a_head || g.rel(head, a_head).subset_of(kLeEq);
}

bool tail_attaches(const Network& g, const Link& last, int tail) {
  int b_tail = last.pairs.back().second;
  return tail == b_tail || g.rel(b_tail, tail).subset_of(kLeEq);
}

bool bridge_ok(const Network& g, const Link& from, const Link& to) {
  return no_eq(g.rel(from.pairs.back().second, to.pairs.front().first)) == kLtOnly;
}

std::set<std::pair<int, int>> chain_oriented_pairs(const Chain& c) {
  std::set<std::pair<int, int>> s;
  for (const Link& l : c.links) s.insert(l.pairs.begin(), l.pairs.end());
  return s;
}

}  // namespace

int Chain::pair_count() const {
  int k = 0;
  for (const Link& l : links) k += int(l.pairs.size());
  return k;
}

std::string Link::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ' ';
    os << '(' << pairs[i].first << ',' << pairs[i].second << ')';
  }
  return os.str();
}

std::string Chain::str() const {
  std::ostringstream os;
  os << "head=" << head << " tail=" << tail << " links=[";
  for (size_t i = 0; i < links.size(); ++i) {
    if (i) os << "; ";
    os << links[i].str();
  }
  os << ']';
  return os.str();
}

std::vector<Chain> find_chains(const PairedOrder& p, const Network& g) {
  std::vector<Link> pool = all_link_sequences(p, g);
  std::sort(pool.begin(), pool.end(), [&](const Link& a, const Link& b) {
    int sa = p.slot_of(a.pairs.front().first), sb = p.slot_of(b.pairs.front().first);
    if (sa != sb) return sa < sb;
    return a.pairs < b.pairs;
  });

  std::vector<Chain> chains;
  const int n = g.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !p.before(x, y)) continue;
      if (no_eq(g.rel(x, y)) != RelSet(Atom::INC)) continue;

      std::vector<Link> cur;
      auto rec = [&](auto&& self, size_t from) -> void {
        if (!cur.empty() && tail_attaches(g, cur.back(), y))
          chains.push_back(Chain{x, y, cur});
        for (size_t k = from; k < pool.size(); ++k) {
          const Link& cand = pool[k];
          if (cur.empty()) {
            if (!head_attaches(g, x, cand)) continue;
          } else {
            if (!link_before(p, cur.back(), cand)) continue;
            if (!bridge_ok(g, cur.back(), cand)) continue;
          }
          bool ok = true;
          for (const Link& prev : cur)
            if (!cross_link_ok(g, prev, cand)) {
              ok = false;
              break;
            }
          if (!ok) continue;
          cur.push_back(cand);
          self(self, k + 1);
          cur.pop_back();
        }
      };
      rec(rec, 0);
    }

  // Keep only maximal chains: per head/tail, drop any chain whose
  // oriented pair set is contained in another's.
  std::vector<Chain> maximal;
  for (size_t i = 0; i < chains.size(); ++i) {
    auto pi = chain_oriented_pairs(chains[i]);
    bool dominated = false;
    for (size_t j = 0; j < chains.size() && !dominated; ++j) {
      if (i == j || chains[j].head != chains[i].head || chains[j].tail != chains[i].tail) continue;
      auto pj = chain_oriented_pairs(chains[j]);
      if (pi != pj && std::includes(pj.begin(), pj.end(), pi.begin(), pi.end())) dominated = true;
      if (pi == pj && j < i) dominated = true;  // exact duplicate
    }
    if (!dominated) maximal.push_back(chains[i]);
  }
  return maximal;
}

std::vector<Link> find_links(const PairedOrder& p, const Network& g) {
  std::vector<Chain> chains = find_chains(p, g);

  std::vector<Link> out;
  auto push_unique = [&](const Link& l) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  };
  std::set<std::set<std::pair<int, int>>> covered;
  for (const Chain& c : chains)
    for (const Link& l : c.links) {
      push_unique(l);
      covered.insert(unordered_pair_set(l));
    }

  // Maximal qualifying sequences not already covered by a chain link.
  std::vector<Link> pool = all_link_sequences(p, g);
  for (const Link& l : pool) {
    auto lp = oriented_pair_set(l);
    bool maximal = true;
    for (const Link& other : pool) {
      if (other.pairs.size() <= l.pairs.size()) continue;
      auto op = oriented_pair_set(other);
      if (std::includes(op.begin(), op.end(), lp.begin(), lp.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal && !covered.count(unordered_pair_set(l))) push_unique(l);
  }

  std::sort(out.begin(), out.end(), [&](const Link& a, const Link& b) {
    int sa = p.slot_of(a.pairs.front().first), sb = p.slot_of(b.pairs.front().first);
    if (sa != sb) return sa < sb;
    return a.pairs < b.pairs;
  });
  return out;
}

bool is_broken(const Chain& c, const Network& g) {
  for (const Link& l : c.links) {
    bool all_reversed = true;
    for (auto [a, b] : l.pairs)
      if (g.rel(b, a) != RelSet(Atom::LT)) {
        all_reversed = false;
        break;
      }
    if (all_reversed) return true;
  }
  return false;
}

std::vector<Link> unopposed_chain_links(const PairedOrder& p, const Network& g) {
  std::vector<Chain> chains = find_chains(p, g);
  std::vector<Link> constituents;
  std::set<std::pair<int, int>> oriented;
  for (const Chain& c : chains)
    for (const Link& l : c.links) {
      if (std::find(constituents.begin(), constituents.end(), l) == constituents.end())
        constituents.push_back(l);
      oriented.insert(l.pairs.begin(), l.pairs.end());
    }

  std::vector<Link> out;
  for (const Link& l : constituents) {
    bool opposed = false;
    for (auto [a, b] : l.pairs)
      if (oriented.count({b, a})) {
        opposed = true;
        break;
      }
    if (!opposed) out.push_back(l);
  }
  return out;
}

}  // namespace pot
