#pragma once

#include <string>
#include <vector>

#include "pot/network.hpp"
#include "pot/orders.hpp"

namespace pot {

// An oriented sequence of pairs taken from the pair slots of a scaffold,
// ascending in slot position. Orientation is the (a, b) role assignment:
// a-sides ascend by forced <, b-sides likewise, and cross pairs keep ||
// possible.
struct Link {
  std::vector<std::pair<int, int>> pairs;  // (a_i, b_i)

  bool operator==(const Link&) const = default;
  std::string str() const;  // "(a,b) (c,d) ..."
};

// A head/tail pair forced incomparable plus the link sequence that would
// transitively force head < tail unless some link is broken. Role
// convention: the head attaches to the a-side of the first link, the
// b-side tail of link i bridges to the a-side head of link i+1, and the
// tail attaches from the b-side of the last link.
struct Chain {
  int head = -1;
  int tail = -1;
  std::vector<Link> links;

  int length() const { return int(links.size()); }  // number of links
  int pair_count() const;

  bool operator==(const Chain&) const = default;
  std::string str() const;  // "head=x tail=y links=[...]"
};

// All maximal links of P o g, reported once each: links that occur as
// chain constituents carry their chain orientation (both orientations
// when distinct chains use both); qualifying pair sequences not covered
// by any chain are reported as maximal sequences, single pairs in both
// orientations. Precondition: g = compose_with(p, f) for some f.
std::vector<Link> find_links(const PairedOrder& p, const Network& g);

// All maximal chains of P o g (per head/tail, chains whose oriented pair
// set is contained in another chain's are dropped). Exact, by
// backtracking over link sequences.
std::vector<Chain> find_chains(const PairedOrder& p, const Network& g);

// True iff some link of c has every pair fully decided in the breaking
// direction (b before a), interrupting the head-to-tail path.
bool is_broken(const Chain& c, const Network& g);

// Chain-constituent links none of whose pairs occur in any
// chain-constituent link in the opposite orientation.
std::vector<Link> unopposed_chain_links(const PairedOrder& p, const Network& g);

}  // namespace pot
