// Independent reference implementations used only by tests. Everything
// here goes through brute enumeration of labeled strict partial orders,
// sharing no logic with the library's solvers.
#pragma once

#include <vector>

#include "pot/network.hpp"
#include "pot/orders.hpp"

namespace oracle {

// Reachability matrices (row-major m x m, 1 = strictly below) of every
// strict partial order on m labeled elements. m <= 4.
const std::vector<std::vector<uint8_t>>& all_posets(int m);

// True iff some mapping of the network's variables into some partial
// order induces, for every pair, an atomic relation inside its mask.
// n <= 4.
bool embeds(const pot::Network& f);

// Union of the induced atomic relation of (i, j) over all embeddings
// that satisfy every mask. Empty when no embedding exists. n <= 4.
pot::RelSet embed_union(const pot::Network& f, int i, int j);

// The worked 10-variable configuration: five pair slots
// (a1,b1) < ... < (a5,b5) with a_i = 2(i-1), b_i = 2(i-1)+1.
pot::PairedOrder example1_scaffold();
pot::Network example1_network();  // the raw constraints, not composed

}  // namespace oracle
