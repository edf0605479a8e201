#include "pot/relset.hpp"

#include "pot/network.hpp"

namespace pot {

namespace {
constexpr char kCanonicalOrder[4] = {'<', '>', '=', '|'};
constexpr Atom kCanonicalAtoms[4] = {Atom::LT, Atom::GT, Atom::EQ, Atom::INC};
}  // namespace

std::string RelSet::str() const {
  std::string out;
  for (int k = 0; k < 4; ++k)
    if (contains(kCanonicalAtoms[k])) out.push_back(kCanonicalOrder[k]);
  return out;
}

bool RelSet::parse(const std::string& text, RelSet& out) {
  uint8_t bits = 0;
  for (char c : text) {
    uint8_t bit;
    switch (c) {
      case '<': bit = REL_LT; break;
      case '>': bit = REL_GT; break;
      case '=': bit = REL_EQ; break;
      case '|': bit = REL_INC; break;
      default: return false;
    }
    if (bits & bit) return false;  // repetition
    bits |= bit;
  }
  out = RelSet(bits);
  return true;
}

std::array<std::array<RelSet, 4>, 4> derive_composition_table() {
  std::array<std::array<RelSet, 4>, 4> table{};
  // All atomic networks on {x, y, z}: 4 choices for each of the three
  // unordered pairs.
  for (int rxy = 0; rxy < 4; ++rxy)
    for (int ryz = 0; ryz < 4; ++ryz)
      for (int rxz = 0; rxz < 4; ++rxz) {
        Network net(3);
        net.set(0, 1, RelSet(Atom(rxy)));
        net.set(1, 2, RelSet(Atom(ryz)));
        net.set(0, 2, RelSet(Atom(rxz)));
        if (realizable(net))
          table[rxy][ryz] = table[rxy][ryz] | RelSet(Atom(rxz));
      }
  return table;
}

}  // namespace pot
