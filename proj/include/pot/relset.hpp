#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace pot {

// Atomic relations between two time points. Bit positions double as
// table indices.
enum class Atom : uint8_t { LT = 0, GT = 1, EQ = 2, INC = 3 };

constexpr uint8_t atom_bit(Atom a) { return uint8_t(1u << uint8_t(a)); }

constexpr uint8_t REL_LT = atom_bit(Atom::LT);
constexpr uint8_t REL_GT = atom_bit(Atom::GT);
constexpr uint8_t REL_EQ = atom_bit(Atom::EQ);
constexpr uint8_t REL_INC = atom_bit(Atom::INC);
constexpr uint8_t REL_FULL = REL_LT | REL_GT | REL_EQ | REL_INC;

// A subset of {<, >, =, ||}. Empty is a legal value and marks a locally
// inconsistent pair; the full set marks an unconstrained pair.
class RelSet {
public:
  constexpr RelSet() = default;
  constexpr explicit RelSet(uint8_t bits) : bits_(bits & REL_FULL) {}
  constexpr RelSet(Atom a) : bits_(atom_bit(a)) {}

  static constexpr RelSet empty() { return RelSet(uint8_t(0)); }
  static constexpr RelSet full() { return RelSet(REL_FULL); }

  constexpr uint8_t bits() const { return bits_; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return bits_ == REL_FULL; }
  constexpr bool contains(Atom a) const { return bits_ & atom_bit(a); }
  constexpr bool is_singleton() const { return bits_ && !(bits_ & (bits_ - 1)); }
  constexpr int size() const { return __builtin_popcount(bits_); }
  constexpr bool subset_of(RelSet o) const { return (bits_ & ~o.bits_) == 0; }

  // The unique member of a singleton set.
  constexpr Atom single() const { return Atom(__builtin_ctz(bits_)); }

  constexpr RelSet operator&(RelSet o) const { return RelSet(uint8_t(bits_ & o.bits_)); }
  constexpr RelSet operator|(RelSet o) const { return RelSet(uint8_t(bits_ | o.bits_)); }
  constexpr RelSet operator-(RelSet o) const { return RelSet(uint8_t(bits_ & ~o.bits_)); }
  constexpr bool operator==(const RelSet&) const = default;

  // Canonical serialization: members in the fixed order '<', '>', '=', '|'.
  std::string str() const;

  // Inverse of str(); returns false on repeats or foreign characters.
  static bool parse(const std::string& text, RelSet& out);

private:
  uint8_t bits_ = 0;
};

// LT and GT swap, INC and EQ are self-converse.
constexpr RelSet converse(RelSet s) {
  uint8_t b = s.bits();
  uint8_t swapped = uint8_t((b & ~(REL_LT | REL_GT)) | ((b & REL_LT) ? REL_GT : 0) |
                            ((b & REL_GT) ? REL_LT : 0));
  return RelSet(swapped);
}

namespace detail {
// Composition of atomic relations in the partial-order point algebra:
// entry [r1][r2] is the set of relations r such that some partial order
// realizes x r1 y, y r2 z and x r z. Cross-checked at test time against
// exhaustive enumeration of three-variable atomic networks.
constexpr std::array<std::array<uint8_t, 4>, 4> kAtomCompose = {{
    // LT o _
    {{REL_LT, REL_FULL, REL_LT, REL_LT | REL_INC}},
    // GT o _
    {{REL_FULL, REL_GT, REL_GT, REL_GT | REL_INC}},
    // EQ o _
    {{REL_LT, REL_GT, REL_EQ, REL_INC}},
    // INC o _
    {{REL_LT | REL_INC, REL_GT | REL_INC, REL_INC, REL_FULL}},
}};

constexpr std::array<std::array<uint8_t, 16>, 16> make_set_compose() {
  std::array<std::array<uint8_t, 16>, 16> t{};
  for (int s1 = 0; s1 < 16; ++s1)
    for (int s2 = 0; s2 < 16; ++s2) {
      uint8_t acc = 0;
      for (int a = 0; a < 4; ++a)
        if (s1 & (1 << a))
          for (int b = 0; b < 4; ++b)
            if (s2 & (1 << b)) acc |= kAtomCompose[a][b];
      t[s1][s2] = acc;
    }
  return t;
}

inline constexpr std::array<std::array<uint8_t, 16>, 16> kSetCompose = make_set_compose();
}  // namespace detail

// Union of the atomic composition table over all pairs of members.
constexpr RelSet compose(RelSet s1, RelSet s2) {
  return RelSet(detail::kSetCompose[s1.bits()][s2.bits()]);
}

// Rebuilds the 4x4 atomic composition table from scratch by enumerating
// all atomic networks on three variables and keeping the realizable
// ones. Slow; exists as an independent oracle for kAtomCompose.
std::array<std::array<RelSet, 4>, 4> derive_composition_table();

}  // namespace pot
