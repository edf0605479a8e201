#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pot/network.hpp"

namespace pot {

// A totally ordered sequence of slots, each an unordered variable pair or
// a singleton. Earlier slot means strictly before; pair-mates are the
// only incomparable variables, so every variable has at most one
// incomparable partner.
class PairedOrder {
public:
  struct Slot {
    int a = -1;
    int b = -1;  // -1 for a singleton
    bool is_pair() const { return b >= 0; }
    bool operator==(const Slot&) const = default;
  };

  PairedOrder() = default;
  explicit PairedOrder(int n);

  static PairedOrder from_slots(int n, std::vector<Slot> slots);

  int n() const { return n_; }
  const std::vector<Slot>& slots() const { return slots_; }
  int slot_of(int v) const { return slot_of_[v]; }

  bool is_total() const;
  // Proper shape: all slots pairs except, for odd n, a trailing singleton.
  bool is_proper() const;

  // True iff u is strictly before v (distinct slots, u earlier).
  bool before(int u, int v) const { return slot_of_[u] < slot_of_[v]; }
  bool pair_mates(int u, int v) const;

  // Splits the pair slot holding x and y into singletons with x
  // immediately before y. Throws std::logic_error unless pair-mates.
  PairedOrder extend(int x, int y) const;

  // Sequence of variables for a total scaffold.
  std::vector<int> as_permutation() const;

  bool operator==(const PairedOrder&) const = default;

private:
  int n_ = 0;
  std::vector<Slot> slots_;
  std::vector<int> slot_of_;
};

// A PairedOrder whose slots are all singletons: a permutation.
class TotalOrder {
public:
  TotalOrder() = default;
  explicit TotalOrder(std::vector<int> perm);
  explicit TotalOrder(const PairedOrder& p);

  int n() const { return int(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  bool before(int u, int v) const { return pos_[u] < pos_[v]; }
  PairedOrder as_paired() const;

  bool operator==(const TotalOrder&) const = default;

private:
  std::vector<int> perm_;
  std::vector<int> pos_;
};

// P o f: for x before y the mask of (x,y) loses >, pair-mates keep their
// mask untouched. Always a refinement of f.
Network compose_with(const PairedOrder& p, const Network& f);
Network compose_with(const TotalOrder& t, const Network& f);

// PTOP enumeration. The stream is rank-indexable: scaffold(r) for
// r in [0, count(n)) yields every PTOP exactly once, deduplicated by
// keeping the smaller variable first within each pair slot. The
// singleton slot of odd n sits last, making the unpaired variable the
// maximum.
class PtopEnumerator {
public:
  explicit PtopEnumerator(int n);

  uint64_t count() const { return count_; }
  PairedOrder scaffold(uint64_t rank) const;

  static uint64_t count_for(int n);  // n!/2^floor(n/2); throws past 64 bits

private:
  int n_;
  uint64_t count_;
};

// Total-order enumeration by permutation rank (factorial number system).
class TotalOrderEnumerator {
public:
  explicit TotalOrderEnumerator(int n);

  uint64_t count() const { return count_; }
  TotalOrder order(uint64_t rank) const;

  static uint64_t count_for(int n);  // n!; throws past 64 bits

private:
  int n_;
  uint64_t count_;
};

// Streams total orders linearizing the strict order of a realizable
// atomic network. Stops early when the visitor returns false. Test
// utility; at least one order is always produced.
void topological_sorts(const Network& atomic, const std::function<bool(const TotalOrder&)>& visit);

}  // namespace pot
