#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pot/relset.hpp"

namespace pot {

struct Constraint {
  int i = 0;
  int j = 0;
  RelSet rels;
  bool operator==(const Constraint&) const = default;
};

// A POT instance as parsed: a variable count plus explicit constraints.
struct Instance {
  int n = 0;
  std::vector<Constraint> constraints;
  bool operator==(const Instance&) const = default;
};

// A witness: variables collapsed into equivalence classes plus a strict
// order on classes given by its transitive reduction.
struct Model {
  std::vector<int> class_of;                  // variable -> dense class id
  std::vector<std::pair<int, int>> strict_edges;  // (c1, c2) meaning c1 < c2

  int num_classes() const;
};

// The n x n table of RelSets with converse coherence. The diagonal is
// conceptually {=} and never stored.
class Network {
public:
  Network() = default;
  explicit Network(int n) : n_(n), rel_(size_t(n) * n, RelSet::full()) {}

  int n() const { return n_; }

  RelSet rel(int i, int j) const { return rel_[size_t(i) * n_ + j]; }

  // rel(i,j) &= s, with the converse side kept coherent. Returns true on
  // strict shrinkage. An emptied mask is stored, not thrown.
  bool refine(int i, int j, RelSet s);

  // Unconditional coherent store (s and converse(s)).
  void set(int i, int j, RelSet s);

  bool has_empty_pair() const;
  bool is_atomic() const;

  // f preceq g: every mask of f is a subset of the matching mask of g.
  friend bool preceq(const Network& f, const Network& g);

  bool operator==(const Network&) const = default;

private:
  int n_ = 0;
  std::vector<RelSet> rel_;
};

// Builds the working network of an instance: unconstrained pairs get the
// full set, duplicate statements on a pair intersect via converse.
// Throws std::invalid_argument on bad indices or i == j.
Network from_instance(const Instance& ins);

// The ||-larger comparison between atomic networks (strict: f must differ
// from g somewhere). Throws std::invalid_argument unless both are atomic
// networks of the same size.
bool parallel_larger(const Network& f, const Network& g);

// Decides whether an atomic network is induced by mapping the variables
// into some partial order (with merging). Preconditions: atomic.
bool realizable(const Network& atomic);

// Witness extraction from a realizable atomic network. Throws
// std::logic_error if the network is not realizable.
Model extract_model(const Network& atomic);

// Recomputes the induced atomic relation of every constrained pair from
// the model and checks membership. Shares no code with the solvers.
// Throws std::invalid_argument on dangling class ids.
bool verify_model(const Instance& ins, const Model& m);

// The atomic relation between two variables induced by a model (uses the
// transitive closure of strict_edges).
Atom induced_relation(const Model& m, int x, int y);

}  // namespace pot
