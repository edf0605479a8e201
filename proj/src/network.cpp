#include "pot/network.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pot {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Boolean reachability matrix, Floyd-Warshall style.
void transitive_closure(std::vector<uint8_t>& reach, int n) {
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!reach[size_t(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (reach[size_t(k) * n + j]) reach[size_t(i) * n + j] = 1;
    }
}

// Collapses EQ classes and checks congruence; fills class ids (dense) and
// the class-level relation table. Returns false on any contradiction.
bool contract_classes(const Network& a, std::vector<int>& class_of, int& num_classes,
                      std::vector<RelSet>& class_rel) {
  const int n = a.n();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.rel(i, j).single() == Atom::EQ) uf.unite(i, j);

  class_of.assign(n, -1);
  num_classes = 0;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (class_of[r] < 0) class_of[r] = num_classes++;
    class_of[i] = class_of[r];
  }

  class_rel.assign(size_t(num_classes) * num_classes, RelSet::empty());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int ci = class_of[i], cj = class_of[j];
      Atom r = a.rel(i, j).single();
      if (ci == cj) {
        if (r != Atom::EQ) return false;  // merged pair must state equality
        continue;
      }
      if (r == Atom::EQ) return false;  // equality across distinct classes
      RelSet& slot = class_rel[size_t(ci) * num_classes + cj];
      if (slot.is_empty())
        slot = RelSet(r);
      else if (slot != RelSet(r))
        return false;  // congruence violation
    }
  return true;
}

}  // namespace

int Model::num_classes() const {
  int m = 0;
  for (int c : class_of) m = std::max(m, c + 1);
  return m;
}

bool Network::refine(int i, int j, RelSet s) {
  RelSet& fwd = rel_[size_t(i) * n_ + j];
  RelSet next = fwd & s;
  if (next == fwd) return false;
  fwd = next;
  rel_[size_t(j) * n_ + i] = converse(next);
  return true;
}

void Network::set(int i, int j, RelSet s) {
  rel_[size_t(i) * n_ + j] = s;
  rel_[size_t(j) * n_ + i] = converse(s);
}

bool Network::has_empty_pair() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (rel(i, j).is_empty()) return true;
  return false;
}

bool Network::is_atomic() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!rel(i, j).is_singleton()) return false;
  return true;
}

bool preceq(const Network& f, const Network& g) {
  if (f.n_ != g.n_) throw std::invalid_argument("preceq: size mismatch");
  for (size_t k = 0; k < f.rel_.size(); ++k)
    if (!f.rel_[k].subset_of(g.rel_[k])) return false;
  return true;
}

Network from_instance(const Instance& ins) {
  if (ins.n <= 0) throw std::invalid_argument("from_instance: n must be positive");
  Network net(ins.n);
  for (const Constraint& c : ins.constraints) {
    if (c.i < 0 || c.i >= ins.n || c.j < 0 || c.j >= ins.n)
      throw std::invalid_argument("from_instance: variable index out of range");
    if (c.i == c.j) throw std::invalid_argument("from_instance: constraint on a single variable");
    net.refine(c.i, c.j, c.rels);
  }
  return net;
}

bool parallel_larger(const Network& f, const Network& g) {
  if (f.n() != g.n()) throw std::invalid_argument("parallel_larger: size mismatch");
  if (!f.is_atomic() || !g.is_atomic())
    throw std::invalid_argument("parallel_larger: inputs must be atomic");
  bool differs = false;
  for (int i = 0; i < f.n(); ++i)
    for (int j = 0; j < f.n(); ++j) {
      if (i == j) continue;
      Atom gr = g.rel(i, j).single();
      Atom fr = f.rel(i, j).single();
      if (gr != fr) differs = true;
      switch (gr) {
        case Atom::INC:
          if (fr != Atom::INC) return false;
          break;
        case Atom::LT:
          if (fr != Atom::LT && fr != Atom::INC) return false;
          break;
        case Atom::GT:
          if (fr != Atom::GT && fr != Atom::INC) return false;
          break;
        case Atom::EQ:
          break;  // anything is allowed above =
      }
    }
  return differs;
}

bool realizable(const Network& a) {
  const int n = a.n();
  if (n <= 1) return true;
  std::vector<int> class_of;
  std::vector<RelSet> class_rel;
  int m = 0;
  if (!contract_classes(a, class_of, m, class_rel)) return false;

  std::vector<uint8_t> reach(size_t(m) * m, 0);
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < m; ++b1)
      if (a1 != b1 && !class_rel[size_t(a1) * m + b1].is_empty() &&
          class_rel[size_t(a1) * m + b1].single() == Atom::LT)
        reach[size_t(a1) * m + b1] = 1;
  transitive_closure(reach, m);

  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < m; ++b1) {
      if (a1 == b1 || !reach[size_t(a1) * m + b1]) continue;
      if (reach[size_t(b1) * m + a1]) return false;  // antisymmetry
      RelSet stated = class_rel[size_t(a1) * m + b1];
      if (!stated.is_empty() && stated.single() == Atom::INC)
        return false;  // derived order contradicts stated incomparability
    }
  return true;
}

Model extract_model(const Network& a) {
  std::vector<int> class_of;
  std::vector<RelSet> class_rel;
  int m = 0;
  if (!contract_classes(a, class_of, m, class_rel))
    throw std::logic_error("extract_model: network is not realizable");

  std::vector<uint8_t> reach(size_t(m) * m, 0);
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < m; ++b1)
      if (a1 != b1 && !class_rel[size_t(a1) * m + b1].is_empty() &&
          class_rel[size_t(a1) * m + b1].single() == Atom::LT)
        reach[size_t(a1) * m + b1] = 1;
  transitive_closure(reach, m);

  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < m; ++b1)
      if (a1 != b1 && reach[size_t(a1) * m + b1] && reach[size_t(b1) * m + a1])
        throw std::logic_error("extract_model: network is not realizable");

  Model model;
  model.class_of = class_of;
  // Transitive reduction of the closure.
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < m; ++b1) {
      if (a1 == b1 || !reach[size_t(a1) * m + b1]) continue;
      bool redundant = false;
      for (int c = 0; c < m && !redundant; ++c)
        if (c != a1 && c != b1 && reach[size_t(a1) * m + c] && reach[size_t(c) * m + b1])
          redundant = true;
      if (!redundant) model.strict_edges.emplace_back(a1, b1);
    }
  return model;
}

Atom induced_relation(const Model& m, int x, int y) {
  int cx = m.class_of[x], cy = m.class_of[y];
  if (cx == cy) return Atom::EQ;
  int nc = m.num_classes();
  std::vector<uint8_t> reach(size_t(nc) * nc, 0);
  for (auto [a, b] : m.strict_edges) reach[size_t(a) * nc + b] = 1;
  transitive_closure(reach, nc);
  if (reach[size_t(cx) * nc + cy]) return Atom::LT;
  if (reach[size_t(cy) * nc + cx]) return Atom::GT;
  return Atom::INC;
}

bool verify_model(const Instance& ins, const Model& m) {
  if (int(m.class_of.size()) != ins.n)
    throw std::invalid_argument("verify_model: model covers a different variable count");
  int nc = m.num_classes();
  for (int c : m.class_of)
    if (c < 0 || c >= nc) throw std::invalid_argument("verify_model: dangling class id");
  for (auto [a, b] : m.strict_edges)
    if (a < 0 || a >= nc || b < 0 || b >= nc)
      throw std::invalid_argument("verify_model: dangling class id in strict edge");

  std::vector<uint8_t> reach(size_t(nc) * nc, 0);
  for (auto [a, b] : m.strict_edges) reach[size_t(a) * nc + b] = 1;
  transitive_closure(reach, nc);
  for (int c = 0; c < nc; ++c)
    if (reach[size_t(c) * nc + c])
      throw std::invalid_argument("verify_model: strict order is cyclic");

  for (const Constraint& c : ins.constraints) {
    int cx = m.class_of[c.i], cy = m.class_of[c.j];
    Atom r;
    if (cx == cy)
      r = Atom::EQ;
    else if (reach[size_t(cx) * nc + cy])
      r = Atom::LT;
    else if (reach[size_t(cy) * nc + cx])
      r = Atom::GT;
    else
      r = Atom::INC;
    if (!c.rels.contains(r)) return false;
  }
  return true;
}

}  // namespace pot
