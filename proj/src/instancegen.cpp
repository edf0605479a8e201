#include "pot/instancegen.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace pot {

namespace {

// Thin wrapper with hand-rolled draws so generated bytes never depend on
// the standard library's distribution internals.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}

  uint64_t next() { return eng(); }
  uint64_t below(uint64_t bound) { return next() % bound; }
  double unit() { return double(next() >> 11) * 0x1.0p-53; }
};

void check_spec(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("GenSpec: n must be >= 1");
  if (spec.density < 0.0 || spec.density > 1.0)
    throw std::invalid_argument("GenSpec: density must be in [0,1]");
}

RelSet draw_mask(Rng& rng, const GenSpec& spec) {
  if (!spec.mask_weights) return RelSet(uint8_t(1 + rng.below(15)));
  double total = 0.0;
  for (double w : *spec.mask_weights) {
    if (w < 0.0) throw std::invalid_argument("GenSpec: negative mask weight");
    total += w;
  }
  if (total <= 0.0) throw std::invalid_argument("GenSpec: mask weights sum to zero");
  double x = rng.unit() * total;
  for (int k = 0; k < 15; ++k) {
    x -= (*spec.mask_weights)[k];
    if (x <= 0.0) return RelSet(uint8_t(k + 1));
  }
  return RelSet::full();
}

}  // namespace

std::pair<Instance, Model> gen_planted(const GenSpec& spec) {
  check_spec(spec);
  if (spec.mode != GenMode::Planted) throw std::invalid_argument("gen_planted: wrong mode");
  Rng rng(spec.seed);
  const int n = spec.n;

  // Random merging: up to n classes, densified after assignment.
  std::vector<int> raw_class(n);
  int raw_count = 1 + int(rng.below(uint64_t(n)));
  for (int v = 0; v < n; ++v) raw_class[v] = int(rng.below(uint64_t(raw_count)));
  std::vector<int> remap(raw_count, -1);
  int num_classes = 0;
  std::vector<int> class_of(n);
  for (int v = 0; v < n; ++v) {
    if (remap[raw_class[v]] < 0) remap[raw_class[v]] = num_classes++;
    class_of[v] = remap[raw_class[v]];
  }

  // Random DAG on classes (edges only low id -> high id), then closure.
  std::vector<uint8_t> reach(size_t(num_classes) * num_classes, 0);
  for (int a = 0; a < num_classes; ++a)
    for (int b = a + 1; b < num_classes; ++b)
      if (rng.unit() < 0.4) reach[size_t(a) * num_classes + b] = 1;
  for (int k = 0; k < num_classes; ++k)
    for (int i = 0; i < num_classes; ++i) {
      if (!reach[size_t(i) * num_classes + k]) continue;
      for (int j = 0; j < num_classes; ++j)
        if (reach[size_t(k) * num_classes + j]) reach[size_t(i) * num_classes + j] = 1;
    }

  auto true_rel = [&](int x, int y) {
    int cx = class_of[x], cy = class_of[y];
    if (cx == cy) return Atom::EQ;
    if (reach[size_t(cx) * num_classes + cy]) return Atom::LT;
    if (reach[size_t(cy) * num_classes + cx]) return Atom::GT;
    return Atom::INC;
  };

  Instance ins;
  ins.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.unit() >= spec.density) continue;
      uint8_t truth = atom_bit(true_rel(i, j));
      // Uniform superset of the true relation: any of the 8 ways to add
      // the other three atoms.
      uint8_t extra = uint8_t(rng.below(8));
      uint8_t mask = truth;
      int pos = 0;
      for (int a = 0; a < 4; ++a) {
        if ((1 << a) == truth) continue;
        if (extra & (1 << pos)) mask |= uint8_t(1 << a);
        ++pos;
      }
      ins.constraints.push_back({i, j, RelSet(mask)});
    }

  Model model;
  model.class_of = class_of;
  for (int a = 0; a < num_classes; ++a)
    for (int b = 0; b < num_classes; ++b) {
      if (a == b || !reach[size_t(a) * num_classes + b]) continue;
      bool redundant = false;
      for (int c = 0; c < num_classes && !redundant; ++c)
        if (c != a && c != b && reach[size_t(a) * num_classes + c] &&
            reach[size_t(c) * num_classes + b])
          redundant = true;
      if (!redundant) model.strict_edges.emplace_back(a, b);
    }
  return {std::move(ins), std::move(model)};
}

Instance gen_uniform(const GenSpec& spec) {
  check_spec(spec);
  if (spec.mode != GenMode::Uniform) throw std::invalid_argument("gen_uniform: wrong mode");
  Rng rng(spec.seed);
  Instance ins;
  ins.n = spec.n;
  for (int i = 0; i < spec.n; ++i)
    for (int j = i + 1; j < spec.n; ++j) {
      if (rng.unit() >= spec.density) continue;
      ins.constraints.push_back({i, j, draw_mask(rng, spec)});
    }
  return ins;
}

}  // namespace pot
