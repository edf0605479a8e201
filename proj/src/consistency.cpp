#include "pot/consistency.hpp"

#include <stdexcept>

namespace pot {

PropagationReport propagate_triples(Network& f) {
  const int n = f.n();
  PropagationReport rep;
  bool changed_in_round = true;
  while (changed_in_round) {
    changed_in_round = false;
    ++rep.rounds;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        RelSet rxy = f.rel(x, y);
        for (int z = 0; z < n; ++z) {
          if (z == x || z == y) continue;
          if (f.refine(x, z, compose(rxy, f.rel(y, z)))) {
            changed_in_round = true;
            rep.changed = true;
          }
        }
      }
  }
  for (int x = 0; x < n && !rep.empty_pair_found; ++x)
    for (int y = x + 1; y < n; ++y)
      if (f.rel(x, y).is_empty()) {
        rep.empty_pair_found = true;
        break;
      }
  return rep;
}

TotalOrderSolveResult solve_under_total_order(const TotalOrder& t, const Network& f) {
  TotalOrderSolveResult result;
  Network g = compose_with(t, f);

  if (propagate_triples(g).empty_pair_found) return result;

  // One sweep: drop = from every non-singleton mask.
  const int n = g.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RelSet m = g.rel(i, j);
      if (m.size() > 1 && m.contains(Atom::EQ)) g.set(i, j, m - RelSet(Atom::EQ));
    }

  if (propagate_triples(g).empty_pair_found) return result;

  // Assume incomparability wherever it is still possible.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.rel(i, j).contains(Atom::INC)) g.set(i, j, RelSet(Atom::INC));

  if (g.has_empty_pair()) return result;
  if (!g.is_atomic()) return result;  // cannot happen after the steps above

  if (!realizable(g)) {
    result.verification_failed = true;
    return result;
  }
  result.model = extract_model(g);
  return result;
}

namespace detail {

int pair_index(int k, int i, int j) {
  // Lexicographic rank of (i, j), i < j, among the k(k-1)/2 pairs.
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

const std::vector<uint8_t>& realizable_codes(int k) {
  static std::vector<uint8_t> tables[5];
  if (k < 2 || k > 4) throw std::invalid_argument("realizable_codes: k must be in [2,4]");
  std::vector<uint8_t>& tab = tables[k];
  if (!tab.empty()) return tab;
  int pairs = k * (k - 1) / 2;
  int codes = 1 << (2 * pairs);
  std::vector<uint8_t> built(codes, 0);
  for (int code = 0; code < codes; ++code) {
    Network net(k);
    int c = code;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        net.set(i, j, RelSet(Atom(c & 3)));
        c >>= 2;
      }
    built[code] = realizable(net) ? 1 : 0;
  }
  tab = std::move(built);
  return tab;
}

}  // namespace detail

bool local_consistency_inplace(Network& f, const std::vector<int>& s, int k_max) {
  const int k = int(s.size());
  if (k > k_max) throw std::invalid_argument("local_consistency: subset larger than k_max");
  if (k < 2) return false;
  const std::vector<uint8_t>& realizable_tab = detail::realizable_codes(k);
  const int pairs = k * (k - 1) / 2;

  RelSet masks[6];
  {
    int p = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) masks[p++] = f.rel(s[i], s[j]);
  }

  uint8_t unions[6] = {0, 0, 0, 0, 0, 0};
  const int codes = 1 << (2 * pairs);
  for (int code = 0; code < codes; ++code) {
    if (!realizable_tab[code]) continue;
    int c = code;
    uint8_t bits[6];
    bool fits = true;
    for (int p = 0; p < pairs; ++p) {
      bits[p] = uint8_t(1u << (c & 3));
      if (!(masks[p].bits() & bits[p])) {
        fits = false;
        break;
      }
      c >>= 2;
    }
    if (!fits) continue;
    for (int p = 0; p < pairs; ++p) unions[p] |= bits[p];
  }

  bool changed = false;
  int p = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++p)
      if (f.refine(s[i], s[j], RelSet(unions[p]))) changed = true;
  return changed;
}

Network local_consistency(const Network& f, const std::vector<int>& s, int k_max) {
  Network out = f;
  local_consistency_inplace(out, s, k_max);
  return out;
}

}  // namespace pot
