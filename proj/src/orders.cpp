#include "pot/orders.hpp"

#include <algorithm>
#include <stdexcept>

namespace pot {

PairedOrder::PairedOrder(int n) : n_(n) {
  slots_.reserve((n + 1) / 2);
  for (int v = 0; v + 1 < n; v += 2) slots_.push_back({v, v + 1});
  if (n % 2) slots_.push_back({n - 1, -1});
  slot_of_.resize(n);
  for (int s = 0; s < int(slots_.size()); ++s) {
    slot_of_[slots_[s].a] = s;
    if (slots_[s].is_pair()) slot_of_[slots_[s].b] = s;
  }
}

PairedOrder PairedOrder::from_slots(int n, std::vector<Slot> slots) {
  PairedOrder p;
  p.n_ = n;
  p.slots_ = std::move(slots);
  p.slot_of_.assign(n, -1);
  for (int s = 0; s < int(p.slots_.size()); ++s) {
    const Slot& slot = p.slots_[s];
    if (slot.a < 0 || slot.a >= n || p.slot_of_[slot.a] >= 0)
      throw std::invalid_argument("PairedOrder: bad slot contents");
    p.slot_of_[slot.a] = s;
    if (slot.is_pair()) {
      if (slot.b >= n || p.slot_of_[slot.b] >= 0)
        throw std::invalid_argument("PairedOrder: bad slot contents");
      p.slot_of_[slot.b] = s;
    }
  }
  for (int v = 0; v < n; ++v)
    if (p.slot_of_[v] < 0) throw std::invalid_argument("PairedOrder: variable missing");
  return p;
}

bool PairedOrder::is_total() const {
  for (const Slot& s : slots_)
    if (s.is_pair()) return false;
  return true;
}

bool PairedOrder::is_proper() const {
  for (int s = 0; s < int(slots_.size()); ++s) {
    if (!slots_[s].is_pair() && (n_ % 2 == 0 || s != int(slots_.size()) - 1)) return false;
  }
  return true;
}

bool PairedOrder::pair_mates(int u, int v) const {
  return u != v && slot_of_[u] == slot_of_[v];
}

PairedOrder PairedOrder::extend(int x, int y) const {
  if (!pair_mates(x, y)) throw std::logic_error("PairedOrder::extend: not pair-mates");
  PairedOrder out;
  out.n_ = n_;
  out.slots_.reserve(slots_.size() + 1);
  int split = slot_of_[x];
  for (int s = 0; s < int(slots_.size()); ++s) {
    if (s == split) {
      out.slots_.push_back({x, -1});
      out.slots_.push_back({y, -1});
    } else {
      out.slots_.push_back(slots_[s]);
    }
  }
  out.slot_of_.resize(n_);
  for (int s = 0; s < int(out.slots_.size()); ++s) {
    out.slot_of_[out.slots_[s].a] = s;
    if (out.slots_[s].is_pair()) out.slot_of_[out.slots_[s].b] = s;
  }
  return out;
}

std::vector<int> PairedOrder::as_permutation() const {
  std::vector<int> perm;
  perm.reserve(n_);
  for (const Slot& s : slots_) {
    if (s.is_pair()) throw std::logic_error("as_permutation: scaffold is not total");
    perm.push_back(s.a);
  }
  return perm;
}

TotalOrder::TotalOrder(std::vector<int> perm) : perm_(std::move(perm)) {
  pos_.assign(perm_.size(), -1);
  for (int i = 0; i < int(perm_.size()); ++i) {
    if (perm_[i] < 0 || perm_[i] >= int(perm_.size()) || pos_[perm_[i]] >= 0)
      throw std::invalid_argument("TotalOrder: not a permutation");
    pos_[perm_[i]] = i;
  }
}

TotalOrder::TotalOrder(const PairedOrder& p) : TotalOrder(p.as_permutation()) {}

PairedOrder TotalOrder::as_paired() const {
  std::vector<PairedOrder::Slot> slots;
  slots.reserve(perm_.size());
  for (int v : perm_) slots.push_back({v, -1});
  return PairedOrder::from_slots(n(), std::move(slots));
}

namespace {
Network compose_impl(const Network& f, const std::vector<int>& slot_of) {
  const int n = f.n();
  Network out = f;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (slot_of[i] < slot_of[j])
        out.refine(i, j, RelSet(REL_FULL & ~REL_GT));
      else if (slot_of[j] < slot_of[i])
        out.refine(j, i, RelSet(REL_FULL & ~REL_GT));
      // Same slot: pair-mates, mask unchanged. Scaffolds never assert
      // equality, so the =-branch of the definition is unreachable.
    }
  return out;
}
}  // namespace

Network compose_with(const PairedOrder& p, const Network& f) {
  if (p.n() != f.n()) throw std::invalid_argument("compose_with: variable-set mismatch");
  std::vector<int> slot_of(p.n());
  for (int v = 0; v < p.n(); ++v) slot_of[v] = p.slot_of(v);
  return compose_impl(f, slot_of);
}

Network compose_with(const TotalOrder& t, const Network& f) {
  if (t.n() != f.n()) throw std::invalid_argument("compose_with: variable-set mismatch");
  std::vector<int> slot_of(t.n());
  for (int i = 0; i < t.n(); ++i) slot_of[t.perm()[i]] = i;
  return compose_impl(f, slot_of);
}

uint64_t PtopEnumerator::count_for(int n) {
  if (n < 1) throw std::invalid_argument("PtopEnumerator: n must be >= 1");
  uint64_t c = 1;
  for (int m = n; m >= 2; m -= 2) {
    uint64_t choices = uint64_t(m) * (m - 1) / 2;
    if (c > UINT64_MAX / choices) throw std::overflow_error("PTOP count overflows 64 bits");
    c *= choices;
  }
  return c;
}

PtopEnumerator::PtopEnumerator(int n) : n_(n), count_(count_for(n)) {}

PairedOrder PtopEnumerator::scaffold(uint64_t rank) const {
  if (rank >= count_) throw std::out_of_range("PtopEnumerator: rank out of range");
  std::vector<int> remaining(n_);
  for (int v = 0; v < n_; ++v) remaining[v] = v;
  std::vector<PairedOrder::Slot> slots;
  slots.reserve((n_ + 1) / 2);

  // Mixed radix: slot k over m remaining variables has m(m-1)/2 choices,
  // one per unordered pair in lexicographic order.
  uint64_t radix_rest = count_;
  while (int(remaining.size()) >= 2) {
    int m = int(remaining.size());
    uint64_t here = uint64_t(m) * (m - 1) / 2;
    radix_rest /= here;
    uint64_t digit = rank / radix_rest;
    rank %= radix_rest;
    // Decode digit -> lexicographic unordered pair (i, j), i < j.
    int i = 0;
    uint64_t d = digit;
    while (d >= uint64_t(m - 1 - i)) {
      d -= uint64_t(m - 1 - i);
      ++i;
    }
    int j = i + 1 + int(d);
    slots.push_back({remaining[i], remaining[j]});
    remaining.erase(remaining.begin() + j);
    remaining.erase(remaining.begin() + i);
  }
  if (!remaining.empty()) slots.push_back({remaining[0], -1});
  return PairedOrder::from_slots(n_, std::move(slots));
}

uint64_t TotalOrderEnumerator::count_for(int n) {
  if (n < 1) throw std::invalid_argument("TotalOrderEnumerator: n must be >= 1");
  uint64_t c = 1;
  for (int m = 2; m <= n; ++m) {
    if (c > UINT64_MAX / uint64_t(m)) throw std::overflow_error("n! overflows 64 bits");
    c *= uint64_t(m);
  }
  return c;
}

TotalOrderEnumerator::TotalOrderEnumerator(int n) : n_(n), count_(count_for(n)) {}

TotalOrder TotalOrderEnumerator::order(uint64_t rank) const {
  if (rank >= count_) throw std::out_of_range("TotalOrderEnumerator: rank out of range");
  std::vector<int> remaining(n_);
  for (int v = 0; v < n_; ++v) remaining[v] = v;
  std::vector<int> perm;
  perm.reserve(n_);
  uint64_t radix_rest = count_;
  for (int m = n_; m >= 1; --m) {
    radix_rest /= uint64_t(m);
    uint64_t digit = rank / radix_rest;
    rank %= radix_rest;
    perm.push_back(remaining[digit]);
    remaining.erase(remaining.begin() + long(digit));
  }
  return TotalOrder(std::move(perm));
}

namespace {
void topo_rec(const std::vector<std::vector<int>>& preds, std::vector<uint8_t>& placed,
              std::vector<int>& order, int n, const std::function<bool(const TotalOrder&)>& visit,
              bool& keep_going) {
  if (!keep_going) return;
  if (int(order.size()) == n) {
    keep_going = visit(TotalOrder(order));
    return;
  }
  for (int v = 0; v < n && keep_going; ++v) {
    if (placed[v]) continue;
    bool ready = true;
    for (int p : preds[v])
      if (!placed[p]) {
        ready = false;
        break;
      }
    if (!ready) continue;
    placed[v] = 1;
    order.push_back(v);
    topo_rec(preds, placed, order, n, visit, keep_going);
    order.pop_back();
    placed[v] = 0;
  }
}
}  // namespace

void topological_sorts(const Network& atomic,
                       const std::function<bool(const TotalOrder&)>& visit) {
  if (!realizable(atomic))
    throw std::logic_error("topological_sorts: network is not realizable");
  const int n = atomic.n();
  std::vector<std::vector<int>> preds(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && atomic.rel(i, j).single() == Atom::LT) preds[j].push_back(i);
  std::vector<uint8_t> placed(n, 0);
  std::vector<int> order;
  bool keep_going = true;
  topo_rec(preds, placed, order, n, visit, keep_going);
}

}  // namespace pot
