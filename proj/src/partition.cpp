#include <algorithm>

#include "coronalab/coloring.hpp"
#include "coronalab/domination.hpp"
#include "coronalab/masks.hpp"

namespace coronalab {
namespace {

// Assigns vertices in id order to k classes so that every closed
// neighborhood meets every class. Classes are opened in order, which removes
// the k! relabellings. With `independent` set, classes are also independent.
class ClassSearch {
 public:
  ClassSearch(const Graph& g, bool independent)
      : n_(int(g.order())), independent_(independent), closed_(closed_neighbor_masks(g)) {}

  bool feasible(int k) {
    k_ = k;
    cls_.assign(std::size_t(n_), -1);
    count_.assign(std::size_t(n_) * std::size_t(k), 0);
    seen_.assign(std::size_t(n_), 0);
    rem_.assign(std::size_t(n_), 0);
    for (int v = 0; v < n_; ++v) rem_[v] = popcount(closed_[v]);
    return assign(0, 0);
  }

  std::vector<std::vector<Vertex>> classes() const {
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(k_));
    for (int v = 0; v < n_; ++v) out[cls_[v]].push_back(v);
    return out;
  }

  std::uint64_t nodes = 0;

 private:
  void place(Vertex v, int c) {
    cls_[v] = c;
    for_each_bit(closed_[v], [&](Vertex u) {
      if (count_[std::size_t(u) * k_ + c]++ == 0) seen_[u] |= bit(c);
      --rem_[u];
    });
  }

  void unplace(Vertex v) {
    const int c = cls_[v];
    cls_[v] = -1;
    for_each_bit(closed_[v], [&](Vertex u) {
      if (--count_[std::size_t(u) * k_ + c] == 0) seen_[u] &= ~bit(c);
      ++rem_[u];
    });
  }

  bool assign(Vertex v, int used) {
    ++nodes;
    if (v == n_) return true;
    for (int c = 0; c <= std::min(used, k_ - 1); ++c) {
      // seen_[v] holds the classes of v's assigned neighbors.
      if (independent_ && (seen_[v] & bit(c))) continue;
      place(v, c);
      bool ok = true;
      for_each_bit(closed_[v], [&](Vertex u) {
        ok = ok && popcount(seen_[u]) + rem_[u] >= k_;
      });
      if (ok && assign(v + 1, std::max(used, c + 1))) return true;
      unplace(v);
    }
    return false;
  }

  int n_;
  bool independent_;
  std::vector<Mask> closed_;
  int k_ = 0;
  std::vector<int> cls_;
  std::vector<int> count_;
  std::vector<Mask> seen_;
  std::vector<int> rem_;
};

void require_partition_cap(const char* solver, const Graph& g, const Caps& caps) {
  require_cap(solver, g.order(), caps.partition);
  require_mask_order(solver, g.order());
}

}  // namespace

PartitionResult domatic_number(const Graph& g, const Caps& caps) {
  require_partition_cap("domatic_number", g, caps);
  PartitionResult r;
  r.parameter = Parameter::Domatic;
  if (g.order() == 0) return r;
  ClassSearch s(g, false);
  for (int k = int(g.min_degree()) + 1; k >= 1; --k) {
    if (s.feasible(k)) {
      r.value = k;
      r.classes = s.classes();
      break;
    }
  }
  r.nodes = s.nodes;
  return r;
}

std::optional<PartitionResult> idomatic_number(const Graph& g, const Caps& caps) {
  require_partition_cap("idomatic_number", g, caps);
  PartitionResult r;
  r.parameter = Parameter::Idomatic;
  if (g.order() == 0) return r;
  ClassSearch s(g, true);
  for (int k = int(g.min_degree()) + 1; k >= 1; --k) {
    if (s.feasible(k)) {
      r.value = k;
      r.classes = s.classes();
      r.nodes = s.nodes;
      return r;
    }
  }
  return std::nullopt;
}

bool independent_partition_exists(const Graph& g, std::size_t t, const Caps& caps) {
  if (t < 1) throw PreconditionError("independent_partition_exists: t must be at least 1");
  return std::size_t(chromatic_number(g, caps).value) <= t;
}

}  // namespace coronalab
