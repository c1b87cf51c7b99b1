#include <algorithm>
#include <cmath>

#include "coronalab/domination.hpp"
#include "coronalab/masks.hpp"

namespace coronalab {
namespace {

// Minimum weight of 2|S| + |V \ N[S]| over S. Every optimum is visited so the
// largest |S| among them (b2max) is exact.
class RomanSearch {
 public:
  explicit RomanSearch(const Graph& g)
      : n_(int(g.order())), full_(full_mask(g.order())), closed_(closed_neighbor_masks(g)) {}

  RomanResult run() {
    best_ = n_ + 1;
    search(0, 0, 0);
    RomanResult r;
    r.value = best_;
    r.b2max = best_twos_;
    r.nodes = nodes_;
    r.witness.values.assign(std::size_t(n_), 1);
    Mask covered = 0;
    for_each_bit(best_set_, [&](Vertex v) { covered |= closed_[v]; });
    for_each_bit(covered, [&](Vertex v) { r.witness.values[v] = 0; });
    for_each_bit(best_set_, [&](Vertex v) { r.witness.values[v] = 2; });
    return r;
  }

 private:
  // Cost still to pay for the uncovered vertices.
  int lower_bound(Mask uncovered, Mask avail) const {
    const int u = popcount(uncovered);
    if (u == 0) return 0;
    int cover = 0;
    double frac = 0.0;
    for_each_bit(avail, [&](Vertex w) { cover = std::max(cover, popcount(closed_[w] & uncovered)); });
    // Charge each uncovered vertex its cheapest share of a 2 that covers it.
    for_each_bit(uncovered, [&](Vertex x) {
      double share = 1.0;
      for_each_bit(closed_[x] & avail, [&](Vertex w) {
        share = std::min(share, 2.0 / popcount(closed_[w] & uncovered));
      });
      frac += share;
    });
    int simple = u;
    if (cover >= 2) {
      for (int x : {u / cover, (u + cover - 1) / cover})
        simple = std::min(simple, 2 * x + std::max(0, u - x * cover));
    }
    return std::max(simple, int(std::ceil(frac - 1e-9)));
  }

  void search(Mask twos, Mask ones, Mask excluded) {
    ++nodes_;
    Mask covered = ones;
    for_each_bit(twos, [&](Vertex v) { covered |= closed_[v]; });
    const Mask uncovered = full_ & ~covered;
    const int weight = 2 * popcount(twos) + popcount(ones);
    if (!uncovered) {
      if (weight < best_ || (weight == best_ && popcount(twos) > best_twos_)) {
        best_ = weight;
        best_twos_ = popcount(twos);
        best_set_ = twos;
      }
      return;
    }
    const int bound = weight + lower_bound(uncovered, full_ & ~twos & ~excluded);
    if (bound > best_) return;
    if (bound == best_ && popcount(twos) + (best_ - weight) / 2 <= best_twos_) return;

    const Vertex v = lowest(uncovered);
    Mask ex = excluded;
    for_each_bit(closed_[v] & ~excluded, [&](Vertex c) {
      search(twos | bit(c), ones, ex);
      ex |= bit(c);
    });
    // v labelled 1: nothing in N[v] may be labelled 2.
    search(twos, ones | bit(v), ex | closed_[v]);
  }

  int n_;
  Mask full_;
  std::vector<Mask> closed_;
  int best_ = 0;
  int best_twos_ = -1;
  Mask best_set_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

RomanResult roman_domination(const Graph& g, const Caps& caps) {
  require_cap("roman_domination", g.order(), caps.roman);
  require_mask_order("roman_domination", g.order());
  if (g.order() == 0) return {};
  return RomanSearch(g).run();
}

}  // namespace coronalab
