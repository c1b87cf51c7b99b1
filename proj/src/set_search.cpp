#include "set_search.hpp"

namespace coronalab::detail {

HittingSet::HittingSet(std::size_t n, std::vector<Mask> family) : n_(n) {
  // Small sets first: they drive branching and give a tighter packing bound.
  std::sort(family.begin(), family.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // A superset is hit whenever its subset is.
  for (Mask s : family) {
    const bool redundant = std::any_of(family_.begin(), family_.end(),
                                       [s](Mask t) { return (t & s) == t; });
    if (!redundant) family_.push_back(s);
  }
}

bool HittingSet::search(Mask chosen, Mask excluded, int budget, std::vector<Mask>* all) {
  ++nodes_;
  Mask pick = 0;
  int pick_size = 65;
  Mask used = 0;
  int packing = 0;
  for (Mask s : family_) {
    if (s & chosen) continue;
    const Mask avail = s & ~excluded;
    const int c = popcount(avail);
    if (c == 0) return false;
    if (c < pick_size) {
      pick = avail;
      pick_size = c;
    }
    if (!(avail & used)) {
      used |= avail;
      ++packing;
    }
  }
  if (!pick) {
    if (!all) return true;
    all->push_back(chosen);
    return false;
  }
  if (popcount(chosen) + packing > budget) return false;
  Mask ex = excluded;
  bool found = false;
  for_each_bit(pick, [&](Vertex c) {
    if (found) return;
    if (search(chosen | bit(c), ex, budget, all)) found = true;
    ex |= bit(c);
  });
  return found;
}

bool HittingSet::feasible(Mask in, Mask out, int budget) {
  if (in & out) return false;
  if (popcount(in) > budget) return false;
  return search(in, out, budget, nullptr);
}

int HittingSet::minimum() {
  for (int b = 0; b <= int(n_); ++b)
    if (feasible(0, 0, b)) return b;
  throw Error("hitting set: family contains an empty set");
}

Mask HittingSet::first_minimum(int size) {
  return lex_first(n_, size, [&](Mask in, Mask out) { return feasible(in, out, size); });
}

std::vector<Mask> HittingSet::all_minimum(int size) {
  std::vector<Mask> all;
  search(0, 0, size, &all);
  std::sort(all.begin(), all.end(), [](Mask a, Mask b) {
    return to_vertices(a) < to_vertices(b);
  });
  return all;
}

}  // namespace coronalab::detail
