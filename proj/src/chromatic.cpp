#include <algorithm>
#include <array>
#include <vector>

#include "coronalab/coloring.hpp"
#include "coronalab/masks.hpp"

namespace coronalab {

ColorAssignment canonicalize(const ColorAssignment& a) {
  std::vector<int> relabel;
  ColorAssignment out;
  out.colors.reserve(a.colors.size());
  for (int c : a.colors) {
    if (c >= int(relabel.size())) relabel.resize(std::size_t(c) + 1, -1);
    if (relabel[c] < 0) relabel[c] = out.palette++;
    out.colors.push_back(relabel[c]);
  }
  return out;
}

namespace {

/// Largest clique found by greedy extension from every start vertex.
Mask greedy_clique(const std::vector<Mask>& adj) {
  Mask best = 0;
  for (std::size_t start = 0; start < adj.size(); ++start) {
    Mask clique = bit(Vertex(start));
    Mask cand = adj[start];
    while (cand) {
      Vertex pick = -1;
      int pick_deg = -1;
      for_each_bit(cand, [&](Vertex c) {
        const int d = popcount(adj[c] & cand);
        if (d > pick_deg) {
          pick = c;
          pick_deg = d;
        }
      });
      clique |= bit(pick);
      cand &= adj[pick];
    }
    if (popcount(clique) > popcount(best)) best = clique;
  }
  return best;
}

class DsaturSearch {
 public:
  explicit DsaturSearch(std::vector<Mask> adj)
      : n_(int(adj.size())), adj_(std::move(adj)), color_(n_, -1),
        count_(std::size_t(n_) * kMaskBits, 0), sat_(n_, 0), lower_twins_(n_, 0),
        upper_twins_(n_, 0) {
    // True twins (equal closed neighborhoods) are interchangeable, so only
    // colorings increasing along each twin class are searched.
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if ((adj_[u] | bit(u)) == (adj_[v] | bit(v))) {
          upper_twins_[u] |= bit(v);
          lower_twins_[v] |= bit(u);
        }
  }

  ChromaticResult run() {
    ChromaticResult result;
    if (n_ == 0) return result;

    const Mask clique = greedy_clique(adj_);
    lower_ = popcount(clique);
    int used = 0;
    for_each_bit(clique, [&](Vertex v) { assign(v, used++); });
    uncolored_ = full_mask(std::size_t(n_)) & ~clique;

    // Greedy DSATUR pass for the initial upper bound.
    best_ = n_ + 1;
    greedy(used);
    if (best_ > lower_) search(used);

    result.value = best_;
    result.witness = canonicalize({best_colors_, best_});
    result.nodes = nodes_;
    return result;
  }

 private:
  void assign(Vertex v, int c) {
    color_[v] = c;
    uncolored_ &= ~bit(v);
    for_each_bit(adj_[v], [&](Vertex w) {
      if (count_[std::size_t(w) * kMaskBits + c]++ == 0) ++sat_[w];
    });
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    uncolored_ |= bit(v);
    for_each_bit(adj_[v], [&](Vertex w) {
      if (--count_[std::size_t(w) * kMaskBits + c] == 0) --sat_[w];
    });
  }

  bool free_for(Vertex v, int c) const { return count_[std::size_t(v) * kMaskBits + c] == 0; }

  bool twin_order_ok(Vertex v, int c) const {
    bool ok = true;
    for_each_bit(lower_twins_[v] & ~uncolored_, [&](Vertex w) { ok = ok && color_[w] < c; });
    for_each_bit(upper_twins_[v] & ~uncolored_, [&](Vertex w) { ok = ok && color_[w] > c; });
    return ok;
  }

  // Highest saturation, then most uncolored neighbors, then lowest id.
  Vertex select() const {
    Vertex pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for_each_bit(uncolored_, [&](Vertex v) {
      const int deg = popcount(adj_[v] & uncolored_);
      if (sat_[v] > pick_sat || (sat_[v] == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat_[v];
        pick_deg = deg;
      }
    });
    return pick;
  }

  void greedy(int used) {
    std::vector<Vertex> order;
    while (uncolored_) {
      const Vertex v = select();
      int c = 0;
      while (!free_for(v, c)) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
      order.push_back(v);
    }
    best_ = used;
    best_colors_ = color_;
    for (auto it = order.rbegin(); it != order.rend(); ++it) unassign(*it);
  }

  void search(int used) {
    ++nodes_;
    if (!uncolored_) {
      best_ = used;
      best_colors_ = color_;
      return;
    }
    const Vertex v = select();
    for (int c = 0; c < used; ++c) {
      if (!free_for(v, c) || !twin_order_ok(v, c)) continue;
      assign(v, c);
      search(used);
      unassign(v);
      if (best_ <= lower_ || used >= best_) return;
    }
    if (used + 1 < best_ && twin_order_ok(v, used)) {
      assign(v, used);
      search(used + 1);
      unassign(v);
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> sat_;
  std::vector<Mask> lower_twins_;
  std::vector<Mask> upper_twins_;
  Mask uncolored_ = 0;
  int lower_ = 0;
  int best_ = 0;
  std::vector<int> best_colors_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, const Caps& caps) {
  require_cap("chromatic_number", g.order(), caps.coloring);
  require_mask_order("chromatic_number", g.order());
  return DsaturSearch(neighbor_masks(g)).run();
}

ChromaticResult distance_k_chromatic(const Graph& g, std::size_t k, const Caps& caps) {
  if (k < 1) throw PreconditionError("distance_k_chromatic: k must be at least 1");
  require_cap("distance_k_chromatic", g.order(), caps.coloring);
  auto result = chromatic_number(k == 1 ? g : power(g, k), caps);
  result.k = k;
  return result;
}

bool validate_coloring(const Graph& g, std::size_t k, const ColorAssignment& a) {
  if (a.colors.size() != g.order())
    throw MalformedWitnessError("coloring covers " + std::to_string(a.colors.size()) +
                                " of " + std::to_string(g.order()) + " vertices");
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto d = bfs_distances(g, Vertex(u));
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (d[v] <= k && a.colors[u] == a.colors[v]) return false;
  }
  return true;
}

}  // namespace coronalab
