#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace oracle {
namespace {

int order(const Graph& g) { return int(g.order()); }

std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const int n = order(g);
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) a[u][v] = u != v && g.adjacent(u, v);
  return a;
}

Set members(std::uint32_t mask, int n) {
  Set s;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) s.push_back(v);
  return s;
}

bool in(std::uint32_t mask, int v) { return mask >> v & 1; }

// Best feasible subset: least size (or greatest with `maximize`), then the
// lexicographically smallest member list.
SetValue best_subset(int n, const std::function<bool(std::uint32_t)>& feasible,
                     bool maximize = false) {
  std::optional<SetValue> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!feasible(mask)) continue;
    SetValue cand{int(members(mask, n).size()), members(mask, n)};
    const bool better =
        !best || (maximize ? cand.value > best->value : cand.value < best->value) ||
        (cand.value == best->value && cand.set < best->set);
    if (better) best = cand;
  }
  return best.value_or(SetValue{});
}

bool dominating(const std::vector<std::vector<bool>>& a, std::uint32_t s, int n) {
  for (int v = 0; v < n; ++v) {
    if (in(s, v)) continue;
    bool hit = false;
    for (int u = 0; u < n; ++u) hit = hit || (in(s, u) && a[v][u]);
    if (!hit) return false;
  }
  return true;
}

bool independent(const std::vector<std::vector<bool>>& a, std::uint32_t s, int n) {
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (in(s, u) && in(s, v) && a[u][v]) return false;
  return true;
}

bool resolving(const std::vector<std::vector<int>>& d, std::uint32_t s, int n) {
  std::set<std::vector<int>> codes;
  for (int v = 0; v < n; ++v) {
    std::vector<int> code;
    for (int w = 0; w < n; ++w)
      if (in(s, w)) code.push_back(d[v][w]);
    if (!codes.insert(code).second) return false;
  }
  return true;
}

bool locating_dominating(const std::vector<std::vector<bool>>& a, std::uint32_t s, int n) {
  if (!dominating(a, s, n)) return false;
  std::set<std::uint32_t> traces;
  for (int v = 0; v < n; ++v) {
    if (in(s, v)) continue;
    std::uint32_t t = 0;
    for (int u = 0; u < n; ++u)
      if (in(s, u) && a[v][u]) t |= 1u << u;
    if (!traces.insert(t).second) return false;
  }
  return true;
}

// Calls visit(class_of) for every set partition of n elements.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cls(n, 0);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (v == n) {
      visit(cls);
      return;
    }
    for (int c = 0; c <= used; ++c) {
      cls[v] = c;
      rec(v + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) {
    visit(cls);
    return;
  }
  rec(0, 0);
}

std::vector<std::uint32_t> class_masks(const std::vector<int>& cls) {
  std::vector<std::uint32_t> masks;
  for (int v = 0; v < int(cls.size()); ++v) {
    if (cls[v] >= int(masks.size())) masks.resize(cls[v] + 1, 0);
    masks[cls[v]] |= 1u << v;
  }
  return masks;
}

}  // namespace

std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w)
        if (a[v][w] && d[s][w] < 0) {
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
    }
  }
  return d;
}

int distance_k_chromatic(const Graph& g, std::size_t k) {
  const int n = order(g);
  if (n == 0) return 0;
  const auto d = oracle::distances(g);
  std::vector<int> color(n, -1);
  for (int c = 1; c <= n; ++c) {
    std::function<bool(int)> rec = [&](int v) {
      if (v == n) return true;
      for (int x = 0; x < c; ++x) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          ok = !(color[u] == x && d[u][v] > 0 && d[u][v] <= int(k));
        if (!ok) continue;
        color[v] = x;
        if (rec(v + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return c;
  }
  return n;
}

SetValue domination(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  return best_subset(n, [&](std::uint32_t s) { return dominating(a, s, n); });
}

SetValue connected_domination(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  return best_subset(n, [&](std::uint32_t s) {
    if (s == 0 || !dominating(a, s, n)) return false;
    // flood fill inside s
    std::uint32_t seen = s & (~s + 1);
    for (bool grew = true; grew;) {
      grew = false;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (in(seen, u) && in(s, v) && !in(seen, v) && a[u][v]) {
            seen |= 1u << v;
            grew = true;
          }
    }
    return seen == s;
  });
}

SetValue independence(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  return best_subset(n, [&](std::uint32_t s) { return independent(a, s, n); }, true);
}

SetValue independent_domination(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  return best_subset(
      n, [&](std::uint32_t s) { return independent(a, s, n) && dominating(a, s, n); });
}

SetValue k_domination(const Graph& g, std::size_t k) {
  const int n = order(g);
  const auto a = adjacency(g);
  return best_subset(n, [&](std::uint32_t s) {
    for (int v = 0; v < n; ++v) {
      if (in(s, v)) continue;
      std::size_t hits = 0;
      for (int u = 0; u < n; ++u) hits += in(s, u) && a[v][u];
      if (hits < k) return false;
    }
    return true;
  });
}

SetValue distance_k_domination(const Graph& g, std::size_t k) {
  const int n = order(g);
  const auto d = oracle::distances(g);
  return best_subset(n, [&](std::uint32_t s) {
    for (int v = 0; v < n; ++v) {
      bool near = false;
      for (int u = 0; u < n; ++u) near = near || (in(s, u) && d[v][u] >= 0 && d[v][u] <= int(k));
      if (!near) return false;
    }
    return true;
  });
}

SetValue metric_dimension(const Graph& g) {
  const int n = order(g);
  const auto d = oracle::distances(g);
  return best_subset(n, [&](std::uint32_t s) { return resolving(d, s, n); });
}

SetValue resolving_domination(const Graph& g) {
  const int n = order(g);
  const auto d = oracle::distances(g);
  const auto a = adjacency(g);
  return best_subset(
      n, [&](std::uint32_t s) { return resolving(d, s, n) && dominating(a, s, n); });
}

SetValue locating_domination(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  return best_subset(n, [&](std::uint32_t s) { return locating_dominating(a, s, n); });
}

std::vector<Set> minimum_locating_dominating_sets(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  const int best = locating_domination(g).value;
  std::vector<Set> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (int(members(s, n).size()) == best && locating_dominating(a, s, n))
      out.push_back(members(s, n));
  std::sort(out.begin(), out.end());
  return out;
}

RomanValue roman(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  std::vector<int> f(n, 0);
  RomanValue best{2 * n + 1, 0};
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      for (int x = 0; x < n; ++x) {
        if (f[x] != 0) continue;
        bool guarded = false;
        for (int u = 0; u < n; ++u) guarded = guarded || (a[x][u] && f[u] == 2);
        if (!guarded) return;
      }
      int weight = 0, twos = 0;
      for (int x : f) {
        weight += x;
        twos += x == 2;
      }
      if (weight < best.value || (weight == best.value && twos > best.b2max))
        best = {weight, twos};
      return;
    }
    for (int label = 0; label <= 2; ++label) {
      f[v] = label;
      rec(v + 1);
    }
  };
  rec(0);
  return n == 0 ? RomanValue{} : best;
}

int domatic(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  int best = 0;
  for_each_partition(n, [&](const std::vector<int>& cls) {
    const auto masks = class_masks(cls);
    for (auto m : masks)
      if (!dominating(a, m, n)) return;
    best = std::max(best, int(masks.size()));
  });
  return best;
}

std::optional<int> idomatic(const Graph& g) {
  const int n = order(g);
  const auto a = adjacency(g);
  std::optional<int> best;
  for_each_partition(n, [&](const std::vector<int>& cls) {
    const auto masks = class_masks(cls);
    for (auto m : masks)
      if (!dominating(a, m, n) || !independent(a, m, n)) return;
    best = std::max(best.value_or(0), int(masks.size()));
  });
  return best;
}

}  // namespace oracle
