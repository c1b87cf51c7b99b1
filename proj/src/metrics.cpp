#include <algorithm>
#include <vector>

#include "coronalab/graph.hpp"

namespace coronalab {

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  std::vector<Distance> dist(g.order(), kInfinite);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const auto& nbrs = g.neighbors(u);
    for (auto w = nbrs.find_first(); w != VertexSet::npos; w = nbrs.find_next(w)) {
      if (dist[w] != kInfinite) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(Vertex(w));
    }
  }
  return dist;
}

DistanceMatrix distances(const Graph& g) {
  const auto n = static_cast<std::ptrdiff_t>(g.order());
  DistanceMatrix d(g.order());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, Vertex(s));
    std::copy(row.begin(), row.end(), d.row(Vertex(s)).begin());
  }
  return d;
}

DistanceMatrix reference::distances(const Graph& g) {
  DistanceMatrix d(g.order());
  for (std::size_t s = 0; s < g.order(); ++s) {
    const auto row = bfs_distances(g, Vertex(s));
    std::copy(row.begin(), row.end(), d.row(Vertex(s)).begin());
  }
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](Distance x) { return x == kInfinite; });
}

Distance eccentricity(const Graph& g, Vertex v) {
  const auto d = bfs_distances(g, v);
  return *std::max_element(d.begin(), d.end());
}

Distance diameter(const Graph& g) {
  Distance best = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    best = std::max(best, eccentricity(g, Vertex(v)));
    if (best == kInfinite) break;
  }
  return best;
}

Distance girth(const Graph& g) {
  // A BFS from every root sees a shortest cycle through that root exactly;
  // minimising over roots gives the girth.
  Distance best = kInfinite;
  std::vector<Distance> dist(g.order());
  std::vector<Vertex> parent(g.order());
  std::vector<Vertex> queue;
  for (std::size_t root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), kInfinite);
    queue.assign(1, Vertex(root));
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (best != kInfinite && 2 * dist[u] + 1 >= best) break;
      const auto& nbrs = g.neighbors(u);
      for (auto w = nbrs.find_first(); w != VertexSet::npos; w = nbrs.find_next(w)) {
        if (dist[w] == kInfinite) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(Vertex(w));
        } else if (Vertex(w) != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

VertexSet ball(const Graph& g, Vertex v, Distance t) {
  const auto d = bfs_distances(g, v);
  VertexSet out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    if (d[u] <= t) out.set(u);
  return out;
}

namespace {

void power_row(const Graph& g, Vertex u, std::size_t k, std::vector<Edge>& out) {
  const auto d = bfs_distances(g, u);
  for (std::size_t v = std::size_t(u) + 1; v < g.order(); ++v)
    if (d[v] != kInfinite && d[v] <= k) out.emplace_back(u, Vertex(v));
}

}  // namespace

Graph power(const Graph& g, std::size_t k) {
  const auto n = static_cast<std::ptrdiff_t>(g.order());
  std::vector<std::vector<Edge>> rows(g.order());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t u = 0; u < n; ++u) power_row(g, Vertex(u), k, rows[u]);
  std::vector<Edge> edges;
  for (const auto& r : rows) edges.insert(edges.end(), r.begin(), r.end());
  return Graph::from_edges(g.order(), edges);
}

Graph reference::power(const Graph& g, std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < g.order(); ++u) power_row(g, Vertex(u), k, edges);
  return Graph::from_edges(g.order(), edges);
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

bool is_cycle(const Graph& g) {
  return g.order() >= 3 && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g);
}

}  // namespace coronalab
