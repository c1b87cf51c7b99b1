#include "coronalab/graph.hpp"

#include <algorithm>
#include <string>

#include "coronalab/errors.hpp"

namespace coronalab {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

void Graph::link(Vertex u, Vertex v) {
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  std::size_t index = 0;
  for (auto [u, v] : edges) {
    ++index;
    const std::string pair =
        "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
    if (u < 0 || v < 0 || std::size_t(u) >= n || std::size_t(v) >= n)
      throw ParseError(0, "edge " + std::to_string(index) + " " + pair +
                              " has a vertex id outside [0, " + std::to_string(n) + ")");
    if (u == v)
      throw ParseError(0, "edge " + std::to_string(index) + " " + pair + " is a self-loop");
    g.link(u, v);
  }
  return g;
}

std::size_t Graph::min_degree() const {
  std::size_t best = order() == 0 ? 0 : adj_[0].count();
  for (const auto& row : adj_) best = std::min(best, row.count());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adj_) best = std::max(best, row.count());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < order(); ++u) {
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
      out.emplace_back(Vertex(u), Vertex(v));
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> index(g.order(), -1);
  Vertex next = 0;
  for (auto v = keep.find_first(); v != VertexSet::npos; v = keep.find_next(v))
    index[v] = next++;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return Graph::from_edges(std::size_t(next), edges);
}

// ---------------------------------------------------------------------------

CoronaVertex CoronaLabeling::label(Vertex v) const {
  if (std::size_t(v) < n1_) return {CoronaVertex::Kind::Center, v, -1};
  const std::size_t offset = std::size_t(v) - n1_;
  return {CoronaVertex::Kind::Copy, int(offset / n2_), int(offset % n2_)};
}

VertexSet CoronaLabeling::copy_set(int i) const {
  VertexSet s(order());
  for (std::size_t j = 0; j < n2_; ++j) s.set(copy_vertex(i, int(j)));
  return s;
}

VertexSet CoronaLabeling::centers() const {
  VertexSet s(order());
  for (std::size_t i = 0; i < n1_; ++i) s.set(i);
  return s;
}

CoronaProduct corona(const Graph& g, const Graph& h) {
  const std::size_t n1 = g.order();
  const std::size_t n2 = h.order();
  if (n1 == 0) throw PreconditionError("corona: G must have at least one vertex");

  CoronaLabeling labeling(n1, n2);
  std::vector<Edge> edges = g.edges();
  const auto h_edges = h.edges();
  edges.reserve(edges.size() + n1 * (h_edges.size() + n2));
  for (std::size_t i = 0; i < n1; ++i) {
    for (auto [a, b] : h_edges)
      edges.emplace_back(labeling.copy_vertex(int(i), a), labeling.copy_vertex(int(i), b));
    for (std::size_t j = 0; j < n2; ++j)
      edges.emplace_back(labeling.center(int(i)), labeling.copy_vertex(int(i), int(j)));
  }
  return {Graph::from_edges(labeling.order(), edges), labeling};
}

}  // namespace coronalab
