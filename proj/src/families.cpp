#include <queue>
#include <random>
#include <string>

#include "coronalab/errors.hpp"
#include "coronalab/graph.hpp"

namespace coronalab {
namespace {

// std::mt19937_64 has a fully specified output sequence; the distributions in
// <random> do not, so draws are reduced by hand.
std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
  return std::size_t(rng() % bound);
}

double draw_unit(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

Graph pruefer_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 1) return Graph(n);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = Vertex(draw_below(rng, n));

  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(Vertex(v));

  std::vector<Edge> edges;
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return Graph::from_edges(n, edges);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError("generate: " + what);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  const std::size_t a = spec.a;
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::Path:
      require(a >= 1, "path needs at least 1 vertex");
      for (std::size_t i = 0; i + 1 < a; ++i) edges.emplace_back(Vertex(i), Vertex(i + 1));
      return Graph::from_edges(a, edges);
    case Family::Cycle:
      require(a >= 3, "cycle needs at least 3 vertices, got " + std::to_string(a));
      for (std::size_t i = 0; i < a; ++i) edges.emplace_back(Vertex(i), Vertex((i + 1) % a));
      return Graph::from_edges(a, edges);
    case Family::Complete:
      require(a >= 1, "complete graph needs at least 1 vertex");
      for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = u + 1; v < a; ++v) edges.emplace_back(Vertex(u), Vertex(v));
      return Graph::from_edges(a, edges);
    case Family::Empty:
      require(a >= 1, "empty graph needs at least 1 vertex");
      return Graph(a);
    case Family::Star:
      require(a >= 1, "star needs at least 1 leaf");
      for (std::size_t v = 1; v <= a; ++v) edges.emplace_back(0, Vertex(v));
      return Graph::from_edges(a + 1, edges);
    case Family::CompleteBipartite:
      require(a >= 1 && spec.b >= 1, "complete bipartite parts must be non-empty");
      for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < spec.b; ++v) edges.emplace_back(Vertex(u), Vertex(a + v));
      return Graph::from_edges(a + spec.b, edges);
    case Family::RandomTree:
      require(a >= 1, "random tree needs at least 1 vertex");
      return pruefer_tree(a, spec.seed);
    case Family::RandomGnp: {
      require(a >= 1, "random graph needs at least 1 vertex");
      require(spec.p >= 0.0 && spec.p <= 1.0, "edge probability must lie in [0, 1]");
      std::mt19937_64 rng(spec.seed);
      for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = u + 1; v < a; ++v)
          if (draw_unit(rng) < spec.p) edges.emplace_back(Vertex(u), Vertex(v));
      return Graph::from_edges(a, edges);
    }
  }
  throw PreconditionError("generate: unknown family");
}

std::string family_name(const FamilySpec& spec) {
  const std::string a = std::to_string(spec.a);
  switch (spec.family) {
    case Family::Path: return "P" + a;
    case Family::Cycle: return "C" + a;
    case Family::Complete: return "K" + a;
    case Family::Empty: return "N" + a;
    case Family::Star: return "K1," + a;
    case Family::CompleteBipartite: return "K" + a + "," + std::to_string(spec.b);
    case Family::RandomTree: return "T" + a + "#" + std::to_string(spec.seed);
    case Family::RandomGnp: return "G" + a + "#" + std::to_string(spec.seed);
  }
  return "?";
}

Family parse_family(const std::string& tag) {
  if (tag == "path") return Family::Path;
  if (tag == "cycle") return Family::Cycle;
  if (tag == "complete") return Family::Complete;
  if (tag == "empty") return Family::Empty;
  if (tag == "star") return Family::Star;
  if (tag == "complete-bipartite") return Family::CompleteBipartite;
  if (tag == "random-tree") return Family::RandomTree;
  if (tag == "random-gnp") return Family::RandomGnp;
  throw PreconditionError("unknown family tag '" + tag + "'");
}

}  // namespace coronalab
