#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace coronalab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph: vertex count plus one neighbor bitset per vertex.
/// Adjacency is symmetric, loop-free and has set semantics. Instances are
/// immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph N_n.
  explicit Graph(std::size_t n);

  /// Validating constructor: rejects self-loops and out-of-range ids,
  /// collapses duplicate edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  void link(Vertex u, Vertex v);

  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

/// build_graph with the edge-list contract (see Graph::from_edges).
Graph build_graph(std::size_t n, std::span<const Edge> edges);

/// Subgraph induced by `keep`, relabelled 0..|keep|-1 in increasing id order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// ---------------------------------------------------------------------------
// Instance families

enum class Family {
  Path,               // P_a
  Cycle,              // C_a, a >= 3
  Complete,           // K_a
  Empty,              // N_a
  Star,               // K_{1,a}; center is vertex 0
  CompleteBipartite,  // K_{a,b}; parts 0..a-1 and a..a+b-1
  RandomTree,         // uniform labelled tree on a vertices (Pruefer code)
  RandomGnp,          // G(a, p)
};

struct FamilySpec {
  Family family = Family::Path;
  std::size_t a = 1;
  std::size_t b = 0;
  double p = 0.5;
  std::uint64_t seed = 0;

  static FamilySpec path(std::size_t n) { return {Family::Path, n}; }
  static FamilySpec cycle(std::size_t n) { return {Family::Cycle, n}; }
  static FamilySpec complete(std::size_t n) { return {Family::Complete, n}; }
  static FamilySpec empty(std::size_t n) { return {Family::Empty, n}; }
  static FamilySpec star(std::size_t leaves) { return {Family::Star, leaves}; }
  static FamilySpec complete_bipartite(std::size_t s, std::size_t t) {
    return {Family::CompleteBipartite, s, t};
  }
  static FamilySpec random_tree(std::size_t n, std::uint64_t seed) {
    return {Family::RandomTree, n, 0, 0.0, seed};
  }
  static FamilySpec random_gnp(std::size_t n, double p, std::uint64_t seed) {
    return {Family::RandomGnp, n, 0, p, seed};
  }
};

/// Deterministic generator; equal specs give identical graphs on every
/// platform. Throws PreconditionError on invalid parameters.
Graph generate(const FamilySpec& spec);

/// Short human-readable name such as "P4", "C6", "K3,3" or "T6#7".
std::string family_name(const FamilySpec& spec);

/// Parses the CLI family tag ("path", "cycle", "complete", "empty", "star",
/// "complete-bipartite", "random-tree", "random-gnp").
Family parse_family(const std::string& tag);

// ---------------------------------------------------------------------------
// Metrics

using Distance = std::uint32_t;
inline constexpr Distance kInfinite = std::numeric_limits<Distance>::max();

/// All-pairs hop distances, kInfinite between components.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kInfinite) {}

  std::size_t order() const noexcept { return n_; }
  Distance at(Vertex u, Vertex v) const { return d_[std::size_t(u) * n_ + v]; }
  Distance& at(Vertex u, Vertex v) { return d_[std::size_t(u) * n_ + v]; }
  std::span<const Distance> row(Vertex u) const {
    return {d_.data() + std::size_t(u) * n_, n_};
  }
  std::span<Distance> row(Vertex u) { return {d_.data() + std::size_t(u) * n_, n_}; }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> d_;
};

/// BFS distances from one source.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// All-pairs distances; one BFS per source, sources spread over OpenMP threads.
DistanceMatrix distances(const Graph& g);

bool is_connected(const Graph& g);
/// Largest finite distance when connected, kInfinite otherwise.
Distance diameter(const Graph& g);
Distance eccentricity(const Graph& g, Vertex v);
/// Shortest cycle length, kInfinite for forests.
Distance girth(const Graph& g);
/// M_t[v]: every vertex at distance at most t from v.
VertexSet ball(const Graph& g, Vertex v, Distance t);
/// k-th power: u ~ v iff 1 <= d(u, v) <= k. Rows built in parallel.
Graph power(const Graph& g, std::size_t k);

bool is_tree(const Graph& g);
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);

namespace reference {
// Serial kernels kept as the reference for the parallel versions above.
DistanceMatrix distances(const Graph& g);
Graph power(const Graph& g, std::size_t k);
}  // namespace reference

// ---------------------------------------------------------------------------
// Corona product

struct CoronaVertex {
  enum class Kind { Center, Copy };
  Kind kind = Kind::Center;
  int copy = 0;      // center index i, or the copy index i
  int h_vertex = -1; // H-vertex j for Copy, -1 for Center

  bool operator==(const CoronaVertex&) const = default;
};

/// Fixed layout of G⊙H: ids 0..n1-1 are the centers, copy i occupies
/// n1 + i*n2 .. n1 + (i+1)*n2 - 1.
class CoronaLabeling {
 public:
  CoronaLabeling() = default;
  CoronaLabeling(std::size_t n1, std::size_t n2) : n1_(n1), n2_(n2) {}

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  std::size_t order() const noexcept { return n1_ * (1 + n2_); }

  Vertex center(int i) const { return i; }
  Vertex copy_vertex(int i, int j) const {
    return static_cast<Vertex>(n1_ + std::size_t(i) * n2_ + std::size_t(j));
  }
  CoronaVertex label(Vertex v) const;
  /// Vertex set of copy i.
  VertexSet copy_set(int i) const;
  VertexSet centers() const;

 private:
  std::size_t n1_ = 0;
  std::size_t n2_ = 0;
};

struct CoronaProduct {
  Graph graph;
  CoronaLabeling labeling;
};

/// G⊙H. Requires n(G) >= 1; H may be edgeless.
CoronaProduct corona(const Graph& g, const Graph& h);

}  // namespace coronalab
