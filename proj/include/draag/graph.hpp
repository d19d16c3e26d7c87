#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace draag {

/// Raised for structurally invalid graphs (self-loops, endpoints out of range).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, 1-based, stored with first < second.
using Edge = std::pair<int, int>;

/// Bit i set <=> vertex i+1 is in the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Finite simple undirected graph on vertices 1..n. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws GraphError naming the offending edge index for self-loops or
  /// out-of-range endpoints. Duplicate edges collapse.
  Graph(int vertex_count, std::span<const Edge> edges);

  static Graph complete(int n);
  static Graph edgeless(int n) { return Graph(n); }
  static Graph cycle(int n);
  static Graph path(int n);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const;
  bool empty() const { return vertex_count_ == 0; }

  bool adjacent(int u, int v) const { return (adjacency_[u - 1] >> (v - 1)) & 1U; }
  VertexSet neighbours(int v) const { return adjacency_[v - 1]; }
  int degree(int v) const;
  VertexSet all_vertices() const;

  /// Edges sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `vertices`, relabelled 1..k in increasing order.
  Graph induced(VertexSet vertices) const;

  /// Same graph with vertex v renamed to perm[v-1] (perm is a permutation of 1..n).
  Graph relabelled(std::span<const int> perm) const;

  bool operator==(const Graph& other) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<VertexSet> adjacency_;

  void connect(int u, int v);
};

/// c_n = number of complete subgraphs on n vertices; c_0 = 1.
struct CliquePolynomial {
  std::vector<std::int64_t> coefficients{1};

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  std::int64_t operator[](std::size_t n) const { return n < coefficients.size() ? coefficients[n] : 0; }
  bool operator==(const CliquePolynomial&) const = default;
};

CliquePolynomial clique_polynomial(const Graph& g);

/// Vertices adjacent to every other vertex.
VertexSet dominating_clique(const Graph& g);

struct Component {
  Graph graph;
  /// vertex_map[i] = original label of component vertex i+1.
  std::vector<int> vertex_map;
};

struct ComponentSplit {
  std::vector<Component> components;  // ordered by smallest original vertex
  int nontrivial = 0;                 // components with >= 2 vertices
  int isolated = 0;
};

ComponentSplit components(const Graph& g);
bool is_connected(const Graph& g);

enum class ComposeMode { join, disjoint_union };

/// Relabels consecutively in list order; join also inserts all cross edges.
Graph compose(std::span<const Graph> parts, ComposeMode mode);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

enum class Pattern { c4, p4 };

struct PatternSearch {
  bool free = true;
  std::array<int, 4> witness{};  // meaningful only when !free
};

/// Looks for an induced copy of the pattern on four vertices.
PatternSearch pattern_free(const Graph& g, Pattern pattern);

/// True iff the induced subgraph on the 4 vertices of `quad` is the pattern.
bool induces_pattern(const Graph& g, VertexSet quad, Pattern pattern);

std::vector<int> to_vertex_list(VertexSet set);

}  // namespace draag
