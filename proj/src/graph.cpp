#include "draag/graph.hpp"

#include <algorithm>
#include <bit>

namespace draag {

namespace {

VertexSet bit(int v) { return VertexSet{1} << (v - 1); }

void extend_cliques(const Graph& g, VertexSet candidates, int size, std::vector<std::int64_t>& counts) {
  // Every clique is reached once: candidates only contain vertices larger than
  // the last one added.
  while (candidates != 0) {
    const int v = std::countr_zero(candidates) + 1;
    candidates &= candidates - 1;
    if (static_cast<int>(counts.size()) <= size + 1) counts.push_back(0);
    ++counts[static_cast<std::size_t>(size + 1)];
    const VertexSet later = candidates & g.neighbours(v);
    extend_cliques(g, later, size + 1, counts);
  }
}

}  // namespace

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw GraphError("vertex count must lie in 0.." + std::to_string(kMaxVertices));
  adjacency_.assign(static_cast<std::size_t>(vertex_count), 0);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (u < 1 || v < 1 || u > vertex_count || v > vertex_count)
      throw GraphError(where + ": endpoint out of range 1.." + std::to_string(vertex_count));
    if (u == v) throw GraphError(where + ": self-loop at vertex " + std::to_string(u));
    connect(u, v);
  }
}

void Graph::connect(int u, int v) {
  adjacency_[static_cast<std::size_t>(u - 1)] |= bit(v);
  adjacency_[static_cast<std::size_t>(v - 1)] |= bit(u);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.connect(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.connect(v, v + 1);
  if (n >= 3) g.connect(n, 1);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.connect(v, v + 1);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adjacency_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(neighbours(v)); }

VertexSet Graph::all_vertices() const {
  return vertex_count_ == 64 ? ~VertexSet{0} : (VertexSet{1} << vertex_count_) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= vertex_count_; ++u)
    for (int v = u + 1; v <= vertex_count_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(VertexSet vertices) const {
  const auto labels = to_vertex_list(vertices);
  Graph sub(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (adjacent(labels[i], labels[j])) sub.connect(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return sub;
}

Graph Graph::relabelled(std::span<const int> perm) const {
  Graph out(vertex_count_);
  for (const auto& [u, v] : edges())
    out.connect(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
  return out;
}

std::vector<int> to_vertex_list(VertexSet set) {
  std::vector<int> out;
  while (set != 0) {
    out.push_back(std::countr_zero(set) + 1);
    set &= set - 1;
  }
  return out;
}

CliquePolynomial clique_polynomial(const Graph& g) {
  std::vector<std::int64_t> counts{1};
  extend_cliques(g, g.all_vertices(), 0, counts);
  return CliquePolynomial{std::move(counts)};
}

VertexSet dominating_clique(const Graph& g) {
  VertexSet out = 0;
  const VertexSet all = g.all_vertices();
  for (int v = 1; v <= g.vertex_count(); ++v)
    if ((g.neighbours(v) | bit(v)) == all) out |= bit(v);
  return out;
}

ComponentSplit components(const Graph& g) {
  ComponentSplit split;
  VertexSet unseen = g.all_vertices();
  while (unseen != 0) {
    VertexSet part = unseen & (~unseen + 1);
    VertexSet frontier = part;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier) + 1;
      frontier &= frontier - 1;
      const VertexSet fresh = g.neighbours(v) & ~part;
      part |= fresh;
      frontier |= fresh;
    }
    unseen &= ~part;
    Component c{g.induced(part), to_vertex_list(part)};
    if (c.graph.vertex_count() >= 2)
      ++split.nontrivial;
    else
      ++split.isolated;
    split.components.push_back(std::move(c));
  }
  return split;
}

bool is_connected(const Graph& g) { return components(g).components.size() <= 1; }

Graph compose(std::span<const Graph> parts, ComposeMode mode) {
  int total = 0;
  for (const auto& p : parts) total += p.vertex_count();
  std::vector<Edge> edges;
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [u, v] : parts[i].edges()) edges.emplace_back(u + offset, v + offset);
    if (mode == ComposeMode::join) {
      int later = offset + parts[i].vertex_count();
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        for (int u = 1; u <= parts[i].vertex_count(); ++u)
          for (int v = 1; v <= parts[j].vertex_count(); ++v) edges.emplace_back(u + offset, v + later);
        later += parts[j].vertex_count();
      }
    }
    offset += parts[i].vertex_count();
  }
  return Graph(total, edges);
}

Graph join(const Graph& a, const Graph& b) {
  const std::array<Graph, 2> parts{a, b};
  return compose(parts, ComposeMode::join);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::array<Graph, 2> parts{a, b};
  return compose(parts, ComposeMode::disjoint_union);
}

bool induces_pattern(const Graph& g, VertexSet quad, Pattern pattern) {
  std::array<int, 4> degrees{};
  int edges = 0;
  const auto vs = to_vertex_list(quad);
  for (std::size_t i = 0; i < 4; ++i) {
    degrees[i] = std::popcount(g.neighbours(vs[i]) & quad);
    edges += degrees[i];
  }
  edges /= 2;
  std::sort(degrees.begin(), degrees.end());
  if (pattern == Pattern::c4) return edges == 4 && degrees == std::array<int, 4>{2, 2, 2, 2};
  // Three edges with degrees (1,1,2,2) is a path; a triangle plus an isolated
  // vertex or a claw has a different degree sequence.
  return edges == 3 && degrees == std::array<int, 4>{1, 1, 2, 2};
}

PatternSearch pattern_free(const Graph& g, Pattern pattern) {
  const int n = g.vertex_count();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const VertexSet quad = bit(a) | bit(b) | bit(c) | bit(d);
          if (induces_pattern(g, quad, pattern)) return PatternSearch{false, {a, b, c, d}};
        }
  return PatternSearch{};
}

}  // namespace draag
