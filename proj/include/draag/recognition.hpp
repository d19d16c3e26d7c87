#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "draag/graph.hpp"

namespace draag {

/// How a graph in the class is assembled from Delta:
///   base       empty graph (the group Delta)
///   cone       K_u joined with the child's graph (Z_2^u x| child)
///   coproduct  disjoint union of child graphs plus (children - 1) isolated vertices
struct DecompositionTree {
  enum class Kind { base, cone, coproduct };

  Kind kind = Kind::base;
  int cone_size = 0;
  std::vector<DecompositionTree> children;

  static DecompositionTree base() { return {}; }
  static DecompositionTree cone(int u, DecompositionTree child);
  static DecompositionTree coproduct(std::vector<DecompositionTree> children);

  Graph reconstruct() const;
  bool operator==(const DecompositionTree&) const = default;
};

struct Rejection {
  std::string reason;
  std::vector<int> witness;  // original vertex labels
};

struct Recognition {
  std::optional<DecompositionTree> tree;
  std::optional<Rejection> rejection;

  bool accepted() const { return tree.has_value(); }
};

inline const std::string kNoDominatingVertex = "connected, no dominating vertex";
inline const std::string kResidueConnected = "residue still connected";
inline const std::string kIsolatedDeficit =
    "isolated-vertex deficit: coproduct closure adds one isolated vertex per extra factor";

/// Decides membership by peeling dominating cliques and splitting components.
Recognition recognize(const Graph& g);

class CanonicalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxCanonicalVertices = 10;

/// Canonical labelling: minimum upper-triangle adjacency code over all
/// relabellings that order vertices by (degree, sorted neighbour degrees).
struct CanonicalForm {
  int vertex_count = 0;
  // Pairs (i<j) listed column-major; the first pair is the most significant bit.
  std::uint64_t code = 0;
  std::vector<int> labelling;  // labelling[v-1] = canonical label of v

  auto operator<=>(const CanonicalForm& other) const {
    if (auto c = vertex_count <=> other.vertex_count; c != 0) return c;
    return code <=> other.code;
  }
  bool operator==(const CanonicalForm& other) const {
    return vertex_count == other.vertex_count && code == other.code;
  }
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
Graph graph_from_code(int vertex_count, std::uint64_t code);

inline constexpr int kMaxEnumerationVertices = 8;

/// Least fixed point of {empty} under cones K_u * and coproducts, up to n_max
/// vertices. Canonical graphs sorted by (vertex count, code).
std::vector<Graph> enumerate_closure(int n_max);

/// All isomorphism classes of graphs on exactly n vertices (canonical graphs).
std::vector<Graph> all_graphs(int n);

}  // namespace draag
