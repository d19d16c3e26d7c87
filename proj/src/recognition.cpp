#include "draag/recognition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace draag {

namespace {

std::vector<int> relabel(const std::vector<int>& local, const std::vector<int>& labels) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(labels[static_cast<std::size_t>(v - 1)]);
  return out;
}

std::vector<int> obstruction_witness(const Graph& g) {
  for (auto pattern : {Pattern::p4, Pattern::c4}) {
    const auto found = pattern_free(g, pattern);
    if (!found.free) return {found.witness.begin(), found.witness.end()};
  }
  return to_vertex_list(g.all_vertices());
}

Recognition reject(std::string reason, std::vector<int> witness) {
  return Recognition{std::nullopt, Rejection{std::move(reason), std::move(witness)}};
}

Recognition accept(DecompositionTree tree) { return Recognition{std::move(tree), std::nullopt}; }

// `labels[i]` is the original label of local vertex i+1.
Recognition recognize_labelled(const Graph& g, const std::vector<int>& labels) {
  if (g.empty()) return accept(DecompositionTree::base());

  auto split = components(g);
  if (split.components.size() == 1) {
    const VertexSet dominating = dominating_clique(g);
    if (dominating == 0) return reject(kNoDominatingVertex, relabel(obstruction_witness(g), labels));
    const VertexSet rest = g.all_vertices() & ~dominating;
    const int u = std::popcount(dominating);
    if (rest == 0) return accept(DecompositionTree::cone(u, DecompositionTree::base()));
    const Graph residue = g.induced(rest);
    const auto residue_labels = relabel(to_vertex_list(rest), labels);
    if (is_connected(residue))
      return reject(kResidueConnected, relabel(obstruction_witness(residue), residue_labels));
    auto inner = recognize_labelled(residue, residue_labels);
    if (!inner.accepted()) return inner;
    return accept(DecompositionTree::cone(u, std::move(*inner.tree)));
  }

  if (split.isolated < split.nontrivial - 1) {
    std::vector<int> witness;
    for (const auto& c : split.components)
      if (c.graph.vertex_count() >= 2) {
        const auto original = relabel(c.vertex_map, labels);
        witness.insert(witness.end(), original.begin(), original.end());
      }
    std::sort(witness.begin(), witness.end());
    return reject(kIsolatedDeficit, std::move(witness));
  }

  std::vector<DecompositionTree> children;
  for (const auto& c : split.components) {
    if (c.graph.vertex_count() < 2) continue;
    auto inner = recognize_labelled(c.graph, relabel(c.vertex_map, labels));
    if (!inner.accepted()) return inner;
    children.push_back(std::move(*inner.tree));
  }
  for (int i = 0; i < split.isolated - split.nontrivial + 1; ++i) children.push_back(DecompositionTree::base());
  return accept(DecompositionTree::coproduct(std::move(children)));
}

int pair_count(int n) { return n * (n - 1) / 2; }

// Column-major pair index: (i,j) with i<j comes after all pairs with smaller j.
int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

struct CanonicalSearch {
  const Graph& g;
  int n;
  int pairs;
  std::vector<int> cell_of_position;  // invariant class required at each position
  std::vector<int> invariant_class;   // class of each vertex (0-based)
  std::vector<int> assigned;          // vertex at each position
  std::uint64_t best = 0;
  bool have_best = false;
  std::vector<int> best_assignment;

  std::uint64_t bit_for(int i, int j) const { return std::uint64_t{1} << (pairs - 1 - pair_index(i, j)); }

  std::uint64_t prefix_mask(int pos) const {
    const int known = pair_count(pos + 1);
    if (known == 0) return 0;
    return ((known >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << known) - 1)) << (pairs - known);
  }

  void run(int pos, std::uint64_t partial, std::uint64_t used) {
    if (pos == n) {
      if (!have_best || partial < best) {
        best = partial;
        have_best = true;
        best_assignment = assigned;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      if (invariant_class[static_cast<std::size_t>(v)] != cell_of_position[static_cast<std::size_t>(pos)]) continue;
      std::uint64_t next = partial;
      for (int i = 0; i < pos; ++i)
        if (g.adjacent(assigned[static_cast<std::size_t>(i)] + 1, v + 1)) next |= bit_for(i, pos);
      if (have_best) {
        const auto mask = prefix_mask(pos);
        if ((next & mask) > (best & mask)) continue;
      }
      assigned[static_cast<std::size_t>(pos)] = v;
      run(pos + 1, next, used | (std::uint64_t{1} << v));
    }
  }
};

void add_multisets(const std::vector<Graph>& pool, std::size_t start, int cost, int count,
                   std::vector<std::size_t>& picked, int n_max, std::vector<Graph>& out) {
  if (count >= 2 && cost - 1 <= n_max) {
    std::vector<Graph> parts;
    for (auto idx : picked) parts.push_back(pool[idx]);
    parts.push_back(Graph::edgeless(count - 1));
    out.push_back(compose(parts, ComposeMode::disjoint_union));
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    const int next_cost = cost + pool[i].vertex_count() + 1;
    if (next_cost - 1 > n_max) continue;
    picked.push_back(i);
    add_multisets(pool, i, next_cost, count + 1, picked, n_max, out);
    picked.pop_back();
  }
}

}  // namespace

DecompositionTree DecompositionTree::cone(int u, DecompositionTree child) {
  DecompositionTree t;
  t.kind = Kind::cone;
  t.cone_size = u;
  t.children.push_back(std::move(child));
  return t;
}

DecompositionTree DecompositionTree::coproduct(std::vector<DecompositionTree> children) {
  DecompositionTree t;
  t.kind = Kind::coproduct;
  t.children = std::move(children);
  return t;
}

Graph DecompositionTree::reconstruct() const {
  switch (kind) {
    case Kind::base:
      return Graph();
    case Kind::cone:
      return join(Graph::complete(cone_size), children.front().reconstruct());
    case Kind::coproduct: {
      std::vector<Graph> parts;
      for (const auto& c : children) parts.push_back(c.reconstruct());
      parts.push_back(Graph::edgeless(static_cast<int>(children.size()) - 1));
      return compose(parts, ComposeMode::disjoint_union);
    }
  }
  return Graph();
}

Recognition recognize(const Graph& g) {
  std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) labels[static_cast<std::size_t>(v - 1)] = v;
  return recognize_labelled(g, labels);
}

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCanonicalVertices)
    throw CanonicalError("canonical form supports at most " + std::to_string(kMaxCanonicalVertices) + " vertices");

  // Vertex invariant: degree, then the sorted degrees of the neighbours.
  std::vector<std::vector<int>> invariant(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    auto& inv = invariant[static_cast<std::size_t>(v - 1)];
    inv.push_back(g.degree(v));
    std::vector<int> around;
    for (int w : to_vertex_list(g.neighbours(v))) around.push_back(g.degree(w));
    std::sort(around.begin(), around.end());
    inv.insert(inv.end(), around.begin(), around.end());
  }
  std::map<std::vector<int>, int> classes;
  for (const auto& inv : invariant) classes.emplace(inv, 0);
  int next = 0;
  for (auto& [key, id] : classes) id = next++;

  CanonicalSearch search{g, n, pair_count(n), {}, {}, std::vector<int>(static_cast<std::size_t>(n)), 0, false, {}};
  for (const auto& inv : invariant) search.invariant_class.push_back(classes.at(inv));
  search.cell_of_position = search.invariant_class;
  std::sort(search.cell_of_position.begin(), search.cell_of_position.end());
  search.run(0, 0, 0);

  CanonicalForm form;
  form.vertex_count = n;
  form.code = search.best;
  form.labelling.assign(static_cast<std::size_t>(n), 0);
  for (int pos = 0; pos < n; ++pos)
    form.labelling[static_cast<std::size_t>(search.best_assignment[static_cast<std::size_t>(pos)])] = pos + 1;
  return form;
}

Graph graph_from_code(int vertex_count, std::uint64_t code) {
  const int pairs = pair_count(vertex_count);
  std::vector<Edge> edges;
  for (int j = 1; j < vertex_count; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> (pairs - 1 - pair_index(i, j))) & 1U) edges.emplace_back(i + 1, j + 1);
  return Graph(vertex_count, edges);
}

Graph canonical_graph(const Graph& g) {
  const auto form = canonical_form(g);
  return graph_from_code(form.vertex_count, form.code);
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > kMaxCanonicalVertices) throw CanonicalError("all_graphs: n out of range");
  if (n == 0) return {Graph()};
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (const auto& smaller : all_graphs(n - 1)) {
    const auto base_edges = smaller.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      auto edges = base_edges;
      for (int v = 1; v < n; ++v)
        if ((mask >> (v - 1)) & 1U) edges.emplace_back(v, n);
      const auto form = canonical_form(Graph(n, edges));
      if (seen.insert(form.code).second) out.push_back(graph_from_code(n, form.code));
    }
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return canonical_form(a).code < canonical_form(b).code;
  });
  return out;
}

std::vector<Graph> enumerate_closure(int n_max) {
  if (n_max < 0 || n_max > kMaxEnumerationVertices)
    throw CanonicalError("enumeration supports 0.." + std::to_string(kMaxEnumerationVertices) + " vertices");

  std::set<std::pair<int, std::uint64_t>> seen;
  std::vector<Graph> members;
  auto add = [&](const Graph& g) {
    const auto form = canonical_form(g);
    if (seen.emplace(form.vertex_count, form.code).second) {
      members.push_back(graph_from_code(form.vertex_count, form.code));
      return true;
    }
    return false;
  };

  add(Graph());
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Graph> pool = members;
    for (const auto& g : pool)
      for (int u = 1; g.vertex_count() + u <= n_max; ++u) changed |= add(join(Graph::complete(u), g));
    std::vector<Graph> unions;
    std::vector<std::size_t> picked;
    add_multisets(pool, 0, 0, 0, picked, n_max, unions);
    for (const auto& g : unions) changed |= add(g);
  }

  std::sort(members.begin(), members.end(), [](const Graph& a, const Graph& b) {
    return canonical_form(a) < canonical_form(b);
  });
  return members;
}

}  // namespace draag
