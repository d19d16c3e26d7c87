#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "draag/recognition.hpp"

using namespace draag;

namespace {

Graph from_edges(int n, std::vector<Edge> e) { return Graph(n, e); }

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabelled(perm);
}

// Isomorphism by trying every permutation.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (a.relabelled(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("recognition fixtures") {
  const auto c4 = recognize(Graph::cycle(4));
  CHECK_FALSE(c4.accepted());
  CHECK(c4.rejection->reason == kNoDominatingVertex);
  CHECK(c4.rejection->witness == std::vector<int>{1, 2, 3, 4});

  const auto two = recognize(from_edges(4, {{1, 2}, {3, 4}}));
  CHECK_FALSE(two.accepted());
  CHECK(two.rejection->reason == kIsolatedDeficit);

  CHECK_FALSE(recognize(Graph::path(4)).accepted());
  CHECK(recognize(from_edges(5, {{1, 2}, {3, 4}})).accepted());
  CHECK(recognize(from_edges(5, {{1, 2}, {2, 4}})).accepted());
  for (int n = 0; n <= 8; ++n) {
    CHECK(recognize(Graph::complete(n)).accepted());
    CHECK(recognize(Graph::edgeless(n)).accepted());
  }
  for (int n = 0; n <= 3; ++n)
    for (const auto& g : all_graphs(n)) CHECK(recognize(g).accepted());
}

TEST_CASE("a residue that stays connected") {
  // K1 joined with P4: the apex dominates, the path does not split.
  const auto g = join(Graph::complete(1), Graph::path(4));
  const auto r = recognize(g);
  REQUIRE_FALSE(r.accepted());
  CHECK(r.rejection->reason == kResidueConnected);
  CHECK(r.rejection->witness == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("tree shapes") {
  const auto k3 = recognize(Graph::complete(3));
  CHECK(*k3.tree == DecompositionTree::cone(3, DecompositionTree::base()));
  const auto e3 = recognize(Graph::edgeless(3));
  CHECK(*e3.tree == DecompositionTree::coproduct({DecompositionTree::base(), DecompositionTree::base(),
                                                  DecompositionTree::base(), DecompositionTree::base()}));
}

TEST_CASE("canonical form") {
  std::mt19937_64 rng(21);
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      const auto form = canonical_form(g);
      CHECK(canonical_form(shuffled(g, rng)) == form);
      CHECK(brute_isomorphic(canonical_graph(g), g));
      CHECK(g.relabelled(form.labelling) == canonical_graph(g));
    }
  CHECK(canonical_form(Graph::cycle(4)) != canonical_form(Graph::path(4)));
  CHECK(canonical_graph(Graph::complete(4)).edge_count() == 6);
  CHECK_THROWS_AS(canonical_form(Graph::edgeless(11)), CanonicalError);
}

TEST_CASE("isomorphism class counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(all_graphs(n).size() == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("closure enumeration") {
  CHECK(enumerate_closure(0).size() == 1);
  CHECK(enumerate_closure(1).size() == 2);
  std::size_t four = 0;
  std::set<std::uint64_t> codes;
  for (const auto& g : enumerate_closure(4))
    if (g.vertex_count() == 4) {
      ++four;
      codes.insert(canonical_form(g).code);
    }
  CHECK(four == 8);
  for (const auto& bad : {Graph::cycle(4), Graph::path(4), from_edges(4, {{1, 2}, {3, 4}})})
    CHECK(codes.count(canonical_form(bad).code) == 0);
  CHECK_THROWS_AS(enumerate_closure(9), CanonicalError);
}

TEST_CASE("recognition matches the closure up to 6 vertices; witnesses reconstruct") {
  std::set<std::pair<int, std::uint64_t>> members;
  for (const auto& g : enumerate_closure(6)) members.emplace(g.vertex_count(), canonical_form(g).code);
  std::mt19937_64 rng(8);
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      const auto r = recognize(g);
      CHECK(r.accepted() == (members.count({n, canonical_form(g).code}) == 1));
      CHECK(recognize(shuffled(g, rng)).accepted() == r.accepted());
      if (r.accepted()) {
        CHECK(canonical_form(r.tree->reconstruct()) == canonical_form(g));
        CHECK(pattern_free(g, Pattern::c4).free);
        CHECK(pattern_free(g, Pattern::p4).free);
      } else {
        CHECK(std::is_sorted(r.rejection->witness.begin(), r.rejection->witness.end()));
      }
    }
  // Pattern freedom is not sufficient.
  const auto two = from_edges(4, {{1, 2}, {3, 4}});
  CHECK(pattern_free(two, Pattern::c4).free);
  CHECK(pattern_free(two, Pattern::p4).free);
  CHECK_FALSE(recognize(two).accepted());
}

TEST_CASE("tree invariants") {
  std::function<void(const DecompositionTree&)> walk = [&](const DecompositionTree& t) {
    for (const auto& c : t.children) {
      if (t.kind == DecompositionTree::Kind::cone) CHECK(c.kind != DecompositionTree::Kind::cone);
      if (t.kind == DecompositionTree::Kind::coproduct) CHECK(c.kind != DecompositionTree::Kind::coproduct);
      walk(c);
    }
    if (t.kind == DecompositionTree::Kind::coproduct) CHECK(t.children.size() >= 2);
  };
  for (const auto& g : enumerate_closure(7)) walk(*recognize(g).tree);
}
