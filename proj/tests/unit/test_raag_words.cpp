#include <deque>
#include <random>
#include <set>

#include "doctest.h"
#include "draag/raag_words.hpp"

using namespace draag;

namespace {

GroupWord random_word(std::mt19937_64& rng, int d, int len) {
  std::vector<Letter> letters;
  for (int i = 0; i < len; ++i)
    letters.push_back({1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d)), rng() % 2 ? 1 : -1});
  return GroupWord(letters);
}

Graph random_graph(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng() % 2 == 0) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<Letter> free_reduce(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

int rank(const Letter& l) { return 2 * l.generator + (l.exponent > 0 ? 0 : 1); }

// Every word reachable by swapping adjacent commuting letters.
std::set<std::vector<int>> commutation_class(const Graph& g, const std::vector<Letter>& w) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<Letter>> queue{w};
  auto key = [](const std::vector<Letter>& x) {
    std::vector<int> k;
    for (const auto& l : x) k.push_back(rank(l));
    return k;
  };
  seen.insert(key(w));
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const int a = cur[i].generator, b = cur[i + 1].generator;
      if (a == b || !g.adjacent(a, b)) continue;
      auto next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(key(next)).second) queue.push_back(next);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(GroupWord::parse("x5*x3^-1").letters() == std::vector<Letter>{{5, 1}, {3, -1}});
  CHECK(GroupWord::parse("1").empty());
  CHECK(GroupWord::parse("x1^2").letters() == std::vector<Letter>{{1, 1}, {1, 1}});
  CHECK(GroupWord::parse("y2").letters() == std::vector<Letter>{{2, 1}});
  CHECK_THROWS_AS(GroupWord::parse("x1*"), WordError);
  CHECK_THROWS_AS(GroupWord::parse("q1"), WordError);
  CHECK(GroupWord::parse("x5*x3^-1").to_string() == "x5*x3^-1");
}

TEST_CASE("normal form examples") {
  const auto c4 = Graph::cycle(4);
  CHECK(normal_form(c4, GroupWord::parse("x1*x2*x1^-1")).to_string() == "x2");
  CHECK(normal_form(c4, GroupWord()).is_identity());
  CHECK(normal_form(Graph::edgeless(3), GroupWord::parse("x1*x3")).to_string() == "x1*x3");
  CHECK(normal_form(c4, GroupWord::parse("x3*x1")).to_string() == "x3*x1");
  CHECK_THROWS_AS(normal_form(c4, GroupWord::parse("x0")), WordError);
  CHECK_THROWS_AS(normal_form(c4, GroupWord::parse("x5")), WordError);
}

TEST_CASE("free and complete graphs") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_word(rng, 3, static_cast<int>(rng() % 12));
    CHECK(normal_form(Graph::edgeless(3), w).letters() == free_reduce(w.letters()));
    std::vector<int> exps(4, 0);
    for (const auto& l : w.letters()) exps[static_cast<std::size_t>(l.generator)] += l.exponent;
    std::vector<Letter> sorted;
    for (int g = 1; g <= 3; ++g)
      for (int k = 0; k < std::abs(exps[static_cast<std::size_t>(g)]); ++k)
        sorted.push_back({g, exps[static_cast<std::size_t>(g)] > 0 ? 1 : -1});
    CHECK(normal_form(Graph::complete(3), w).letters() == sorted);
  }
}

TEST_CASE("normal form is the lex-least word of its commutation class and is invariant") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_graph(rng, 4);
    const auto w = random_word(rng, 4, static_cast<int>(rng() % 9));
    const auto nf = normal_form(g, w);
    CHECK(normal_form(g, nf.word()) == nf);
    CHECK(normal_form(g, w * w.inverse()).is_identity());

    // No reduced word in the class is smaller, and no two letters cancel.
    const auto cls = commutation_class(g, nf.letters());
    std::vector<int> key;
    for (const auto& l : nf.letters()) key.push_back(rank(l));
    CHECK(*cls.begin() == key);
    for (const auto& v : cls)
      for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK((v[i] ^ v[i + 1]) != 1);

    // Inserting a cancelling pair or swapping commuting letters does not change it.
    auto letters = w.letters();
    const auto pos = letters.empty() ? 0 : rng() % (letters.size() + 1);
    const Letter x{1 + static_cast<int>(rng() % 4), 1};
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), {x, x.inverse()});
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i].generator != letters[i + 1].generator && g.adjacent(letters[i].generator, letters[i + 1].generator) &&
          rng() % 2)
        std::swap(letters[i], letters[i + 1]);
    CHECK(normal_form(g, GroupWord(letters)) == nf);
  }
}

TEST_CASE("epsilon") {
  const ZVector z{{GroupWord(), GroupWord(), GroupWord::parse("x5"), GroupWord::parse("x5"), GroupWord()}};
  const auto e = epsilon(z);
  CHECK(e[2] == (std::uint64_t{1} << 5));
  CHECK(e[0] == 0);
  const ZVector sq{{GroupWord::parse("x2^2")}};
  CHECK(epsilon(sq)[0] == 0);
}

TEST_CASE("action validation") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, 1 + static_cast<int>(rng() % 7));
    CHECK(validate_delta_action(g, ZVector::trivial(g.vertex_count())).valid());
  }
  const std::vector<Edge> e{{1, 2}, {3, 4}};
  const Graph gamma1(5, e);
  const ZVector z1{{GroupWord(), GroupWord(), GroupWord::parse("x5"), GroupWord::parse("x5"), GroupWord()}};
  CHECK(validate_delta_action(gamma1, z1).valid());

  const ZVector bad{{GroupWord::parse("x2"), GroupWord::parse("x1")}};
  const auto report = validate_delta_action(Graph::edgeless(2), bad);
  REQUIRE_FALSE(report.valid());
  CHECK(report.violations.front().kind == ActionViolation::Kind::not_involutive);
}

TEST_CASE("semidirect product word problem") {
  const auto c4 = Graph::cycle(4);
  const auto z = ZVector::trivial(4);
  for (const auto& r : delta_raag_relators(c4, z)) CHECK(delta_normal_form(c4, z, r).is_identity());
  CHECK(delta_raag_relators(c4, z).size() == 4 + 4 + 1);
  CHECK(delta_normal_form(c4, z, GroupWord::parse("x0*x1*x0")).raag.to_string() == "x1^-1");
  CHECK(delta_normal_form(c4, z, GroupWord::parse("x0")).x0);
  CHECK_FALSE(delta_normal_form(c4, z, GroupWord::parse("x1*x3*x1^-1*x3^-1")).is_identity());

  const std::vector<Edge> e{{1, 2}, {3, 4}};
  const Graph gamma1(5, e);
  const ZVector z1{{GroupWord(), GroupWord(), GroupWord::parse("x5"), GroupWord::parse("x5"), GroupWord()}};
  for (const auto& r : delta_raag_relators(gamma1, z1)) CHECK(delta_normal_form(gamma1, z1, r).is_identity());
}
