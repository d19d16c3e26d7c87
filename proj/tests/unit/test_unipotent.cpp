#include <random>

#include "doctest.h"
#include "draag/unipotent.hpp"

using namespace draag;

namespace {

using Dense = std::vector<std::vector<int>>;

Dense dense(const UnipotentMatrix& m) {
  Dense d(static_cast<std::size_t>(m.size()), std::vector<int>(static_cast<std::size_t>(m.size())));
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) d[i - 1][j - 1] = m.get(i, j);
  return d;
}

Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s % 2;
    }
  return c;
}

Dense ident(std::size_t n) {
  Dense d(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

UnipotentMatrix random_matrix(std::mt19937_64& rng, int n) {
  UnipotentMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m.set(i, j, rng() & 1U);
  return m;
}

}  // namespace

TEST_CASE("basic matrices") {
  const auto j = UnipotentMatrix::jordan(3);
  CHECK(j.to_bit_strings() == std::vector<std::string>{"110", "011", "001"});
  CHECK(j.inverse().to_bit_strings() == std::vector<std::string>{"111", "011", "001"});
  CHECK((j * j).to_bit_strings() == std::vector<std::string>{"101", "010", "001"});
  CHECK(j.power(4).is_identity());
  CHECK(j.power(-2) == (j * j).inverse());
  CHECK(UnipotentMatrix::identity(4).is_identity());
  CHECK(UnipotentMatrix::from_bit_strings({"110", "011", "001"}) == j);

  UnipotentMatrix a(3), b(3);
  a.set(1, 2);
  b.set(2, 3);
  auto delta13 = UnipotentMatrix(3);
  delta13.set(1, 3);
  CHECK(UnipotentMatrix::commutator(a, b) == delta13);

  const auto e = j.embed(5, 2);
  CHECK(e.to_bit_strings() == std::vector<std::string>{"10000", "01000", "00110", "00011", "00001"});
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(UnipotentMatrix(0), MatrixError);
  CHECK_THROWS_AS(UnipotentMatrix(kMaxMatrixSize + 1), MatrixError);
  CHECK_THROWS_AS(UnipotentMatrix::from_bit_strings({"10", "11"}), MatrixError);
  CHECK_THROWS_AS(UnipotentMatrix::from_bit_strings({"00", "01"}), MatrixError);
  CHECK_THROWS_AS(UnipotentMatrix::from_bit_strings({"102", "010", "001"}), MatrixError);
  CHECK_THROWS_AS(UnipotentMatrix::from_bit_strings({"10", "010"}), MatrixError);
  UnipotentMatrix m(3);
  CHECK_THROWS_AS(m.set(2, 2), MatrixError);
  CHECK_THROWS_AS(m.get(4, 1), MatrixError);
  CHECK_THROWS_AS(m * UnipotentMatrix(2), MatrixError);
  CHECK_THROWS_AS(m.embed(3, 1), MatrixError);
}

TEST_CASE("products and inverses agree with dense integer arithmetic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto a = random_matrix(rng, n), b = random_matrix(rng, n);
    CHECK(dense(a * b) == mul(dense(a), dense(b)));
    CHECK(mul(dense(a), dense(a.inverse())) == ident(static_cast<std::size_t>(n)));
    CHECK((a * a.inverse()).is_identity());
  }
  const auto big = random_matrix(rng, 64);
  CHECK((big.inverse() * big).is_identity());
}

TEST_CASE("involutions are exactly I + N with N^2 = 0") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      UnipotentMatrix m(n);
      Dense nil(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1U) {
          m.set(slots[s].first, slots[s].second);
          nil[slots[s].first - 1][slots[s].second - 1] = 1;
        }
      const auto sq = mul(nil, nil);
      bool zero = true;
      for (const auto& row : sq)
        for (int v : row) zero = zero && v == 0;
      CHECK((m * m).is_identity() == zero);
    }
  }
}

TEST_CASE("word evaluation and morphism checks") {
  UnipotentMatrix x(3), bad(3);
  x.set(1, 2);
  x.set(1, 3);
  bad.set(1, 2);
  bad.set(2, 3);
  const std::vector<GroupWord> rel{GroupWord::parse("x0^2")};
  CHECK(verify_morphism(rel, {x}).ok);
  const auto failed = verify_morphism(rel, {bad});
  CHECK_FALSE(failed.ok);
  CHECK(failed.failing_index == std::size_t{0});
  CHECK(failed.failing_value.to_bit_strings() == std::vector<std::string>{"101", "010", "001"});

  CHECK(evaluate(GroupWord::parse("x0*x0^-1"), {bad}).is_identity());
  CHECK(evaluate(GroupWord(), {bad}).is_identity());
  CHECK_THROWS_AS(evaluate(GroupWord::parse("x1"), {bad}), MatrixError);
  CHECK_THROWS_AS(evaluate(GroupWord::parse("x0*x1"), {bad, UnipotentMatrix(2)}), MatrixError);
  CHECK_THROWS_AS(evaluate(GroupWord::parse("x0"), {}), MatrixError);
}

TEST_CASE("lemmquad matrices") {
  CHECK_THROWS_AS(solve_lemmquad(2), MatrixError);
  CHECK_THROWS_AS(solve_lemmquad(-1), MatrixError);
  for (int n = 3; n <= 8; ++n) {
    const auto s = solve_lemmquad(n);
    REQUIRE(s.a1.size() == n + 1);
    CHECK(s.a1 == UnipotentMatrix::jordan(n + 1));
    CHECK(s.a2 == s.a1);
    for (int i = 1; i <= n; ++i) {
      CHECK(s.b1.get(i, i + 1) == (i % 2 == 1));
      CHECK(s.b2.get(i, i + 1) == (i % 2 == 0));
    }
    CHECK(lemmquad_identity_holds(s.a1, s.b1));
    CHECK(lemmquad_identity_holds(s.a2, s.b2));

    // Independent check: B^2 = I and B A B A = I, which is B A B^-1 = A^-1.
    const auto id = ident(static_cast<std::size_t>(n + 1));
    for (const auto* b : {&s.b1, &s.b2}) {
      const auto db = dense(*b), da = dense(s.a1);
      CHECK(mul(db, db) == id);
      CHECK(mul(mul(db, da), mul(db, da)) == id);
    }
  }
  CHECK(solve_lemmquad(12).b1.size() == 13);
}

TEST_CASE("lemmquad identity rejects non-solutions") {
  const auto a = UnipotentMatrix::jordan(4);
  CHECK_FALSE(lemmquad_identity_holds(a, UnipotentMatrix::identity(4)));
  CHECK_FALSE(lemmquad_identity_holds(a, a));
  CHECK(lemmquad_identity_holds(UnipotentMatrix::identity(4), UnipotentMatrix::identity(4)));
  CHECK(lemmquad_involution(2, true).has_value());
  CHECK(lemmquad_involution(2, false).has_value());
}
