#include <functional>
#include <random>

#include "doctest.h"
#include "draag/recognition.hpp"
#include "draag/series.hpp"

using namespace draag;

namespace {

std::vector<BigInt> coeffs(const IntSeries& s) { return s.coefficients(); }

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

CliquePolynomial poly(std::vector<std::int64_t> c) { return CliquePolynomial{std::move(c)}; }

// First witness in (s, lexicographic a) order by trying every bounded a.
std::optional<RealizabilityWitness> brute_realizable(const CliquePolynomial& p, SumMode mode) {
  const std::int64_t d = p[1];
  const std::int64_t target = mode == SumMode::vertices ? d : d + 1;
  std::vector<BigInt> want(p.coefficients.begin(), p.coefficients.end());
  for (int s = 1; s <= d + 1; ++s) {
    RealizabilityWitness w{s, std::vector<std::int64_t>(static_cast<std::size_t>(s), 0)};
    std::optional<RealizabilityWitness> found;
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t used) {
      if (found) return;
      if (i == s) {
        if (w.a.back() >= 1 && used + s == target && realizability_polynomial(w) == want) found = w;
        return;
      }
      for (std::int64_t v = 0; used + v + s <= target; ++v) {
        w.a[static_cast<std::size_t>(i)] = v;
        rec(i + 1, used + v);
      }
      w.a[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 0);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("series arithmetic") {
  IntSeries a(big({1, 2, 3}), 4), b(big({1, -1}), 4);
  CHECK(coeffs(a * b) == big({1, 1, 1, -3, 0}));
  CHECK(((a * b) / b) == a);
  CHECK_THROWS_AS(a / IntSeries(big({2, 1}), 4), SeriesError);
  CHECK_THROWS_AS(a + IntSeries(3), SeriesError);
  CHECK(coeffs(a.negate_variable()) == big({1, -2, 3, 0, 0}));
}

TEST_CASE("gocha and Poincare examples") {
  CHECK(coeffs(gocha_series(poly({1, 4, 4}), 4)) == big({1, 5, 16, 44, 112}));
  CHECK(coeffs(gocha_series(poly({1}), 4)) == big({1, 1, 0, 0, 0}));
  CHECK(coeffs(gocha_series(poly({1, 1}), 4)) == big({1, 2, 2, 2, 2}));
  CHECK(coeffs(poincare_series(poly({1, 4, 4}), 5)) == big({1, 5, 9, 9, 9, 9}));
  CHECK(coeffs(poincare_series(poly({1}), 3)) == big({1, 1, 1, 1}));
  CHECK(coeffs(poincare_series(poly({1, 5, 2}), 3)) == big({1, 6, 8, 8}));
}

TEST_CASE("gocha(-t) * Poincare(t) = 1 for every small graph") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      const auto p = clique_polynomial(g);
      CHECK((gocha_series(p, 9).negate_variable() * poincare_series(p, 9)).is_one());
      const auto pc = poincare_series(p, 3);
      CHECK(pc[1] == n + 1);
      CHECK(pc[2] == BigInt(n) + BigInt(g.edge_count()) + 1);
    }
}

TEST_CASE("Lie dimensions") {
  CHECK(lie_dims_from_gocha(IntSeries(big({1, 1}), 4), 4) == big({1, 0, 0, 0}));
  const auto c4 = lie_dims_from_gocha(gocha_series(poly({1, 4, 4}), 6), 6);
  CHECK(c4[0] == 5);
  CHECK(c4[1] == 6);
  const auto k1 = lie_dims_from_gocha(gocha_series(poly({1, 1}), 4), 4);
  CHECK(k1[0] == 2);
  CHECK(k1[1] == 1);
  CHECK_THROWS_WITH_AS(lie_dims_from_gocha(IntSeries(big({1, 1, 2}), 3), 3), doctest::Contains("degree 3"),
                       SeriesError);
}

TEST_CASE("Lie dimension round trip") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigInt> dims;
    for (int n = 0; n < 7; ++n) dims.emplace_back(rng() % 6);
    CHECK(lie_dims_from_gocha(lie_product(dims, 7), 7) == dims);
  }
}

TEST_CASE("realizability examples") {
  for (auto mode : {SumMode::vertices, SumMode::vertices_plus_one})
    CHECK_FALSE(realizability_check(poly({1, 4, 4}), mode).has_value());
  CHECK(realizability_check(poly({1, 1}), SumMode::vertices_plus_one) == RealizabilityWitness{1, {1}});
  CHECK(realizability_check(poly({1, 5, 2}), SumMode::vertices_plus_one) == RealizabilityWitness{2, {2, 2}});
  CHECK_FALSE(realizability_check(poly({1}), SumMode::vertices_plus_one).has_value());
  CHECK_FALSE(realizability_check(poly({1}), SumMode::vertices).has_value());
}

TEST_CASE("realizability agrees with exhaustive search") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      const auto p = clique_polynomial(g);
      for (auto mode : {SumMode::vertices, SumMode::vertices_plus_one}) {
        const auto w = realizability_check(p, mode);
        CHECK(w == brute_realizable(p, mode));
        if (w) CHECK(realizability_polynomial(*w) == std::vector<BigInt>(p.coefficients.begin(), p.coefficients.end()));
      }
    }
}
