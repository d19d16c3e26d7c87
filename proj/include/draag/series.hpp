#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "draag/graph.hpp"

namespace draag {

using BigInt = boost::multiprecision::cpp_int;

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer power series truncated after t^order. Arithmetic is exact mod t^(order+1).
class IntSeries {
 public:
  explicit IntSeries(int order = 0);
  IntSeries(std::vector<BigInt> coefficients, int order);
  static IntSeries from_polynomial(const CliquePolynomial& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  BigInt& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  IntSeries operator+(const IntSeries& rhs) const;
  IntSeries operator-(const IntSeries& rhs) const;
  IntSeries operator*(const IntSeries& rhs) const;
  /// Requires rhs[0] = +-1.
  IntSeries operator/(const IntSeries& rhs) const;

  /// f(t) -> f(-t).
  IntSeries negate_variable() const;
  bool is_one() const;

  bool operator==(const IntSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// (1+t) / Gamma(-t).
IntSeries gocha_series(const CliquePolynomial& p, int order);
/// Gamma(t) / (1-t).
IntSeries poincare_series(const CliquePolynomial& p, int order);

/// Unique l_1..l_N >= 0 with prod (1+t^n)^{l_n} = s mod t^(N+1).
/// Throws SeriesError naming the first degree where l_n would be negative.
std::vector<BigInt> lie_dims_from_gocha(const IntSeries& s, int order);

/// prod_{n<=N} (1+t^n)^{dims[n-1]}.
IntSeries lie_product(std::span<const BigInt> dims, int order);

/// Which constant the sum a_0 + ... + a_{s-1} + s must equal.
enum class SumMode { vertices, vertices_plus_one };

std::string to_string(SumMode mode);

struct RealizabilityWitness {
  int s = 0;
  std::vector<std::int64_t> a;
  bool operator==(const RealizabilityWitness&) const = default;
};

/// Evaluates (1+t)^{s-1} + t * sum_i a_i (1+t)^i as a polynomial.
std::vector<BigInt> realizability_polynomial(const RealizabilityWitness& w);

/// Smallest s (1..d+1) admitting nonnegative a_i with a_{s-1} >= 1 that
/// reproduce the polynomial exactly and meet the sum constraint.
std::optional<RealizabilityWitness> realizability_check(const CliquePolynomial& p, SumMode mode);

}  // namespace draag
