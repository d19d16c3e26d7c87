#include "draag/series.hpp"

#include <algorithm>

namespace draag {

namespace {

void require_same_order(const IntSeries& a, const IntSeries& b) {
  if (a.order() != b.order()) throw SeriesError("series truncation orders differ");
}

BigInt binomial(const BigInt& n, int k) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

IntSeries::IntSeries(int order) {
  if (order < 0) throw SeriesError("negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

IntSeries::IntSeries(std::vector<BigInt> coefficients, int order) : IntSeries(order) {
  for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i) coeffs_[i] = coefficients[i];
}

IntSeries IntSeries::from_polynomial(const CliquePolynomial& p, int order) {
  IntSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = p[static_cast<std::size_t>(n)];
  return s;
}

IntSeries IntSeries::operator+(const IntSeries& rhs) const {
  require_same_order(*this, rhs);
  IntSeries out = *this;
  for (int n = 0; n <= order(); ++n) out[n] += rhs[n];
  return out;
}

IntSeries IntSeries::operator-(const IntSeries& rhs) const {
  require_same_order(*this, rhs);
  IntSeries out = *this;
  for (int n = 0; n <= order(); ++n) out[n] -= rhs[n];
  return out;
}

IntSeries IntSeries::operator*(const IntSeries& rhs) const {
  require_same_order(*this, rhs);
  IntSeries out(order());
  for (int i = 0; i <= order(); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order(); ++j) out[i + j] += (*this)[i] * rhs[j];
  }
  return out;
}

IntSeries IntSeries::operator/(const IntSeries& rhs) const {
  require_same_order(*this, rhs);
  const BigInt& lead = rhs[0];
  if (lead != 1 && lead != -1) throw SeriesError("division needs a unit constant term");
  IntSeries out(order());
  for (int n = 0; n <= order(); ++n) {
    BigInt acc = (*this)[n];
    for (int k = 1; k <= n; ++k) acc -= rhs[k] * out[n - k];
    out[n] = acc * lead;  // lead is its own inverse
  }
  return out;
}

IntSeries IntSeries::negate_variable() const {
  IntSeries out = *this;
  for (int n = 1; n <= order(); n += 2) out[n] = -out[n];
  return out;
}

bool IntSeries::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

IntSeries gocha_series(const CliquePolynomial& p, int order) {
  IntSeries numerator(order);
  numerator[0] = 1;
  if (order >= 1) numerator[1] = 1;
  return numerator / IntSeries::from_polynomial(p, order).negate_variable();
}

IntSeries poincare_series(const CliquePolynomial& p, int order) {
  IntSeries denominator(order);
  denominator[0] = 1;
  if (order >= 1) denominator[1] = -1;
  return IntSeries::from_polynomial(p, order) / denominator;
}

std::vector<BigInt> lie_dims_from_gocha(const IntSeries& s, int order) {
  if (order > s.order()) throw SeriesError("requested order exceeds series truncation");
  if (s[0] != 1) throw SeriesError("series must start with 1");
  IntSeries rest(s.coefficients(), order);
  std::vector<BigInt> dims;
  for (int n = 1; n <= order; ++n) {
    const BigInt l = rest[n];
    if (l < 0)
      throw SeriesError("not a product of (1+t^n) factors: dimension at degree " + std::to_string(n) +
                        " would be " + l.str());
    dims.push_back(l);
    // Divide by (1+t^n)^l, i.e. multiply by sum_k (-1)^k C(l+k-1, k) t^{nk}.
    IntSeries factor(order);
    for (int k = 0; n * k <= order; ++k) {
      BigInt c = binomial(l + k - 1, k);
      factor[n * k] = (k % 2 == 0) ? c : BigInt(-c);
    }
    rest = rest * factor;
  }
  return dims;
}

IntSeries lie_product(std::span<const BigInt> dims, int order) {
  IntSeries out(order);
  out[0] = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (n > order) break;
    IntSeries factor(order);
    for (int k = 0; n * k <= order; ++k) factor[n * k] = binomial(dims[i], k);
    out = out * factor;
  }
  return out;
}

std::string to_string(SumMode mode) { return mode == SumMode::vertices ? "d" : "d+1"; }

std::vector<BigInt> realizability_polynomial(const RealizabilityWitness& w) {
  const int degree = w.s;
  std::vector<BigInt> poly(static_cast<std::size_t>(degree) + 1, 0);
  // (1+t)^{s-1}
  for (int k = 0; k <= w.s - 1; ++k) poly[static_cast<std::size_t>(k)] += binomial(w.s - 1, k);
  for (int i = 0; i < w.s; ++i)
    for (int k = 0; k <= i; ++k)
      poly[static_cast<std::size_t>(k) + 1] += binomial(i, k) * w.a[static_cast<std::size_t>(i)];
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

std::optional<RealizabilityWitness> realizability_check(const CliquePolynomial& p, SumMode mode) {
  const std::int64_t d = p[1];
  const std::int64_t target = mode == SumMode::vertices ? d : d + 1;
  const int degree = p.degree();
  for (int s = 1; s <= d + 1; ++s) {
    if (degree > s) continue;  // (iv) has degree exactly s
    // q(t) = (Gamma(t) - (1+t)^{s-1}) / t must equal sum_i a_i (1+t)^i.
    std::vector<BigInt> q(static_cast<std::size_t>(s), 0);
    bool divisible = true;
    for (int k = 0; k <= s; ++k) {
      BigInt c = p[static_cast<std::size_t>(k)];
      if (k <= s - 1) c -= binomial(s - 1, k);
      if (k == 0) {
        divisible = (c == 0);
      } else {
        q[static_cast<std::size_t>(k - 1)] = c;
      }
    }
    if (!divisible) continue;
    // Rewrite q in powers of u = 1+t: a_i = sum_{k>=i} q_k C(k,i) (-1)^{k-i}.
    RealizabilityWitness w{s, std::vector<std::int64_t>(static_cast<std::size_t>(s), 0)};
    bool ok = true;
    std::int64_t sum = 0;
    for (int i = 0; i < s && ok; ++i) {
      BigInt a = 0;
      for (int k = i; k < s; ++k) {
        const BigInt term = q[static_cast<std::size_t>(k)] * binomial(k, i);
        a += ((k - i) % 2 == 0) ? term : BigInt(-term);
      }
      if (a < 0) ok = false;
      w.a[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(a);
      sum += w.a[static_cast<std::size_t>(i)];
    }
    if (!ok || w.a.back() < 1) continue;
    if (sum + s != target) continue;
    return w;
  }
  return std::nullopt;
}

}  // namespace draag
