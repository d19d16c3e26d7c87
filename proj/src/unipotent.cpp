#include "draag/unipotent.hpp"

#include <bit>

#include "draag/f2.hpp"

namespace draag {

namespace {

using Rows = std::vector<std::uint64_t>;

// Arbitrary square matrices over F2 (row i, bit c = column c, 0-based).
Rows multiply(const Rows& a, const Rows& b) {
  Rows out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::uint64_t bits = a[i]; bits != 0; bits &= bits - 1)
      out[i] ^= b[static_cast<std::size_t>(std::countr_zero(bits))];
  return out;
}

std::uint64_t bit(int c) { return std::uint64_t{1} << c; }

void check_size(int n) {
  if (n < 1 || n > kMaxMatrixSize)
    throw MatrixError("matrix size must be between 1 and " + std::to_string(kMaxMatrixSize));
}

constexpr int kMaxKernelSearchBits = 24;

}  // namespace

UnipotentMatrix::UnipotentMatrix(int n) : n_(n) {
  check_size(n);
  rows_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows_[static_cast<std::size_t>(i)] = bit(i);
}

UnipotentMatrix UnipotentMatrix::jordan(int n) {
  UnipotentMatrix m(n);
  for (int i = 1; i < n; ++i) m.set(i, i + 1);
  return m;
}

UnipotentMatrix UnipotentMatrix::from_bit_strings(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  UnipotentMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(r.size()) != n) throw MatrixError("row " + std::to_string(i) + " has the wrong length");
    for (int j = 1; j <= n; ++j) {
      const char c = r[static_cast<std::size_t>(j - 1)];
      if (c != '0' && c != '1') throw MatrixError("row " + std::to_string(i) + " contains a non-binary digit");
      const bool v = c == '1';
      if (j == i && !v) throw MatrixError("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") must be 1");
      if (j < i && v) throw MatrixError("matrix is not upper triangular at row " + std::to_string(i));
      if (j > i) m.set(i, j, v);
    }
  }
  return m;
}

bool UnipotentMatrix::get(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw MatrixError("matrix index out of range");
  return (rows_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1U;
}

void UnipotentMatrix::set(int i, int j, bool value) {
  if (i < 1 || j > n_ || i >= j) throw MatrixError("only strictly upper entries can be set");
  auto& r = rows_[static_cast<std::size_t>(i - 1)];
  if (value)
    r |= bit(j - 1);
  else
    r &= ~bit(j - 1);
}

UnipotentMatrix UnipotentMatrix::operator*(const UnipotentMatrix& rhs) const {
  if (n_ != rhs.n_) throw MatrixError("matrix size mismatch");
  UnipotentMatrix out(n_);
  out.rows_ = multiply(rows_, rhs.rows_);
  return out;
}

UnipotentMatrix UnipotentMatrix::inverse() const {
  // Row i of the inverse: e_i + sum_{j>i} U_ij * (row j of the inverse).
  UnipotentMatrix out(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    std::uint64_t r = bit(i);
    for (std::uint64_t bits = rows_[static_cast<std::size_t>(i)] & ~bit(i); bits != 0; bits &= bits - 1)
      r ^= out.rows_[static_cast<std::size_t>(std::countr_zero(bits))];
    out.rows_[static_cast<std::size_t>(i)] = r;
  }
  return out;
}

UnipotentMatrix UnipotentMatrix::power(int k) const {
  UnipotentMatrix base = k < 0 ? inverse() : *this;
  UnipotentMatrix out(n_);
  for (unsigned e = static_cast<unsigned>(k < 0 ? -k : k); e != 0; e >>= 1) {
    if (e & 1U) out = out * base;
    base = base * base;
  }
  return out;
}

UnipotentMatrix UnipotentMatrix::commutator(const UnipotentMatrix& a, const UnipotentMatrix& b) {
  return a.inverse() * b.inverse() * a * b;
}

bool UnipotentMatrix::is_identity() const { return *this == UnipotentMatrix(n_); }

UnipotentMatrix UnipotentMatrix::embed(int total, int offset) const {
  if (offset < 0 || offset + n_ > total) throw MatrixError("block does not fit");
  UnipotentMatrix out(total);
  for (int i = 0; i < n_; ++i) out.rows_[static_cast<std::size_t>(offset + i)] = rows_[static_cast<std::size_t>(i)] << offset;
  return out;
}

std::vector<std::string> UnipotentMatrix::to_bit_strings() const {
  std::vector<std::string> out;
  for (int i = 1; i <= n_; ++i) {
    std::string r;
    for (int j = 1; j <= n_; ++j) r += get(i, j) ? '1' : '0';
    out.push_back(std::move(r));
  }
  return out;
}

UnipotentMatrix evaluate(const GroupWord& w, const std::vector<UnipotentMatrix>& images) {
  if (images.empty()) throw MatrixError("no generator images");
  const int n = images.front().size();
  UnipotentMatrix out(n);
  for (const auto& letter : w.letters()) {
    if (letter.generator < 0 || static_cast<std::size_t>(letter.generator) >= images.size())
      throw MatrixError("no image for generator x" + std::to_string(letter.generator));
    const auto& img = images[static_cast<std::size_t>(letter.generator)];
    if (img.size() != n) throw MatrixError("generator images have different sizes");
    out = out * (letter.exponent > 0 ? img : img.inverse());
  }
  return out;
}

MorphismCheck verify_morphism(const std::vector<GroupWord>& relators, const std::vector<UnipotentMatrix>& images) {
  MorphismCheck check;
  for (std::size_t r = 0; r < relators.size(); ++r) {
    auto value = evaluate(relators[r], images);
    if (!value.is_identity()) {
      check.ok = false;
      check.failing_index = r;
      check.failing_value = std::move(value);
      return check;
    }
  }
  return check;
}

bool lemmquad_identity_holds(const UnipotentMatrix& a, const UnipotentMatrix& b) {
  if ((b * b) != UnipotentMatrix(b.size())) return false;
  // commutator(x^-1, y^-1) = x y x^-1 y^-1.
  return UnipotentMatrix::commutator(b.inverse(), a.inverse()) == a.power(-2);
}

std::optional<UnipotentMatrix> lemmquad_involution(int m, bool first_entry) {
  check_size(m);
  const auto a = UnipotentMatrix::jordan(m);
  Rows a_rows(static_cast<std::size_t>(m)), a_inv(static_cast<std::size_t>(m));
  const auto inv = a.inverse();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (a.get(i + 1, j + 1)) a_rows[static_cast<std::size_t>(i)] |= bit(j);
      if (inv.get(i + 1, j + 1)) a_inv[static_cast<std::size_t>(i)] |= bit(j);
    }

  // B = B0 + sum_k x_k E_k; B0 holds the diagonal and the fixed superdiagonal.
  Rows b0(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    b0[static_cast<std::size_t>(i)] = bit(i);
    if (i + 1 < m && ((i % 2 == 0) == first_entry)) b0[static_cast<std::size_t>(i)] |= bit(i + 1);
  }
  std::vector<std::pair<int, int>> unknowns;
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j) unknowns.emplace_back(i, j);

  // Linear condition B A + A^-1 B = 0.
  auto linear = [&](const Rows& x) {
    Rows left = multiply(x, a_rows), right = multiply(a_inv, x);
    for (std::size_t i = 0; i < left.size(); ++i) left[i] ^= right[i];
    return left;
  };
  const auto eqs = static_cast<std::size_t>(m * m);
  F2Matrix system(eqs, unknowns.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    Rows e(static_cast<std::size_t>(m), 0);
    e[static_cast<std::size_t>(unknowns[k].first)] = bit(unknowns[k].second);
    const auto image = linear(e);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if ((image[static_cast<std::size_t>(i)] >> j) & 1U) system.set(static_cast<std::size_t>(i * m + j), k);
  }
  BitRow rhs(eqs);
  const auto base = linear(b0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((base[static_cast<std::size_t>(i)] >> j) & 1U) rhs.set(static_cast<std::size_t>(i * m + j));
  // With no free entries the system is consistent iff rhs vanishes.
  const auto affine = unknowns.empty()
                          ? (rhs.none() ? std::optional<AffineSolution>(AffineSolution{BitRow(0), {}}) : std::nullopt)
                          : system.solve(rhs);
  if (!affine) return std::nullopt;

  const auto& kernel = affine->kernel;
  if (static_cast<int>(kernel.size()) > kMaxKernelSearchBits)
    throw MatrixError("solution space too large to search for size " + std::to_string(m));

  // Gray-code walk over the affine space, testing B^2 = I.
  BitRow x = affine->particular;
  const std::uint64_t total = std::uint64_t{1} << kernel.size();
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step > 0) x ^= kernel[static_cast<std::size_t>(std::countr_zero(step))];
    UnipotentMatrix b(m);
    for (int i = 0; i + 1 < m; ++i)
      if ((b0[static_cast<std::size_t>(i)] >> (i + 1)) & 1U) b.set(i + 1, i + 2);
    for (std::size_t k = 0; k < unknowns.size(); ++k)
      if (x.get(k)) b.set(unknowns[k].first + 1, unknowns[k].second + 1);
    if ((b * b).is_identity()) return b;
  }
  return std::nullopt;
}

LemmquadSolution solve_lemmquad(int n) {
  if (n <= 2) throw MatrixError("lemmquad requires n > 2, got " + std::to_string(n));
  if (n + 1 > kMaxMatrixSize) throw MatrixError("lemmquad size exceeds the matrix limit");
  LemmquadSolution s;
  s.n = n;
  s.a1 = s.a2 = UnipotentMatrix::jordan(n + 1);
  auto b1 = lemmquad_involution(n + 1, true);
  auto b2 = lemmquad_involution(n + 1, false);
  if (!b1 || !b2) throw MatrixError("no lemmquad solution exists for n = " + std::to_string(n));
  s.b1 = *b1;
  s.b2 = *b2;
  return s;
}

}  // namespace draag
