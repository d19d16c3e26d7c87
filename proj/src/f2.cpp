#include "draag/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace draag {

BitRow& BitRow::operator^=(const BitRow& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitRow size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitRow::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitRow::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitRow::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitRow(cols)) {}

void F2Matrix::append_row(BitRow row) {
  if (row.size() != cols_) throw std::invalid_argument("F2Matrix row width mismatch");
  rows_.push_back(std::move(row));
}

std::vector<std::size_t> F2Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols_ && next < rows_.size(); ++c) {
    std::size_t r = next;
    while (r < rows_.size() && !rows_[r].get(c)) ++r;
    if (r == rows_.size()) continue;
    std::swap(rows_[r], rows_[next]);
    for (std::size_t other = 0; other < rows_.size(); ++other)
      if (other != next && rows_[other].get(c)) rows_[other] ^= rows_[next];
    pivots.push_back(c);
    ++next;
  }
  rows_.resize(next);
  return pivots;
}

std::size_t F2Matrix::rank() const {
  F2Matrix copy = *this;
  return copy.rref().size();
}

std::vector<BitRow> F2Matrix::kernel() const {
  F2Matrix reduced = *this;
  const auto pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<BitRow> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    BitRow v(cols_);
    v.set(free);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (reduced.get(r, free)) v.set(pivots[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> F2Matrix::solve(const BitRow& rhs) const {
  if (rhs.size() != rows()) throw std::invalid_argument("rhs length must equal row count");
  // Augment with the right-hand side as an extra column.
  F2Matrix augmented(0, cols_ + 1);
  for (std::size_t r = 0; r < rows(); ++r) {
    BitRow row(cols_ + 1);
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) row.set(c);
    if (rhs.get(r)) row.set(cols_);
    augmented.append_row(std::move(row));
  }
  const auto pivots = augmented.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;

  AffineSolution solution{BitRow(cols_), kernel()};
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (augmented.get(r, cols_)) solution.particular.set(pivots[r]);
  return solution;
}

SparseEchelon::SparseEchelon(std::size_t cols) : pivot_row_(cols, -1) {}

SparseEchelon::Row SparseEchelon::add(const Row& a, const Row& b) {
  Row out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool SparseEchelon::insert(Row row) {
  while (!row.empty()) {
    const auto lead = row.back();
    const auto at = pivot_row_[lead];
    if (at < 0) {
      pivot_row_[lead] = static_cast<std::int64_t>(rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    row = add(row, rows_[static_cast<std::size_t>(at)]);
  }
  return false;
}

void SparseEchelon::finalize() {
  // Increasing pivot order: every row a stored row can hit has a smaller
  // pivot and is already fully reduced.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].back() < rows_[b].back(); });
  for (auto idx : order) {
    Row& row = rows_[idx];
    const auto lead = row.back();
    Row result{lead};
    Row pending(row.begin(), row.end() - 1);
    while (!pending.empty()) {
      const auto col = pending.back();
      pending.pop_back();
      const auto at = pivot_row_[col];
      if (at < 0) {
        result.push_back(col);
        continue;
      }
      const Row& other = rows_[static_cast<std::size_t>(at)];
      pending = add(pending, Row(other.begin(), other.end() - 1));
    }
    std::sort(result.begin(), result.end());
    row = std::move(result);
  }
}

SparseEchelon::Row SparseEchelon::tail(std::uint32_t col) const {
  const auto at = pivot_row_[col];
  if (at < 0) return {};
  const Row& row = rows_[static_cast<std::size_t>(at)];
  return Row(row.begin(), row.end() - 1);
}

}  // namespace draag
