#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace draag {

/// Dense bit-packed row vector over F2.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitRow& operator^=(const BitRow& other);
  bool operator==(const BitRow& other) const = default;

  bool none() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or size() when the row is zero.
  std::size_t first_set() const;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct AffineSolution {
  BitRow particular;
  std::vector<BitRow> kernel;
};

/// Dense matrix over F2 with bit-packed rows.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  const BitRow& row(std::size_t r) const { return rows_[r]; }
  void append_row(BitRow row);

  /// Reduced row echelon form in place, pivots taken leftmost first.
  /// Zero rows are dropped; returns the pivot column of each remaining row.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  /// Basis of {x : M x = 0}.
  std::vector<BitRow> kernel() const;

  /// Solves M x = rhs; nullopt when inconsistent.
  std::optional<AffineSolution> solve(const BitRow& rhs) const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitRow> rows_;
};

/// Incremental sparse echelon basis over F2. Rows are sorted column lists;
/// each stored row is keyed by its largest column.
class SparseEchelon {
 public:
  using Row = std::vector<std::uint32_t>;

  explicit SparseEchelon(std::size_t cols);

  std::size_t cols() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces `row` and stores it if independent. Returns true when the rank grew.
  bool insert(Row row);

  /// Back-substitutes so no stored row contains another row's pivot.
  void finalize();

  bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }
  /// Row whose pivot is `col`, excluding the pivot itself (valid after finalize()).
  Row tail(std::uint32_t col) const;

  /// Symmetric difference of two sorted column lists.
  static Row add(const Row& a, const Row& b);

 private:
  std::vector<std::int64_t> pivot_row_;
  std::vector<Row> rows_;
};

}  // namespace draag
