#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "draag/raag_words.hpp"

namespace draag {

class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxMatrixSize = 64;

/// Upper unitriangular n x n matrix over F2. Entries are 1-based; row i is a
/// 64-bit word with bit j-1 holding entry (i,j).
class UnipotentMatrix {
 public:
  explicit UnipotentMatrix(int n = 1);

  static UnipotentMatrix identity(int n) { return UnipotentMatrix(n); }
  /// I + sum_i delta_{i,i+1}.
  static UnipotentMatrix jordan(int n);
  /// Parses rows written as bit strings, e.g. {"110", "011", "001"}.
  static UnipotentMatrix from_bit_strings(const std::vector<std::string>& rows);

  int size() const { return n_; }
  bool get(int i, int j) const;
  /// Only strictly upper entries may be written.
  void set(int i, int j, bool value = true);

  UnipotentMatrix operator*(const UnipotentMatrix& rhs) const;
  UnipotentMatrix inverse() const;
  UnipotentMatrix power(int k) const;
  /// a^-1 b^-1 a b.
  static UnipotentMatrix commutator(const UnipotentMatrix& a, const UnipotentMatrix& b);

  bool is_identity() const;
  bool operator==(const UnipotentMatrix&) const = default;

  /// Copy of this matrix placed as a diagonal block of an identity of size
  /// `total`, starting at row/column `offset + 1`.
  UnipotentMatrix embed(int total, int offset) const;

  std::vector<std::string> to_bit_strings() const;

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

/// Value of a word with images[i] assigned to generator i.
UnipotentMatrix evaluate(const GroupWord& w, const std::vector<UnipotentMatrix>& images);

struct MorphismCheck {
  bool ok = true;
  std::optional<std::size_t> failing_index;
  UnipotentMatrix failing_value;
};

/// Evaluates every relator; ok iff each one is the identity. Throws
/// MatrixError if a relator uses a generator without an image or sizes differ.
MorphismCheck verify_morphism(const std::vector<GroupWord>& relators, const std::vector<UnipotentMatrix>& images);

struct LemmquadSolution {
  int n = 0;
  UnipotentMatrix a1, a2, b1, b2;  // all of size n+1
};

/// Matrices of size n+1 with A1 = A2 = I + sum delta_{i,i+1}, B1 / B2 with
/// superdiagonals 1,0,1,... / 0,1,0,..., B^2 = I and B A B^-1 A^-1 = A^-2.
/// Requires n > 2; throws MatrixError otherwise or if no solution exists.
LemmquadSolution solve_lemmquad(int n);

/// Same construction for any matrix size m >= 2: an involution B with the
/// alternating superdiagonal starting at `first_entry` and B J B = J^-1.
std::optional<UnipotentMatrix> lemmquad_involution(int m, bool first_entry);

/// B^2 = I and B A B^-1 A^-1 = A^-2.
bool lemmquad_identity_holds(const UnipotentMatrix& a, const UnipotentMatrix& b);

}  // namespace draag
