#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "draag/graph.hpp"

namespace draag {

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Letter {
  int generator = 0;  // 0 is x0; RAAG generators are 1..d
  int exponent = 1;   // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }
  auto operator<=>(const Letter&) const = default;
};

/// Word in x0, x1, ..., as a sequence of letters. The empty word is the identity.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static GroupWord generator(int index, int exponent = 1) { return GroupWord({{index, exponent}}); }
  /// [a,b] = a^-1 b^-1 a b.
  static GroupWord commutator(const GroupWord& a, const GroupWord& b);

  /// Parses "x5*x3^-1", "x1^2", "1". Throws WordError with the character offset.
  static GroupWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  int max_generator() const;

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& rhs) const;
  GroupWord power(int k) const;

  /// Exponent sums mod 2 as a bit mask (bit i for generator i).
  std::uint64_t parity_vector() const;

  std::string to_string() const;
  bool operator==(const GroupWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Element of the RAAG on a graph, held in its unique normal form: a reduced
/// word whose letter sequence is lexicographically least among all reduced
/// words for the element (letters ordered x1 < x1^-1 < x2 < ...).
class RaagElement {
 public:
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  GroupWord word() const { return GroupWord(letters_); }
  std::string to_string() const { return word().to_string(); }
  bool operator==(const RaagElement&) const = default;

 private:
  friend RaagElement normal_form(const Graph&, const GroupWord&);
  std::vector<Letter> letters_;
};

/// Throws WordError if x0 or a generator beyond the graph appears.
RaagElement normal_form(const Graph& g, const GroupWord& w);

/// Twist vector z = (z_1, ..., z_d) of words over x1..xd.
struct ZVector {
  std::vector<GroupWord> words;

  static ZVector trivial(int d) { return ZVector{std::vector<GroupWord>(static_cast<std::size_t>(d))}; }
  std::size_t size() const { return words.size(); }
};

/// epsilon_k: exponent-sum vector of z_k mod 2 (bit j for x_j).
std::vector<std::uint64_t> epsilon(const ZVector& z);

struct ActionViolation {
  enum class Kind { edge_not_preserved, not_involutive };
  Kind kind;
  int u = 0;  // generator (not_involutive) or first edge endpoint
  int v = 0;  // second edge endpoint
  std::string lhs;  // normal form obtained
  std::string rhs;  // normal form required
};

struct ActionReport {
  std::vector<ActionViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// phi(x_i) = z_i^-1 x_i^-1 z_i must preserve every edge relation and square to
/// the identity for the semidirect product to be well defined.
ActionReport validate_delta_action(const Graph& g, const ZVector& z);

/// Image of a word over x1..xd under phi.
GroupWord apply_delta(const ZVector& z, const GroupWord& w);

/// Relators of the Delta-RAAG presentation: [x_u,x_v] for each edge,
/// [x0,x_i^-1] x_i^2 [x_i,z_i] for each i, then x0^2.
std::vector<GroupWord> delta_raag_relators(const Graph& g, const ZVector& z);

/// Exact word problem in G_Gamma x| Delta: elements are (r, e) meaning r * x0^e.
struct DeltaRaagElement {
  RaagElement raag;
  bool x0 = false;
  bool is_identity() const { return raag.is_identity() && !x0; }
  bool operator==(const DeltaRaagElement&) const = default;
};

DeltaRaagElement delta_normal_form(const Graph& g, const ZVector& z, const GroupWord& w);

}  // namespace draag
