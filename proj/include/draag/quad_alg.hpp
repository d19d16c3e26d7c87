#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "draag/f2.hpp"
#include "draag/graph.hpp"
#include "draag/raag_words.hpp"
#include "draag/series.hpp"

namespace draag {

// Everything in this module is over F2: a commutator [A,B] expands to AB + BA.

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degree-2 monomial as a pair of generator positions.
using Monomial2 = std::pair<int, int>;
/// F2-linear combination of degree-2 monomials, sorted, no repeats.
using Quadric = std::vector<Monomial2>;

/// Quadratic algebra: degree-1 generators modulo degree-2 relations.
class QuadraticPresentation {
 public:
  QuadraticPresentation() = default;
  /// Cancels repeated monomials inside each relation and drops relations that
  /// are zero or dependent on earlier ones.
  QuadraticPresentation(std::vector<std::string> generators, std::vector<Quadric> relations);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Quadric>& relations() const { return relations_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }

  /// Relations as rows over the g*g monomials, column a*g + b for X_a X_b.
  F2Matrix relation_matrix() const;
  std::string monomial_name(const Monomial2& m) const;
  std::string quadric_name(const Quadric& q) const;

 private:
  std::vector<std::string> generators_;
  std::vector<Quadric> relations_;
};

/// Both presentations have the same generator count and relation span.
bool same_relation_span(const QuadraticPresentation& a, const QuadraticPresentation& b);

/// Generators X0..Xd; relations X0^2, [Xu,Xv] per edge,
/// [X0,Xk] + [Xk,eps_k] + Xk^2 per vertex. Throws AlgebraError if z is invalid.
QuadraticPresentation build_ez(const Graph& g, const ZVector& z);

/// Generators X1..Xd with [Xu,Xv] for each edge.
QuadraticPresentation build_raag_algebra(const Graph& g);

/// Generator order, greatest first, as generator positions.
using GeneratorOrder = std::vector<int>;

/// Parses "x0,x1,x3,x2,x4" (names matched case-insensitively). Throws
/// AlgebraError unless every generator appears exactly once.
GeneratorOrder parse_order(const QuadraticPresentation& p, std::string_view text);
GeneratorOrder natural_order(const QuadraticPresentation& p);

using NcWord = std::vector<int>;
/// F2 noncommutative polynomial.
using NcPolynomial = std::set<NcWord>;

struct RewriteRule {
  Monomial2 head;
  Quadric tail;  // every monomial strictly below head
};

class RewritingSystem {
 public:
  RewritingSystem(const QuadraticPresentation& p, GeneratorOrder order);

  const std::vector<RewriteRule>& rules() const { return rules_; }
  const GeneratorOrder& order() const { return order_; }
  /// Degree-lexicographic comparison of equal-length words.
  bool less(const NcWord& a, const NcWord& b) const;
  bool is_head(int a, int b) const { return head_index_[static_cast<std::size_t>(a * g_ + b)] >= 0; }

  std::vector<Monomial2> leading_monomials() const;
  /// Words abc with ab and bc both leading monomials.
  std::vector<NcWord> critical_monomials() const;

  /// Replaces the head at `pos` (word[pos], word[pos+1]) by its tail.
  NcPolynomial rewrite_at(const NcWord& word, std::size_t pos) const;
  /// Exhaustive rewriting: always the largest reducible monomial, leftmost head.
  NcPolynomial normal_form(NcPolynomial poly) const;

  /// Number of degree-n words avoiding all leading monomials.
  std::vector<std::uint64_t> reduced_word_counts(int max_degree) const;

 private:
  int g_;
  GeneratorOrder order_;
  std::vector<int> rank_;  // larger rank = greater generator
  std::vector<RewriteRule> rules_;
  std::vector<int> head_index_;
};

struct CriticalCheck {
  NcWord monomial;
  NcPolynomial left;   // rewrite the leftmost pair first
  NcPolynomial right;  // rewrite the rightmost pair first
  bool confluent() const { return left == right; }
};

struct PbwResult {
  std::vector<RewriteRule> rules;
  std::vector<CriticalCheck> checks;
  bool confluent = true;
  std::optional<CriticalCheck> counterexample;  // first failing critical monomial
};

PbwResult pbw_check(const QuadraticPresentation& p, const GeneratorOrder& order);

std::string format_polynomial(const QuadraticPresentation& p, const NcPolynomial& poly);
std::string format_word(const QuadraticPresentation& p, const NcWord& w);

struct HilbertOptions {
  int max_order = 8;
  std::size_t max_columns = std::size_t{1} << 24;
};

/// dim of each degree n <= order of the quotient algebra, by rank computations
/// degree by degree (no monomial order involved in the result).
std::vector<std::uint64_t> hilbert_dimensions(const QuadraticPresentation& p, int order,
                                              const HilbertOptions& options = {});
IntSeries hilbert_series(const QuadraticPresentation& p, int order, const HilbertOptions& options = {});

/// Quadratic dual: dual generators, relation space = annihilator of the
/// relation span under the monomial pairing. Relations in reduced echelon form.
QuadraticPresentation quadratic_dual(const QuadraticPresentation& p);

/// chi0 / psi_k for X0 / Xk, otherwise name + "*".
std::string dual_generator_name(const std::string& name);

/// Monomial basis of the degree-2 part of a quadratic algebra: the monomials
/// that are not leading terms when relations are echelonised with the smallest
/// monomials (under `order`) as pivots.
class DegreeTwoBasis {
 public:
  DegreeTwoBasis(const QuadraticPresentation& algebra, const GeneratorOrder& order);

  /// Listed from largest to smallest under the order.
  const std::vector<Monomial2>& monomials() const { return monomials_; }
  std::size_t dimension() const { return monomials_.size(); }

  /// Class of a degree-2 element (vector over the g*g monomials) in basis coordinates.
  BitRow coordinates(const BitRow& element) const;
  BitRow coordinates(const Monomial2& m) const;

 private:
  int g_;
  std::vector<Monomial2> monomials_;
  std::vector<std::size_t> basis_position_;  // by monomial column, or npos
  F2Matrix reduced_;
  std::vector<std::size_t> pivots_;
};

DegreeTwoBasis h2_basis(const QuadraticPresentation& dual, const GeneratorOrder& order);
DegreeTwoBasis h2_basis(const QuadraticPresentation& dual);

}  // namespace draag
