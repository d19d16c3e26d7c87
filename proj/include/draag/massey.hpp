#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "draag/f2.hpp"
#include "draag/quad_alg.hpp"
#include "draag/raag_words.hpp"
#include "draag/unipotent.hpp"

namespace draag {

class MasseyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The three group families handled here:
///   c4_delta  Delta-RAAG on the square graph with trivial twist, generators x0..x4
///   c4_raag   RAAG on the square graph, generators x1..x4
///   sap       free product of k copies of Z/2, generators y1..yk
struct Target {
  enum class Kind { c4_delta, c4_raag, sap };
  Kind kind = Kind::c4_delta;
  int k = 3;

  static Target c4_delta() { return {Kind::c4_delta, 3}; }
  static Target c4_raag() { return {Kind::c4_raag, 3}; }
  static Target sap(int k);
  /// "c4-delta", "c4-raag", "sap:<k>" (plain "sap" means k = 3).
  static Target parse(std::string_view text);

  std::string name() const;
  int first_generator() const { return kind == Kind::c4_delta ? 0 : 1; }
  int last_generator() const { return kind == Kind::sap ? k : 4; }
  int generator_count() const { return last_generator() - first_generator() + 1; }
  std::vector<GroupWord> relators() const;
  /// Quadratic algebra whose dual carries the cup product.
  QuadraticPresentation algebra() const;
};

/// Degree-1 class: bit i is the value on generator i (bit 0 only for c4_delta).
using Character = std::uint64_t;

/// Parses "0,1,0,0,0;1,1,0,0,0" into characters, one coordinate per generator
/// in the target's order.
std::vector<Character> parse_characters(const Target& t, std::string_view text);
std::string format_character(const Target& t, Character a);
/// Human-readable sum of chi0 / psi_i / y_i.
std::string character_name(const Target& t, Character a);

/// Cup product H^1 x H^1 -> H^2 in the degree-2 basis of the dual algebra.
class CupTable {
 public:
  explicit CupTable(const Target& t);

  const Target& target() const { return target_; }
  const QuadraticPresentation& dual() const { return dual_; }
  const DegreeTwoBasis& basis() const { return basis_; }

  BitRow cup(Character a, Character b) const;
  bool vanishes(Character a, Character b) const { return cup(a, b).none(); }

 private:
  Target target_;
  QuadraticPresentation dual_;
  DegreeTwoBasis basis_;
};

enum class VanishingClass { g13, g24, shift_by_chi0, f13, f24, equal };
std::string to_string(VanishingClass c);

inline constexpr Character kG13 = 0b01011;  // chi0, psi1, psi3
inline constexpr Character kG24 = 0b10101;  // chi0, psi2, psi4
inline constexpr Character kF13 = 0b01010;
inline constexpr Character kF24 = 0b10100;
inline constexpr Character kChi0 = 0b00001;

/// Which alternative a nonzero pair with vanishing cup product falls under.
/// Throws MasseyError for zero input, a nonvanishing cup, a sap target, or a
/// vanishing pair that fits no class.
VanishingClass classify_vanishing_pair(const CupTable& table, Character a, Character b);

struct MasseyBlock {
  int start = 0;   // first character index (0-based)
  int length = 0;  // number of characters in the run
  std::string label;
};

struct MasseySolution {
  int size = 0;  // matrices are size x size, size = n + 1
  std::vector<UnipotentMatrix> images;  // indexed by generator number
  std::vector<MasseyBlock> blocks;
};

/// Representation into U_{n+1} whose (i,i+1) entries give the characters.
MasseySolution strong_massey_solve(const CupTable& table, const std::vector<Character>& alphas);

/// rho(g)_{i,i+1} == alpha_i(g) for every generator and every i.
bool superdiagonal_matches(const Target& t, const std::vector<UnipotentMatrix>& images,
                           const std::vector<Character>& alphas);

/// Words in Y1..Yk (letters 1..k) with coefficient 1; no letter repeats adjacently.
using TruncatedSeries2 = std::set<std::vector<int>>;

/// Image of w under y_i -> 1 + Y_i in the algebra modulo Y_i^2 and degree > N.
TruncatedSeries2 magnus_expand(int k, const GroupWord& w, int order);

/// Free reduction in the free product of k copies of Z/2.
GroupWord sap_reduce(const GroupWord& w);

struct KuWitness {
  int size = 0;                         // n, the matrix size
  std::vector<int> word;                // detecting word W, letters 1..k
  std::vector<UnipotentMatrix> images;  // by generator number of the target
  UnipotentMatrix value;                // image of g
  std::string projection;               // "G13" / "G24" for c4_delta inputs
};

/// Throws MasseyError if g is trivial or not detected up to degree N.
KuWitness ku_witness_sap(int k, const GroupWord& g, int order);

struct KuResult {
  std::optional<KuWitness> witness;  // empty: inconclusive at this truncation
  std::string note;
};

/// Throws MasseyError if g is trivial in the C4 Delta-RAAG.
KuResult ku_witness_c4(const GroupWord& g, int order);

/// Images of x0..x4 of the projection onto G13 (or G24) ~ Z/2 * Z/2 * Z/2, as
/// words in y1..y3.
std::vector<GroupWord> c4_projection(bool second);

}  // namespace draag
