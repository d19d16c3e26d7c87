#include "draag/raag_words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace draag {

namespace {

int letter_rank(const Letter& l) { return 2 * l.generator + (l.exponent > 0 ? 0 : 1); }

bool commute(const Graph& g, int a, int b) { return a != b && g.adjacent(a, b); }

std::vector<Letter> reduce(const Graph& g, const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  for (const auto& a : letters) {
    bool cancelled = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      if (out[j].generator == a.generator) {
        if (out[j].exponent == -a.exponent) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!commute(g, out[j].generator, a.generator)) break;
    }
    if (!cancelled) out.push_back(a);
  }
  return out;
}

// Lexicographically least word in the commutation class of a reduced word.
std::vector<Letter> lex_least(const Graph& g, std::vector<Letter> rest) {
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool available = true;
      for (std::size_t j = 0; j < i && available; ++j)
        available = commute(g, rest[j].generator, rest[i].generator);
      if (available && (best == rest.size() || letter_rank(rest[i]) < letter_rank(rest[best]))) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

GroupWord delta_image(const ZVector& z, int i) {
  const GroupWord& zi = z.words[static_cast<std::size_t>(i - 1)];
  return zi.inverse() * GroupWord::generator(i, -1) * zi;
}

void check_raag_word(const Graph& g, const GroupWord& w) {
  for (const auto& l : w.letters()) {
    if (l.generator == 0) throw WordError("x0 is not a RAAG generator");
    if (l.generator < 0 || l.generator > g.vertex_count())
      throw WordError("generator x" + std::to_string(l.generator) + " outside 1.." +
                      std::to_string(g.vertex_count()));
  }
}

void check_z(const Graph& g, const ZVector& z) {
  if (static_cast<int>(z.size()) != g.vertex_count())
    throw WordError("z has " + std::to_string(z.size()) + " entries, graph has " +
                    std::to_string(g.vertex_count()) + " vertices");
  for (const auto& w : z.words) check_raag_word(g, w);
}

}  // namespace

GroupWord GroupWord::commutator(const GroupWord& a, const GroupWord& b) {
  return a.inverse() * b.inverse() * a * b;
}

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> WordError {
    return WordError("word \"" + std::string(text) + "\" at offset " + std::to_string(pos) + ": " + what);
  };
  auto read_int = [&](int& out) {
    const auto* begin = text.data() + pos;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin) throw fail("expected integer");
    pos += static_cast<std::size_t>(ptr - begin);
  };

  skip_space();
  if (pos == text.size()) throw fail("empty word (use \"1\" for the identity)");
  while (true) {
    skip_space();
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
    } else if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) {
      ++pos;
      int index = 0;
      read_int(index);
      if (index < 0) throw fail("negative generator index");
      int exponent = 1;
      skip_space();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_space();
        read_int(exponent);
      }
      const Letter l{index, exponent > 0 ? 1 : -1};
      for (int k = 0; k < std::abs(exponent); ++k) letters.push_back(l);
    } else {
      throw fail("expected x<k> or 1");
    }
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw fail("expected '*'");
    ++pos;
  }
  return GroupWord(std::move(letters));
}

int GroupWord::max_generator() const {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return GroupWord(std::move(out));
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return GroupWord(std::move(out));
}

GroupWord GroupWord::power(int k) const {
  const GroupWord base = k < 0 ? inverse() : *this;
  GroupWord out;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

std::uint64_t GroupWord::parity_vector() const {
  std::uint64_t bits = 0;
  for (const auto& l : letters_) bits ^= std::uint64_t{1} << l.generator;
  return bits;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    out += 'x' + std::to_string(letters_[i].generator);
    if (letters_[i].exponent < 0) out += "^-1";
  }
  return out;
}

RaagElement normal_form(const Graph& g, const GroupWord& w) {
  check_raag_word(g, w);
  RaagElement e;
  e.letters_ = lex_least(g, reduce(g, w.letters()));
  return e;
}

std::vector<std::uint64_t> epsilon(const ZVector& z) {
  std::vector<std::uint64_t> out;
  out.reserve(z.size());
  for (const auto& w : z.words) out.push_back(w.parity_vector());
  return out;
}

GroupWord apply_delta(const ZVector& z, const GroupWord& w) {
  GroupWord out;
  for (const auto& l : w.letters()) {
    if (l.generator < 1 || l.generator > static_cast<int>(z.size()))
      throw WordError("delta action applies to x1..x" + std::to_string(z.size()) + " only");
    const GroupWord image = delta_image(z, l.generator);
    out = out * (l.exponent > 0 ? image : image.inverse());
  }
  return out;
}

ActionReport validate_delta_action(const Graph& g, const ZVector& z) {
  check_z(g, z);
  ActionReport report;
  for (const auto& [u, v] : g.edges()) {
    const auto c = normal_form(g, GroupWord::commutator(delta_image(z, u), delta_image(z, v)));
    if (!c.is_identity())
      report.violations.push_back({ActionViolation::Kind::edge_not_preserved, u, v, c.to_string(), "1"});
  }
  for (int i = 1; i <= g.vertex_count(); ++i) {
    const auto twice = normal_form(g, apply_delta(z, delta_image(z, i)));
    const auto target = normal_form(g, GroupWord::generator(i));
    if (twice != target)
      report.violations.push_back(
          {ActionViolation::Kind::not_involutive, i, 0, twice.to_string(), target.to_string()});
  }
  return report;
}

std::vector<GroupWord> delta_raag_relators(const Graph& g, const ZVector& z) {
  check_z(g, z);
  std::vector<GroupWord> out;
  for (const auto& [u, v] : g.edges())
    out.push_back(GroupWord::commutator(GroupWord::generator(u), GroupWord::generator(v)));
  const GroupWord x0 = GroupWord::generator(0);
  for (int i = 1; i <= g.vertex_count(); ++i) {
    const GroupWord xi = GroupWord::generator(i);
    out.push_back(GroupWord::commutator(x0, xi.inverse()) * xi.power(2) *
                  GroupWord::commutator(xi, z.words[static_cast<std::size_t>(i - 1)]));
  }
  out.push_back(x0.power(2));
  return out;
}

DeltaRaagElement delta_normal_form(const Graph& g, const ZVector& z, const GroupWord& w) {
  check_z(g, z);
  GroupWord accumulated;
  bool twisted = false;
  for (const auto& l : w.letters()) {
    if (l.generator == 0) {
      twisted = !twisted;
      continue;
    }
    const GroupWord letter({l});
    accumulated = accumulated * (twisted ? apply_delta(z, letter) : letter);
  }
  return DeltaRaagElement{normal_form(g, accumulated), twisted};
}

}  // namespace draag
