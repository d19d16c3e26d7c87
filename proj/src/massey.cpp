#include "draag/massey.hpp"

#include <algorithm>

namespace draag {

namespace {

bool value_at(Character a, int generator) { return (a >> generator) & 1U; }

Character generator_mask(const Target& t) {
  Character mask = 0;
  for (int g = t.first_generator(); g <= t.last_generator(); ++g) mask |= Character{1} << g;
  return mask;
}

void check_character(const Target& t, Character a) {
  if ((a & ~generator_mask(t)) != 0) throw MasseyError("character has coordinates outside " + t.name());
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    out.emplace_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

// I + sum_i alpha_i(generator) delta_{i,i+1}.
UnipotentMatrix superdiagonal_image(const std::vector<Character>& alphas, int generator) {
  UnipotentMatrix m(static_cast<int>(alphas.size()) + 1);
  for (std::size_t i = 0; i < alphas.size(); ++i)
    if (value_at(alphas[i], generator)) m.set(static_cast<int>(i) + 1, static_cast<int>(i) + 2);
  return m;
}

struct RunSolution {
  std::vector<UnipotentMatrix> images;  // by generator number
  std::string label;
};

RunSolution solve_sap_run(const Target& t, const std::vector<Character>& run) {
  RunSolution s;
  s.label = "sap";
  s.images.assign(static_cast<std::size_t>(t.last_generator()) + 1, UnipotentMatrix(static_cast<int>(run.size()) + 1));
  for (int g = t.first_generator(); g <= t.last_generator(); ++g)
    s.images[static_cast<std::size_t>(g)] = superdiagonal_image(run, g);
  return s;
}

// Cases (a)/(b): go through G13 (or G24) ~ Z/2 * Z/2 * Z/2 with
// y1 = x0, y2 = x0 x_p, y3 = x0 x_q.
RunSolution solve_through_sap(const std::vector<Character>& run, int p, int q, std::string label) {
  std::vector<Character> pulled;
  for (auto a : run) {
    const bool y1 = value_at(a, 0);
    Character c = 0;
    if (y1) c |= 0b0010;
    if (y1 != value_at(a, p)) c |= 0b0100;
    if (y1 != value_at(a, q)) c |= 0b1000;
    pulled.push_back(c);
  }
  const auto sap = solve_sap_run(Target::sap(3), pulled);
  RunSolution s;
  s.label = std::move(label);
  const int m = static_cast<int>(run.size()) + 1;
  s.images.assign(5, UnipotentMatrix(m));
  s.images[0] = sap.images[1];
  s.images[static_cast<std::size_t>(p)] = sap.images[1] * sap.images[2];
  s.images[static_cast<std::size_t>(q)] = sap.images[1] * sap.images[3];
  return s;
}

RunSolution solve_run(const CupTable& table, const std::vector<Character>& run) {
  const Target& t = table.target();
  const int m = static_cast<int>(run.size()) + 1;
  if (t.kind == Target::Kind::sap) return solve_sap_run(t, run);
  if (run.size() == 1) {
    auto s = solve_sap_run(t, run);
    s.label = "single";
    return s;
  }

  const auto cls = classify_vanishing_pair(table, run[0], run[1]);
  for (std::size_t i = 1; i + 1 < run.size(); ++i)
    if (classify_vanishing_pair(table, run[i], run[i + 1]) != cls)
      throw MasseyError("internal: consecutive pairs fall into different classes");

  switch (cls) {
    case VanishingClass::g13:
      return solve_through_sap(run, 1, 3, "a");
    case VanishingClass::g24:
      return solve_through_sap(run, 2, 4, "b");
    case VanishingClass::shift_by_chi0: {
      RunSolution s;
      s.label = "c";
      const auto b = lemmquad_involution(m, value_at(run[0], 0));
      if (!b) throw MasseyError("no involution B exists for block size " + std::to_string(m));
      const auto a = UnipotentMatrix::jordan(m);
      s.images.assign(5, UnipotentMatrix(m));
      s.images[0] = *b;
      for (int g = 1; g <= 4; ++g)
        if (value_at(run[0], g)) s.images[static_cast<std::size_t>(g)] = a;
      return s;
    }
    case VanishingClass::f13:
    case VanishingClass::f24: {
      auto s = solve_sap_run(t, run);
      s.label = cls == VanishingClass::f13 ? "F13" : "F24";
      return s;
    }
    case VanishingClass::equal: {
      RunSolution s;
      s.label = "equal";
      s.images.assign(5, UnipotentMatrix(m));
      for (int g = 1; g <= 4; ++g)
        if (value_at(run[0], g)) s.images[static_cast<std::size_t>(g)] = UnipotentMatrix::jordan(m);
      return s;
    }
  }
  throw MasseyError("internal: unhandled vanishing class");
}

const Graph& square() {
  static const Graph g = Graph::cycle(4);
  return g;
}

GroupWord project(const GroupWord& g, const std::vector<GroupWord>& images) {
  GroupWord out;
  for (const auto& l : g.letters()) {
    const auto& img = images[static_cast<std::size_t>(l.generator)];
    out = out * (l.exponent > 0 ? img : img.inverse());
  }
  return out;
}

}  // namespace

Target Target::sap(int k) {
  if (k < 1 || k > 62) throw MasseyError("sap target needs 1..62 factors");
  return {Kind::sap, k};
}

Target Target::parse(std::string_view text) {
  if (text == "c4-delta") return c4_delta();
  if (text == "c4-raag") return c4_raag();
  if (text == "sap") return sap(3);
  if (text.substr(0, 4) == "sap:") {
    try {
      return sap(std::stoi(std::string(text.substr(4))));
    } catch (const std::logic_error&) {
      throw MasseyError("bad factor count in target \"" + std::string(text) + "\"");
    }
  }
  throw MasseyError("unknown target \"" + std::string(text) + "\" (expected c4-delta, c4-raag or sap:<k>)");
}

std::string Target::name() const {
  switch (kind) {
    case Kind::c4_delta:
      return "c4-delta";
    case Kind::c4_raag:
      return "c4-raag";
    case Kind::sap:
      return "sap:" + std::to_string(k);
  }
  return "";
}

std::vector<GroupWord> Target::relators() const {
  std::vector<GroupWord> out;
  switch (kind) {
    case Kind::c4_delta:
      return delta_raag_relators(square(), ZVector::trivial(4));
    case Kind::c4_raag:
      for (const auto& [u, v] : square().edges())
        out.push_back(GroupWord::commutator(GroupWord::generator(u), GroupWord::generator(v)));
      return out;
    case Kind::sap:
      for (int j = 1; j <= k; ++j) out.push_back(GroupWord::generator(j).power(2));
      return out;
  }
  return out;
}

QuadraticPresentation Target::algebra() const {
  switch (kind) {
    case Kind::c4_delta:
      return build_ez(square(), ZVector::trivial(4));
    case Kind::c4_raag:
      return build_raag_algebra(square());
    case Kind::sap: {
      std::vector<std::string> gens;
      std::vector<Quadric> rels;
      for (int j = 0; j < k; ++j) {
        gens.push_back("Y" + std::to_string(j + 1));
        rels.push_back({{j, j}});
      }
      return QuadraticPresentation(std::move(gens), std::move(rels));
    }
  }
  return {};
}

std::vector<Character> parse_characters(const Target& t, std::string_view text) {
  std::vector<Character> out;
  const auto groups = split(text, ';');
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto coords = split(groups[gi], ',');
    if (static_cast<int>(coords.size()) != t.generator_count())
      throw MasseyError("character " + std::to_string(gi + 1) + ": expected " + std::to_string(t.generator_count()) +
                        " coordinates, got " + std::to_string(coords.size()));
    Character a = 0;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const auto v = trim(coords[c]);
      if (v != "0" && v != "1")
        throw MasseyError("character " + std::to_string(gi + 1) + ", coordinate " + std::to_string(c + 1) +
                          ": expected 0 or 1");
      if (v == "1") a |= Character{1} << (t.first_generator() + static_cast<int>(c));
    }
    out.push_back(a);
  }
  return out;
}

std::string format_character(const Target& t, Character a) {
  std::string out;
  for (int g = t.first_generator(); g <= t.last_generator(); ++g) {
    if (!out.empty()) out += ',';
    out += value_at(a, g) ? '1' : '0';
  }
  return out;
}

std::string character_name(const Target& t, Character a) {
  std::string out;
  for (int g = t.first_generator(); g <= t.last_generator(); ++g) {
    if (!value_at(a, g)) continue;
    if (!out.empty()) out += '+';
    if (t.kind == Target::Kind::sap)
      out += "eta" + std::to_string(g);
    else
      out += g == 0 ? "chi0" : "psi" + std::to_string(g);
  }
  return out.empty() ? "0" : out;
}

CupTable::CupTable(const Target& t)
    : target_(t),
      dual_(quadratic_dual(t.algebra())),
      basis_(dual_, t.kind == Target::Kind::c4_delta ? GeneratorOrder{0, 1, 3, 2, 4} : natural_order(dual_)) {}

BitRow CupTable::cup(Character a, Character b) const {
  check_character(target_, a);
  check_character(target_, b);
  const int g = target_.generator_count();
  const int offset = target_.first_generator();
  BitRow v(static_cast<std::size_t>(g * g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      if (value_at(a, i + offset) && value_at(b, j + offset)) v.flip(static_cast<std::size_t>(i * g + j));
  return basis_.coordinates(v);
}

std::string to_string(VanishingClass c) {
  switch (c) {
    case VanishingClass::g13:
      return "G13";
    case VanishingClass::g24:
      return "G24";
    case VanishingClass::shift_by_chi0:
      return "shift-by-chi0";
    case VanishingClass::f13:
      return "F13";
    case VanishingClass::f24:
      return "F24";
    case VanishingClass::equal:
      return "equal";
  }
  return "";
}

VanishingClass classify_vanishing_pair(const CupTable& table, Character a, Character b) {
  const Target& t = table.target();
  if (t.kind == Target::Kind::sap) throw MasseyError("classification is defined for the square-graph targets only");
  if (a == 0 || b == 0) throw MasseyError("classification needs nonzero characters");
  if (!table.vanishes(a, b))
    throw MasseyError("cup product " + character_name(t, a) + " u " + character_name(t, b) + " is nonzero");

  auto inside = [](Character x, Character space) { return (x & ~space) == 0; };
  if (t.kind == Target::Kind::c4_delta) {
    if (inside(a, kG13) && inside(b, kG13) && a != kChi0 && b != kChi0) return VanishingClass::g13;
    if (inside(a, kG24) && inside(b, kG24) && a != kChi0 && b != kChi0) return VanishingClass::g24;
    const bool outside_a = !inside(a, kG13) && !inside(a, kG24);
    const bool outside_b = !inside(b, kG13) && !inside(b, kG24);
    if ((a ^ b) == kChi0 && outside_a && outside_b) return VanishingClass::shift_by_chi0;
  } else {
    if (inside(a, kF13) && inside(b, kF13)) return VanishingClass::f13;
    if (inside(a, kF24) && inside(b, kF24)) return VanishingClass::f24;
    if (a == b && !inside(a, kF13) && !inside(a, kF24)) return VanishingClass::equal;
  }
  throw MasseyError("vanishing pair (" + character_name(t, a) + ", " + character_name(t, b) +
                    ") fits no class; this contradicts the classification");
}

MasseySolution strong_massey_solve(const CupTable& table, const std::vector<Character>& alphas) {
  const Target& t = table.target();
  const int n = static_cast<int>(alphas.size());
  if (n + 1 > kMaxMatrixSize) throw MasseyError("at most " + std::to_string(kMaxMatrixSize - 1) + " characters");
  for (auto a : alphas) check_character(t, a);
  for (int i = 0; i + 1 < n; ++i)
    if (!table.vanishes(alphas[static_cast<std::size_t>(i)], alphas[static_cast<std::size_t>(i) + 1]))
      throw MasseyError("cup product of characters " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                        " is nonzero");

  MasseySolution sol;
  sol.size = n + 1;
  sol.images.assign(static_cast<std::size_t>(t.last_generator()) + 1, UnipotentMatrix(n + 1));
  // Runs of nonzero characters are solved separately and placed on the diagonal;
  // a zero character leaves its superdiagonal entry empty between two blocks.
  for (int s = 0; s < n;) {
    if (alphas[static_cast<std::size_t>(s)] == 0) {
      ++s;
      continue;
    }
    int e = s;
    while (e < n && alphas[static_cast<std::size_t>(e)] != 0) ++e;
    const std::vector<Character> run(alphas.begin() + s, alphas.begin() + e);
    const auto block = solve_run(table, run);
    for (int g = t.first_generator(); g <= t.last_generator(); ++g)
      sol.images[static_cast<std::size_t>(g)] =
          sol.images[static_cast<std::size_t>(g)] * block.images[static_cast<std::size_t>(g)].embed(n + 1, s);
    sol.blocks.push_back({s, e - s, block.label});
    s = e;
  }
  return sol;
}

bool superdiagonal_matches(const Target& t, const std::vector<UnipotentMatrix>& images,
                           const std::vector<Character>& alphas) {
  for (int g = t.first_generator(); g <= t.last_generator(); ++g) {
    const auto& m = images.at(static_cast<std::size_t>(g));
    if (m.size() != static_cast<int>(alphas.size()) + 1) return false;
    for (std::size_t i = 0; i < alphas.size(); ++i)
      if (m.get(static_cast<int>(i) + 1, static_cast<int>(i) + 2) != value_at(alphas[i], g)) return false;
  }
  return true;
}

TruncatedSeries2 magnus_expand(int k, const GroupWord& w, int order) {
  if (order < 0) throw MasseyError("negative truncation order");
  TruncatedSeries2 s{{}};
  for (const auto& l : w.letters()) {
    if (l.generator < 1 || l.generator > k)
      throw MasseyError("generator y" + std::to_string(l.generator) + " outside 1.." + std::to_string(k));
    // Multiply by 1 + Y_i; y_i^-1 = y_i.
    std::vector<std::vector<int>> added;
    for (const auto& word : s)
      if (static_cast<int>(word.size()) < order && (word.empty() || word.back() != l.generator)) {
        auto next = word;
        next.push_back(l.generator);
        added.push_back(std::move(next));
      }
    for (auto& word : added)
      if (!s.erase(word)) s.insert(std::move(word));
  }
  return s;
}

GroupWord sap_reduce(const GroupWord& w) {
  std::vector<Letter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().generator == l.generator)
      stack.pop_back();
    else
      stack.push_back({l.generator, 1});
  }
  return GroupWord(std::move(stack));
}

KuWitness ku_witness_sap(int k, const GroupWord& g, int order) {
  const auto expansion = magnus_expand(k, g, order);
  if (sap_reduce(g).empty()) throw MasseyError("element is trivial");
  const std::vector<int>* best = nullptr;
  for (const auto& w : expansion)
    if (!w.empty() && (best == nullptr || w.size() < best->size())) best = &w;  // set order gives lex-least per size
  if (best == nullptr)
    throw MasseyError("element not detected up to degree " + std::to_string(order) + "; increase the truncation");

  KuWitness out;
  out.word = *best;
  out.size = static_cast<int>(best->size()) + 1;
  out.images.assign(static_cast<std::size_t>(k) + 1, UnipotentMatrix(out.size));
  for (std::size_t j = 0; j < best->size(); ++j)
    out.images[static_cast<std::size_t>((*best)[j])].set(static_cast<int>(j) + 1, static_cast<int>(j) + 2);
  out.value = evaluate(g, out.images);
  return out;
}

std::vector<GroupWord> c4_projection(bool second) {
  const GroupWord y1 = GroupWord::generator(1);
  const GroupWord y1y2 = y1 * GroupWord::generator(2);
  const GroupWord y1y3 = y1 * GroupWord::generator(3);
  if (!second) return {y1, y1y2, GroupWord(), y1y3, GroupWord()};
  return {y1, GroupWord(), y1y2, GroupWord(), y1y3};
}

KuResult ku_witness_c4(const GroupWord& g, int order) {
  for (const auto& l : g.letters())
    if (l.generator < 0 || l.generator > 4) throw MasseyError("generator x" + std::to_string(l.generator) + " outside x0..x4");
  if (delta_normal_form(square(), ZVector::trivial(4), g).is_identity())
    throw MasseyError("element is trivial in the group");

  KuResult result;
  for (bool second : {false, true}) {
    const auto proj = c4_projection(second);
    const auto h = project(g, proj);
    if (sap_reduce(h).empty()) continue;
    KuWitness w;
    try {
      w = ku_witness_sap(3, h, order);
    } catch (const MasseyError&) {
      continue;
    }
    std::vector<UnipotentMatrix> images;
    for (const auto& word : proj) images.push_back(evaluate(word, w.images));
    w.images = std::move(images);
    w.value = evaluate(g, w.images);
    w.projection = second ? "G24" : "G13";
    result.witness = std::move(w);
    return result;
  }
  result.note = "inconclusive: no projection detects the element up to degree " + std::to_string(order);
  return result;
}

}  // namespace draag
