#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "draag/json_io.hpp"
#include "draag/massey.hpp"
#include "draag/recognition.hpp"
#include "draag/report.hpp"

using namespace draag;

namespace {

// Domain rejections (exit 1) as opposed to malformed input (exit 2).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph, z, order, presentation, sum_mode = "auto", target = "c4-delta", alpha, word;
  int trunc = 8;
  int n = 3;
  int random = 0;
  int max_length = 5;
  std::uint64_t seed = 1;
  bool raag = false;
};

Graph load_graph(const Options& o) {
  if (o.graph.empty()) throw InputError("--graph is required");
  return parse_graph(read_file(o.graph));
}

ZVector load_z(const Options& o, const Graph& g) {
  if (o.z.empty()) return ZVector::trivial(g.vertex_count());
  return parse_z(read_file(o.z), g.vertex_count());
}

std::optional<SumMode> parse_sum_mode(const std::string& s) {
  if (s == "d") return SumMode::vertices;
  if (s == "d+1") return SumMode::vertices_plus_one;
  if (s == "auto") return std::nullopt;
  throw InputError("--sum-mode must be d, d+1 or auto");
}

// The algebra selected by --presentation, or by --graph with --z / --raag.
QuadraticPresentation load_algebra(const Options& o) {
  if (!o.presentation.empty()) return parse_presentation(read_file(o.presentation));
  const auto g = load_graph(o);
  if (o.raag) return build_raag_algebra(g);
  const auto z = load_z(o, g);
  const auto report = validate_delta_action(g, z);
  if (!report.valid()) throw DomainError("z does not define an order-2 action (" +
                                         std::to_string(report.violations.size()) + " violations)");
  return build_ez(g, z);
}

GeneratorOrder load_order(const Options& o, const QuadraticPresentation& p) {
  if (o.order.empty()) return natural_order(p);
  try {
    return parse_order(p, o.order);
  } catch (const AlgebraError& e) {
    throw InputError(std::string("--order: ") + e.what());
  }
}

Target load_target(const Options& o) {
  try {
    return Target::parse(o.target);
  } catch (const MasseyError& e) {
    throw InputError(std::string("--target: ") + e.what());
  }
}

std::vector<Character> load_characters(const Target& t, const std::string& text) {
  try {
    return parse_characters(t, text);
  } catch (const MasseyError& e) {
    throw InputError(std::string("--alpha: ") + e.what());
  }
}

std::string generator_name(const Target& t, int g) {
  return (t.kind == Target::Kind::sap ? "y" : "x") + std::to_string(g);
}

Json images_to_json(const Target& t, const std::vector<UnipotentMatrix>& images) {
  Json out = Json::object();
  for (int g = t.first_generator(); g <= t.last_generator(); ++g)
    out[generator_name(t, g)] = matrix_to_json(images[static_cast<std::size_t>(g)]);
  return out;
}

// Deterministic draw in [0, bound).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<Character> all_characters(const Target& t) {
  std::vector<Character> out;
  const int lo = t.first_generator();
  for (Character a = 0; a < (Character{1} << t.generator_count()); ++a) out.push_back(a << lo);
  return out;
}

Json cmd_analyze(const Options& o) {
  const auto g = load_graph(o);
  const auto z = load_z(o, g);
  if (!validate_delta_action(g, z).valid()) throw DomainError("z does not define an order-2 action");
  AnalyzeOptions opts;
  opts.trunc = o.trunc;
  opts.sum_mode = parse_sum_mode(o.sum_mode);
  if (!o.order.empty()) {
    load_order(o, build_ez(g, z));
    opts.order = o.order;
  }
  return analysis_report(g, z, opts);
}

Json cmd_recognize(const Options& o) {
  Json out = report_header("recognize");
  out.update(recognition_to_json(recognize(load_graph(o))));
  return out;
}

Json cmd_enumerate(const Options& o) {
  if (o.n < 0 || o.n > kMaxEnumerationVertices)
    throw InputError("--n must be between 0 and " + std::to_string(kMaxEnumerationVertices));
  const auto members = enumerate_closure(o.n);
  Json graphs = Json::array();
  for (const auto& g : members) graphs.push_back(graph_to_json(g));
  Json out = report_header("enumerate");
  out["n_max"] = o.n;
  out["count"] = members.size();
  out["graphs"] = graphs;
  return out;
}

Json cmd_series(const Options& o) {
  const auto g = load_graph(o);
  const auto p = clique_polynomial(g);
  const auto gocha = gocha_series(p, o.trunc);
  Json lie = Json::array();
  for (const auto& l : lie_dims_from_gocha(gocha, o.trunc)) lie.push_back(bigint_to_json(l));
  Json out = report_header("series");
  out["order"] = o.trunc;
  out["clique_polynomial"] = p.coefficients;
  out["gocha"] = series_to_json(gocha)["coefficients"];
  out["poincare"] = series_to_json(poincare_series(p, o.trunc))["coefficients"];
  out["lie_dims"] = lie;
  return out;
}

Json cmd_realizable(const Options& o) {
  Json out = report_header("realizable");
  auto mode = parse_sum_mode(o.sum_mode);
  if (!mode) {
    const auto cal = calibrate_sum_mode();
    out["calibration"] = calibration_to_json(cal);
    if (!cal.chosen) throw DomainError("calibration found no consistent sum mode");
    mode = cal.chosen;
  }
  out["mode"] = to_string(*mode);
  if (!o.graph.empty()) {
    const auto g = load_graph(o);
    out["clique_polynomial"] = clique_polynomial(g).coefficients;
    out["witness"] = witness_to_json(realizability_check(clique_polynomial(g), *mode));
  }
  return out;
}

Json cmd_pbw(const Options& o) {
  const auto p = load_algebra(o);
  const auto order = load_order(o, p);
  Json out = report_header("pbw");
  out.update(pbw_to_json(p, order, pbw_check(p, order)));
  return out;
}

Json cmd_dual(const Options& o) {
  const auto p = load_algebra(o);
  const auto order = load_order(o, p);
  const auto dual = quadratic_dual(p);
  const auto basis = h2_basis(dual, order);
  Json h2 = Json::array();
  for (const auto& m : basis.monomials()) h2.push_back(dual.monomial_name(m));
  Json out = report_header("dual");
  out["algebra"] = presentation_to_json(p);
  out["dual"] = presentation_to_json(dual);
  out["h2_basis"] = h2;
  out["h2_dimension"] = basis.dimension();
  return out;
}

Json cmd_cupzero(const Options& o) {
  const auto t = load_target(o);
  if (t.kind == Target::Kind::sap) throw InputError("--target must be c4-delta or c4-raag");
  const CupTable table(t);
  Json out = report_header("cupzero");
  out["target"] = t.name();
  if (!o.alpha.empty()) {
    const auto chars = load_characters(t, o.alpha);
    if (chars.size() != 2) throw InputError("--alpha: expected exactly two characters");
    const auto c = table.cup(chars[0], chars[1]);
    Json coords = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i) coords.push_back(c.get(i) ? 1 : 0);
    out["a"] = character_name(t, chars[0]);
    out["b"] = character_name(t, chars[1]);
    out["cup"] = coords;
    out["vanishes"] = c.none();
    if (c.none()) {
      try {
        out["class"] = to_string(classify_vanishing_pair(table, chars[0], chars[1]));
      } catch (const MasseyError& e) {
        throw DomainError(e.what());
      }
    } else {
      out["class"] = nullptr;
    }
    return out;
  }
  // Sweep over all nonzero pairs.
  std::map<std::string, int> counts;
  int nonvanishing = 0;
  Json unclassified = Json::array();
  for (auto a : all_characters(t))
    for (auto b : all_characters(t)) {
      if (a == 0 || b == 0) continue;
      if (!table.vanishes(a, b)) {
        ++nonvanishing;
        continue;
      }
      try {
        ++counts[to_string(classify_vanishing_pair(table, a, b))];
      } catch (const MasseyError&) {
        unclassified.push_back({character_name(t, a), character_name(t, b)});
      }
    }
  out["nonvanishing_pairs"] = nonvanishing;
  out["classes"] = counts;
  out["unclassified"] = unclassified;
  return out;
}

Json massey_transcript(const Target& t, const std::vector<Character>& alphas, const MasseySolution& s) {
  const auto check = verify_morphism(t.relators(), s.images);
  Json blocks = Json::array();
  for (const auto& b : s.blocks) blocks.push_back({{"start", b.start + 1}, {"length", b.length}, {"case", b.label}});
  Json names = Json::array();
  for (auto a : alphas) names.push_back(character_name(t, a));
  return Json{{"characters", names},
              {"size", s.size},
              {"blocks", blocks},
              {"images", images_to_json(t, s.images)},
              {"relators_ok", check.ok},
              {"failing_relator", check.failing_index ? Json(t.relators()[*check.failing_index].to_string()) : Json(nullptr)},
              {"superdiagonal_ok", superdiagonal_matches(t, s.images, alphas)}};
}

Json cmd_massey(const Options& o) {
  const auto t = load_target(o);
  const CupTable table(t);
  Json out = report_header("massey");
  out["target"] = t.name();
  if (o.random > 0) {
    if (o.max_length < 1 || o.max_length > 63) throw InputError("--max-length must be between 1 and 63");
    std::mt19937_64 rng(o.seed);
    const auto chars = all_characters(t);
    int ok = 0;
    Json failures = Json::array();
    for (int r = 0; r < o.random; ++r) {
      const auto len = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(o.max_length)));
      std::vector<Character> seq{chars[draw(rng, chars.size())]};
      while (static_cast<int>(seq.size()) < len) {
        std::vector<Character> next;
        for (auto c : chars)
          if (table.vanishes(seq.back(), c)) next.push_back(c);
        seq.push_back(next[draw(rng, next.size())]);
      }
      const auto s = strong_massey_solve(table, seq);
      if (verify_morphism(t.relators(), s.images).ok && superdiagonal_matches(t, s.images, seq))
        ++ok;
      else
        failures.push_back(massey_transcript(t, seq, s));
    }
    out["seed"] = o.seed;
    out["sequences"] = o.random;
    out["verified"] = ok;
    out["failures"] = failures;
    return out;
  }
  if (o.alpha.empty()) throw InputError("--alpha or --random is required");
  const auto alphas = load_characters(t, o.alpha);
  MasseySolution s;
  try {
    s = strong_massey_solve(table, alphas);
  } catch (const MasseyError& e) {
    throw DomainError(e.what());
  }
  out.update(massey_transcript(t, alphas, s));
  return out;
}

Json ku_to_json(const Target& t, const KuWitness& w, const GroupWord& g) {
  std::string word;
  for (int l : w.word) word += "Y" + std::to_string(l);
  const auto check = verify_morphism(t.relators(), w.images);
  Json out{{"size", w.size},
           {"detecting_word", word},
           {"projection", w.projection.empty() ? Json(nullptr) : Json(w.projection)},
           {"images", images_to_json(t, w.images)},
           {"value", matrix_to_json(w.value)},
           {"value_is_identity", w.value.is_identity()},
           {"relators_ok", check.ok}};
  out["element"] = g.to_string();
  return out;
}

GroupWord random_word(std::mt19937_64& rng, int lo, int hi, int max_len) {
  std::vector<Letter> letters;
  const auto len = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_len)));
  for (int i = 0; i < len; ++i)
    letters.push_back({lo + static_cast<int>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1))),
                       draw(rng, 2) == 0 ? 1 : -1});
  return GroupWord(std::move(letters));
}

Json cmd_ku(const Options& o) {
  const auto t = load_target(o);
  if (t.kind == Target::Kind::c4_raag) throw InputError("--target must be c4-delta or sap:<k>");
  Json out = report_header("ku-witness");
  out["target"] = t.name();
  out["trunc"] = o.trunc;

  auto solve = [&](const GroupWord& g) -> std::optional<KuWitness> {
    if (t.kind == Target::Kind::sap) return ku_witness_sap(t.k, g, o.trunc);
    auto r = ku_witness_c4(g, o.trunc);
    return r.witness;
  };

  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    int ok = 0, inconclusive = 0, trivial = 0;
    Json failures = Json::array();
    for (int found = 0; found < o.random;) {
      const auto g = random_word(rng, t.first_generator(), t.last_generator(), o.max_length);
      std::optional<KuWitness> w;
      try {
        w = solve(g);
      } catch (const MasseyError&) {
        ++trivial;
        continue;
      }
      if (!w) {
        ++inconclusive;
        continue;
      }
      ++found;
      if (verify_morphism(t.relators(), w->images).ok && !w->value.is_identity())
        ++ok;
      else
        failures.push_back(ku_to_json(t, *w, g));
    }
    out["seed"] = o.seed;
    out["words"] = o.random;
    out["verified"] = ok;
    out["skipped_trivial"] = trivial;
    out["skipped_inconclusive"] = inconclusive;
    out["failures"] = failures;
    return out;
  }

  if (o.word.empty()) throw InputError("--word or --random is required");
  GroupWord g;
  try {
    g = GroupWord::parse(o.word);
  } catch (const WordError& e) {
    throw InputError(std::string("--word: ") + e.what());
  }
  for (const auto& l : g.letters())
    if (l.generator < t.first_generator() || l.generator > t.last_generator())
      throw InputError("--word: generator " + std::to_string(l.generator) + " is outside " + t.name());
  std::optional<KuWitness> w;
  try {
    w = solve(g);
  } catch (const MasseyError& e) {
    throw DomainError(e.what());
  }
  out["inconclusive"] = !w.has_value();
  if (w) out.update(ku_to_json(t, *w, g));
  return out;
}

Json cmd_lemmquad(const Options& o) {
  LemmquadSolution s;
  try {
    s = solve_lemmquad(o.n);
  } catch (const MatrixError& e) {
    throw DomainError(e.what());
  }
  Json out = report_header("lemmquad");
  out["n"] = s.n;
  out["A1"] = matrix_to_json(s.a1);
  out["A2"] = matrix_to_json(s.a2);
  out["B1"] = matrix_to_json(s.b1);
  out["B2"] = matrix_to_json(s.b2);
  out["identity_1_holds"] = lemmquad_identity_holds(s.a1, s.b1);
  out["identity_2_holds"] = lemmquad_identity_holds(s.a2, s.b2);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for Delta-RAAGs and their graphs"};
  app.require_subcommand(1);
  Options o;

  auto graph_opts = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "graph document (JSON)");
    c->add_option("--z", o.z, "twist vector document (JSON); default all trivial");
  };
  auto* analyze = app.add_subcommand("analyze", "full report for one graph");
  graph_opts(analyze);
  analyze->add_option("--order", o.order, "generator order, greatest first");
  analyze->add_option("--trunc", o.trunc, "series truncation order")->check(CLI::Range(1, 32));
  analyze->add_option("--sum-mode", o.sum_mode, "d, d+1 or auto");

  auto* recognize_cmd = app.add_subcommand("recognize", "decide membership and print the decomposition");
  recognize_cmd->add_option("--graph", o.graph)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list the closure up to n vertices");
  enumerate->add_option("--n", o.n, "maximum vertex count")->required();

  auto* series = app.add_subcommand("series", "clique, gocha and Poincare series");
  series->add_option("--graph", o.graph)->required();
  series->add_option("--trunc", o.trunc)->check(CLI::Range(0, 256));

  auto* realizable = app.add_subcommand("realizable", "clique-polynomial realizability");
  realizable->add_option("--graph", o.graph);
  realizable->add_option("--sum-mode", o.sum_mode, "d, d+1 or auto");

  auto* pbw = app.add_subcommand("pbw", "critical-monomial confluence check");
  graph_opts(pbw);
  pbw->add_option("--presentation", o.presentation, "quadratic presentation document (JSON)");
  pbw->add_option("--order", o.order);
  pbw->add_flag("--raag", o.raag, "use the RAAG algebra instead of the twisted one");

  auto* dual = app.add_subcommand("dual", "quadratic dual and degree-2 basis");
  graph_opts(dual);
  dual->add_option("--presentation", o.presentation);
  dual->add_option("--order", o.order);
  dual->add_flag("--raag", o.raag);

  auto* cupzero = app.add_subcommand("cupzero", "cup products and vanishing classes");
  cupzero->add_option("--target", o.target, "c4-delta or c4-raag");
  cupzero->add_option("--alpha", o.alpha, "two characters, e.g. \"0,1,0,0,0;0,0,0,1,0\"");

  auto* massey = app.add_subcommand("massey", "unipotent representation with given superdiagonal");
  massey->add_option("--target", o.target, "c4-delta, c4-raag or sap:<k>");
  massey->add_option("--alpha", o.alpha, "characters separated by ';'");
  massey->add_option("--random", o.random, "number of random valid sequences")->check(CLI::NonNegativeNumber);
  massey->add_option("--max-length", o.max_length);
  massey->add_option("--seed", o.seed);

  auto* ku = app.add_subcommand("ku-witness", "representation detecting a nontrivial element");
  ku->add_option("--target", o.target, "c4-delta or sap:<k>");
  ku->add_option("--word", o.word, "group element, e.g. \"x2^-1*x4^-1*x2*x4\"");
  ku->add_option("--trunc", o.trunc)->check(CLI::Range(1, 20));
  ku->add_option("--random", o.random)->check(CLI::NonNegativeNumber);
  ku->add_option("--max-length", o.max_length);
  ku->add_option("--seed", o.seed);

  auto* lemmquad = app.add_subcommand("lemmquad", "matrices A, B with B A B^-1 A^-1 = A^-2");
  lemmquad->add_option("--n", o.n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Json out;
    const auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "analyze") out = cmd_analyze(o);
    else if (name == "recognize") out = cmd_recognize(o);
    else if (name == "enumerate") out = cmd_enumerate(o);
    else if (name == "series") out = cmd_series(o);
    else if (name == "realizable") out = cmd_realizable(o);
    else if (name == "pbw") out = cmd_pbw(o);
    else if (name == "dual") out = cmd_dual(o);
    else if (name == "cupzero") out = cmd_cupzero(o);
    else if (name == "massey") out = cmd_massey(o);
    else if (name == "ku-witness") out = cmd_ku(o);
    else out = cmd_lemmquad(o);
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const WordError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  }
}
