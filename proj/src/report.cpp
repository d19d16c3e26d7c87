#include "draag/report.hpp"

#include "draag/recognition.hpp"

namespace draag {

namespace {

Json names(const QuadraticPresentation& p, const GeneratorOrder& order) {
  Json out = Json::array();
  for (int x : order) out.push_back(p.generators()[static_cast<std::size_t>(x)]);
  return out;
}

}  // namespace

Json report_header(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

CalibrationResult calibrate_sum_mode(int max_vertices) {
  CalibrationResult c;
  c.max_vertices = max_vertices;
  const std::vector<SumMode> modes{SumMode::vertices, SumMode::vertices_plus_one};
  c.witnessed.assign(modes.size(), 0);
  c.square_rejected.assign(modes.size(), false);

  const auto square = clique_polynomial(Graph::cycle(4));
  for (std::size_t m = 0; m < modes.size(); ++m) c.square_rejected[m] = !realizability_check(square, modes[m]);

  for (const auto& g : enumerate_closure(max_vertices)) {
    if (g.empty()) continue;  // Delta itself has no witness in either mode
    ++c.accepted_graphs;
    const auto p = clique_polynomial(g);
    std::vector<bool> has(modes.size());
    for (std::size_t m = 0; m < modes.size(); ++m) {
      has[m] = realizability_check(p, modes[m]).has_value();
      if (has[m]) ++c.witnessed[m];
    }
    if (has[0] != has[1]) c.disagreements.push_back(g);
  }
  for (std::size_t m = 0; m < modes.size(); ++m)
    if (c.witnessed[m] == c.accepted_graphs && c.square_rejected[m]) {
      c.chosen = modes[m];
      break;
    }
  return c;
}

Json calibration_to_json(const CalibrationResult& c) {
  Json modes = Json::array();
  const std::vector<SumMode> all{SumMode::vertices, SumMode::vertices_plus_one};
  for (std::size_t m = 0; m < all.size(); ++m)
    modes.push_back({{"mode", to_string(all[m])},
                     {"accepted_with_witness", c.witnessed[m]},
                     {"square_has_no_witness", static_cast<bool>(c.square_rejected[m])}});
  Json disagreements = Json::array();
  for (const auto& g : c.disagreements) disagreements.push_back(graph_to_json(g));
  return Json{{"max_vertices", c.max_vertices},
              {"accepted_graphs", c.accepted_graphs},
              {"modes", modes},
              {"chosen", c.chosen ? Json(to_string(*c.chosen)) : Json(nullptr)},
              {"disagreement_count", c.disagreements.size()},
              {"disagreements", disagreements}};
}

Json recognition_to_json(const Recognition& r) {
  Json out{{"in_GrP", r.accepted()}};
  out["witness"] = r.tree ? tree_to_json(*r.tree) : Json(nullptr);
  out["reason"] = r.rejection ? Json(r.rejection->reason) : Json(nullptr);
  out["witness_vertices"] = r.rejection ? Json(r.rejection->witness) : Json(nullptr);
  return out;
}

Json witness_to_json(const std::optional<RealizabilityWitness>& w) {
  if (!w) return nullptr;
  return Json{{"s", w->s}, {"a", w->a}};
}

Json pbw_to_json(const QuadraticPresentation& p, const GeneratorOrder& order, const PbwResult& r) {
  Json rules = Json::array();
  for (const auto& rule : r.rules)
    rules.push_back({{"head", p.monomial_name(rule.head)}, {"tail", p.quadric_name(rule.tail)}});
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"monomial", format_word(p, c.monomial)},
                      {"left", format_polynomial(p, c.left)},
                      {"right", format_polynomial(p, c.right)},
                      {"confluent", c.confluent()}});
  Json out{{"order", names(p, order)}, {"confluent", r.confluent}, {"rules", rules}, {"critical", checks}};
  if (r.counterexample)
    out["counterexample"] = {{"monomial", format_word(p, r.counterexample->monomial)},
                             {"left", format_polynomial(p, r.counterexample->left)},
                             {"right", format_polynomial(p, r.counterexample->right)}};
  else
    out["counterexample"] = nullptr;
  return out;
}

std::vector<std::uint64_t> hilbert_within_budget(const QuadraticPresentation& p, int order, std::size_t columns) {
  HilbertOptions opts;
  opts.max_order = std::max(order, opts.max_order);
  opts.max_columns = columns;
  for (int n = order; n >= 0; --n) {
    try {
      return hilbert_dimensions(p, n, opts);
    } catch (const AlgebraError&) {
      if (n == 0) throw;
    }
  }
  return {};
}

Json analysis_report(const Graph& g, const ZVector& z, const AnalyzeOptions& options) {
  if (options.trunc < 1) throw SeriesError("truncation order must be at least 1");
  const int d = g.vertex_count();
  const auto p = clique_polynomial(g);
  const auto gocha = gocha_series(p, options.trunc);
  const auto poincare = poincare_series(p, options.trunc);

  Json report = report_header("analyze");
  report["graph"] = graph_to_json(g);
  report["canonical"] = d <= kMaxCanonicalVertices ? graph_to_json(canonical_graph(g)) : Json(nullptr);
  report["z"] = z_to_json(z)["z"];
  report["clique_polynomial"] = p.coefficients;

  Json lie = Json::array();
  for (const auto& l : lie_dims_from_gocha(gocha, options.trunc)) lie.push_back(bigint_to_json(l));
  report["series"] = {{"order", options.trunc},
                      {"gocha", series_to_json(gocha)["coefficients"]},
                      {"poincare", series_to_json(poincare)["coefficients"]},
                      {"lie_dims", lie}};

  report["recognition"] = recognition_to_json(recognize(g));

  Json real;
  SumMode mode = SumMode::vertices_plus_one;
  if (options.sum_mode) {
    mode = *options.sum_mode;
    real["calibrated"] = false;
  } else {
    const auto cal = calibrate_sum_mode();
    if (cal.chosen) mode = *cal.chosen;
    real["calibrated"] = true;
    real["calibration"] = {{"chosen", cal.chosen ? Json(to_string(*cal.chosen)) : Json(nullptr)},
                           {"disagreement_count", cal.disagreements.size()}};
  }
  real["mode"] = to_string(mode);
  real["witness"] = witness_to_json(realizability_check(p, mode));
  report["realizability"] = real;

  const auto algebra = build_ez(g, z);
  const auto order = options.order ? parse_order(algebra, *options.order) : natural_order(algebra);
  const auto pbw = pbw_check(algebra, order);
  Json pbw_json{{"order", names(algebra, order)},
                {"confluent", pbw.confluent},
                {"rules", pbw.rules.size()},
                {"critical", pbw.checks.size()}};
  pbw_json["counterexample"] =
      pbw.counterexample ? Json(format_word(algebra, pbw.counterexample->monomial)) : Json(nullptr);
  report["pbw"] = pbw_json;

  const auto hilbert = hilbert_within_budget(algebra, options.trunc, options.hilbert_columns);
  bool matches = true;
  for (std::size_t n = 0; n < hilbert.size(); ++n) matches = matches && BigInt(hilbert[n]) == gocha[static_cast<int>(n)];
  report["hilbert"] = {{"order", static_cast<int>(hilbert.size()) - 1}, {"dimensions", hilbert}};

  const auto dual = quadratic_dual(algebra);
  const auto basis = h2_basis(dual, order);
  Json h2 = Json::array();
  for (const auto& m : basis.monomials()) h2.push_back(dual.monomial_name(m));
  const auto expected_h2 = static_cast<std::size_t>(d) + g.edge_count() + 1;
  report["cohomology"] = {{"dual", presentation_to_json(dual)},
                          {"h2_basis", h2},
                          {"h2_dimension", basis.dimension()},
                          {"expected_h2_dimension", expected_h2}};

  report["consistency"] = {
      {"poincare_degree1_is_d_plus_1", options.trunc < 1 || poincare[1] == d + 1},
      {"h2_dimension_is_d_plus_r_plus_1", basis.dimension() == expected_h2},
      {"hilbert_matches_gocha", matches}};
  return report;
}

}  // namespace draag
