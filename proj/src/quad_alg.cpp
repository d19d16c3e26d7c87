#include "draag/quad_alg.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace draag {

namespace {

constexpr std::size_t kRewriteStepLimit = 1'000'000;

void toggle(NcPolynomial& poly, const NcWord& w) {
  if (!poly.erase(w)) poly.insert(w);
}

Quadric canonical_quadric(const Quadric& input, int g) {
  std::map<Monomial2, int> counts;
  for (const auto& m : input) {
    if (m.first < 0 || m.second < 0 || m.first >= g || m.second >= g)
      throw AlgebraError("relation monomial refers to an unknown generator");
    ++counts[m];
  }
  Quadric out;
  for (const auto& [m, c] : counts)
    if (c % 2 == 1) out.push_back(m);
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void check_order(const GeneratorOrder& order, int g) {
  std::vector<bool> seen(static_cast<std::size_t>(g), false);
  if (static_cast<int>(order.size()) != g) throw AlgebraError("order does not cover all generators");
  for (int x : order) {
    if (x < 0 || x >= g || seen[static_cast<std::size_t>(x)])
      throw AlgebraError("order does not cover all generators");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

std::vector<int> ranks_of(const GeneratorOrder& order) {
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(order.size() - 1 - i);
  return rank;
}

// Natural monomial columns sorted so the largest monomial comes first.
std::vector<std::size_t> columns_descending(int g, const std::vector<int>& rank) {
  std::vector<std::size_t> cols(static_cast<std::size_t>(g * g));
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  auto key = [&](std::size_t c) {
    return std::pair{rank[c / static_cast<std::size_t>(g)], rank[c % static_cast<std::size_t>(g)]};
  };
  std::sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
  return cols;
}

}  // namespace

QuadraticPresentation::QuadraticPresentation(std::vector<std::string> generators, std::vector<Quadric> relations)
    : generators_(std::move(generators)) {
  const int g = generator_count();
  F2Matrix accepted(0, static_cast<std::size_t>(g * g));
  for (const auto& r : relations) {
    auto q = canonical_quadric(r, g);
    if (q.empty()) continue;
    BitRow row(static_cast<std::size_t>(g * g));
    for (const auto& [a, b] : q) row.set(static_cast<std::size_t>(a * g + b));
    F2Matrix trial = accepted;
    trial.append_row(row);
    if (trial.rank() == accepted.rank()) continue;
    accepted.append_row(std::move(row));
    relations_.push_back(std::move(q));
  }
}

F2Matrix QuadraticPresentation::relation_matrix() const {
  const int g = generator_count();
  F2Matrix m(relations_.size(), static_cast<std::size_t>(g * g));
  for (std::size_t r = 0; r < relations_.size(); ++r)
    for (const auto& [a, b] : relations_[r]) m.set(r, static_cast<std::size_t>(a * g + b));
  return m;
}

std::string QuadraticPresentation::monomial_name(const Monomial2& m) const {
  if (m.first == m.second) return generators_[static_cast<std::size_t>(m.first)] + "^2";
  return generators_[static_cast<std::size_t>(m.first)] + generators_[static_cast<std::size_t>(m.second)];
}

std::string QuadraticPresentation::quadric_name(const Quadric& q) const {
  std::string out;
  for (const auto& m : q) {
    if (!out.empty()) out += '+';
    out += monomial_name(m);
  }
  return out.empty() ? "0" : out;
}

bool same_relation_span(const QuadraticPresentation& a, const QuadraticPresentation& b) {
  if (a.generator_count() != b.generator_count()) return false;
  const auto ma = a.relation_matrix();
  const auto mb = b.relation_matrix();
  F2Matrix both = ma;
  for (std::size_t r = 0; r < mb.rows(); ++r) both.append_row(mb.row(r));
  const auto ra = ma.rank();
  return ra == mb.rank() && ra == both.rank();
}

QuadraticPresentation build_ez(const Graph& g, const ZVector& z) {
  const auto report = validate_delta_action(g, z);
  if (!report.valid()) throw AlgebraError("twist vector does not define an order-2 action on the RAAG");
  const int d = g.vertex_count();
  std::vector<std::string> gens;
  for (int i = 0; i <= d; ++i) gens.push_back("X" + std::to_string(i));

  std::vector<Quadric> rels;
  rels.push_back({{0, 0}});
  for (const auto& [u, v] : g.edges()) rels.push_back({{u, v}, {v, u}});
  const auto eps = epsilon(z);
  for (int k = 1; k <= d; ++k) {
    Quadric r{{0, k}, {k, 0}, {k, k}};
    for (int j = 1; j <= d; ++j)
      if ((eps[static_cast<std::size_t>(k - 1)] >> j) & 1U) {
        r.emplace_back(k, j);
        r.emplace_back(j, k);
      }
    rels.push_back(std::move(r));
  }
  return QuadraticPresentation(std::move(gens), std::move(rels));
}

QuadraticPresentation build_raag_algebra(const Graph& g) {
  std::vector<std::string> gens;
  for (int i = 1; i <= g.vertex_count(); ++i) gens.push_back("X" + std::to_string(i));
  std::vector<Quadric> rels;
  for (const auto& [u, v] : g.edges()) rels.push_back({{u - 1, v - 1}, {v - 1, u - 1}});
  return QuadraticPresentation(std::move(gens), std::move(rels));
}

GeneratorOrder parse_order(const QuadraticPresentation& p, std::string_view text) {
  GeneratorOrder order;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string token(text.substr(start, end - start));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    const auto& gens = p.generators();
    const auto it = std::find_if(gens.begin(), gens.end(), [&](const std::string& n) { return lower(n) == lower(token); });
    if (it == gens.end()) throw AlgebraError("unknown generator in order: \"" + token + "\"");
    order.push_back(static_cast<int>(it - gens.begin()));
    start = end + 1;
  }
  check_order(order, p.generator_count());
  return order;
}

GeneratorOrder natural_order(const QuadraticPresentation& p) {
  GeneratorOrder order;
  for (int i = 0; i < p.generator_count(); ++i) order.push_back(i);
  return order;
}

RewritingSystem::RewritingSystem(const QuadraticPresentation& p, GeneratorOrder order)
    : g_(p.generator_count()), order_(std::move(order)) {
  check_order(order_, g_);
  rank_ = ranks_of(order_);
  head_index_.assign(static_cast<std::size_t>(g_ * g_), -1);

  const auto cols = columns_descending(g_, rank_);
  const auto natural = p.relation_matrix();
  F2Matrix sorted(natural.rows(), cols.size());
  for (std::size_t r = 0; r < natural.rows(); ++r)
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (natural.get(r, cols[k])) sorted.set(r, k);
  const auto pivots = sorted.rref();
  const auto g = static_cast<std::size_t>(g_);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    RewriteRule rule;
    const auto head_col = cols[pivots[r]];
    rule.head = {static_cast<int>(head_col / g), static_cast<int>(head_col % g)};
    for (std::size_t k = pivots[r] + 1; k < cols.size(); ++k)
      if (sorted.get(r, k)) rule.tail.emplace_back(static_cast<int>(cols[k] / g), static_cast<int>(cols[k] % g));
    head_index_[head_col] = static_cast<int>(rules_.size());
    rules_.push_back(std::move(rule));
  }
}

bool RewritingSystem::less(const NcWord& a, const NcWord& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ra = rank_[static_cast<std::size_t>(a[i])];
    const int rb = rank_[static_cast<std::size_t>(b[i])];
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::vector<Monomial2> RewritingSystem::leading_monomials() const {
  std::vector<Monomial2> out;
  for (const auto& r : rules_) out.push_back(r.head);
  return out;
}

std::vector<NcWord> RewritingSystem::critical_monomials() const {
  std::vector<NcWord> out;
  for (const auto& first : rules_)
    for (const auto& second : rules_)
      if (first.head.second == second.head.first)
        out.push_back({first.head.first, first.head.second, second.head.second});
  std::sort(out.begin(), out.end(), [&](const NcWord& a, const NcWord& b) { return less(b, a); });
  return out;
}

NcPolynomial RewritingSystem::rewrite_at(const NcWord& word, std::size_t pos) const {
  const auto idx = head_index_[static_cast<std::size_t>(word[pos] * g_ + word[pos + 1])];
  if (idx < 0) throw AlgebraError("no rewrite rule applies at the requested position");
  NcPolynomial out;
  for (const auto& [c, d] : rules_[static_cast<std::size_t>(idx)].tail) {
    NcWord w = word;
    w[pos] = c;
    w[pos + 1] = d;
    toggle(out, w);
  }
  return out;
}

NcPolynomial RewritingSystem::normal_form(NcPolynomial poly) const {
  for (std::size_t steps = 0;; ++steps) {
    if (steps > kRewriteStepLimit) throw AlgebraError("rewriting did not terminate within the step limit");
    const NcWord* target = nullptr;
    std::size_t target_pos = 0;
    for (const auto& w : poly) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (is_head(w[i], w[i + 1])) {
          if (target == nullptr || less(*target, w)) {
            target = &w;
            target_pos = i;
          }
          break;
        }
    }
    if (target == nullptr) return poly;
    const NcWord word = *target;
    poly.erase(word);
    for (const auto& w : rewrite_at(word, target_pos)) toggle(poly, w);
  }
}

std::vector<std::uint64_t> RewritingSystem::reduced_word_counts(int max_degree) const {
  std::vector<std::uint64_t> counts{1};
  if (max_degree == 0) return counts;
  std::vector<std::uint64_t> ending(static_cast<std::size_t>(g_), 1);
  counts.push_back(static_cast<std::uint64_t>(g_));
  for (int n = 2; n <= max_degree; ++n) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(g_), 0);
    for (int a = 0; a < g_; ++a)
      for (int b = 0; b < g_; ++b)
        if (!is_head(a, b)) next[static_cast<std::size_t>(b)] += ending[static_cast<std::size_t>(a)];
    ending = std::move(next);
    std::uint64_t total = 0;
    for (auto c : ending) total += c;
    counts.push_back(total);
  }
  return counts;
}

PbwResult pbw_check(const QuadraticPresentation& p, const GeneratorOrder& order) {
  const RewritingSystem system(p, order);
  PbwResult result;
  result.rules = system.rules();
  for (const auto& word : system.critical_monomials()) {
    CriticalCheck check{word, system.normal_form(system.rewrite_at(word, 0)),
                        system.normal_form(system.rewrite_at(word, 1))};
    if (!check.confluent() && result.confluent) {
      result.confluent = false;
      result.counterexample = check;
    }
    result.checks.push_back(std::move(check));
  }
  return result;
}

std::string format_word(const QuadraticPresentation& p, const NcWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += p.generators()[static_cast<std::size_t>(w[i])];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format_polynomial(const QuadraticPresentation& p, const NcPolynomial& poly) {
  if (poly.empty()) return "0";
  std::string out;
  for (const auto& w : poly) {
    if (!out.empty()) out += '+';
    out += format_word(p, w);
  }
  return out;
}

std::vector<std::uint64_t> hilbert_dimensions(const QuadraticPresentation& p, int order,
                                              const HilbertOptions& options) {
  if (order < 0) throw AlgebraError("negative truncation order");
  if (order > options.max_order)
    throw AlgebraError("truncation order " + std::to_string(order) + " exceeds the configured bound " +
                       std::to_string(options.max_order));
  const auto g = static_cast<std::uint32_t>(p.generator_count());
  std::vector<std::uint64_t> dims{1};
  if (order == 0) return dims;
  dims.push_back(g);

  // Degree k basis elements are indexed 0..dims[k]-1. product[k][i*g + x] is
  // the class of (basis element i of degree k-1) * x in degree k.
  using Sparse = SparseEchelon::Row;
  std::vector<Sparse> product(g);           // degree 1: empty word times x = x
  for (std::uint32_t x = 0; x < g; ++x) product[x] = {x};

  for (int k = 2; k <= order; ++k) {
    const std::uint64_t prev = dims[static_cast<std::size_t>(k - 1)];
    const std::uint64_t cols = prev * g;
    if (cols > options.max_columns)
      throw AlgebraError("degree " + std::to_string(k) + " needs " + std::to_string(cols) +
                         " columns, beyond the memory budget");
    SparseEchelon echelon(static_cast<std::size_t>(cols));
    const std::uint64_t before = dims[static_cast<std::size_t>(k - 2)];
    for (std::uint64_t w = 0; w < before; ++w) {
      for (const auto& rel : p.relations()) {
        Sparse row;
        for (const auto& [x, y] : rel) {
          // (w*x) is a combination of degree k-1 basis elements j; append y.
          const Sparse* wx = &product[static_cast<std::size_t>(w * g + static_cast<std::uint64_t>(x))];
          Sparse term;
          term.reserve(wx->size());
          for (auto j : *wx) term.push_back(static_cast<std::uint32_t>(j * g + static_cast<std::uint32_t>(y)));
          std::sort(term.begin(), term.end());
          row = SparseEchelon::add(row, term);
        }
        echelon.insert(std::move(row));
      }
    }
    const std::uint64_t dim = cols - echelon.rank();
    dims.push_back(dim);
    if (k == order) break;

    // Next multiplication table: classes of (degree k-1 basis element) * x.
    echelon.finalize();
    std::vector<std::uint32_t> index_of(static_cast<std::size_t>(cols), 0);
    std::uint32_t next = 0;
    for (std::uint64_t c = 0; c < cols; ++c)
      if (!echelon.is_pivot(static_cast<std::uint32_t>(c))) index_of[static_cast<std::size_t>(c)] = next++;
    std::vector<Sparse> table(static_cast<std::size_t>(cols));
    for (std::uint64_t c = 0; c < cols; ++c) {
      const auto col = static_cast<std::uint32_t>(c);
      if (!echelon.is_pivot(col)) {
        table[static_cast<std::size_t>(c)] = {index_of[static_cast<std::size_t>(c)]};
      } else {
        Sparse& out = table[static_cast<std::size_t>(c)];
        for (auto t : echelon.tail(col)) out.push_back(index_of[t]);
        std::sort(out.begin(), out.end());
      }
    }
    product = std::move(table);
  }
  return dims;
}

IntSeries hilbert_series(const QuadraticPresentation& p, int order, const HilbertOptions& options) {
  const auto dims = hilbert_dimensions(p, order, options);
  IntSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = dims[static_cast<std::size_t>(n)];
  return s;
}

std::string dual_generator_name(const std::string& name) {
  if (name == "X0") return "chi0";
  if (name.size() > 1 && name[0] == 'X' &&
      std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); }))
    return "psi" + name.substr(1);
  return name + "*";
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& p) {
  const int g = p.generator_count();
  const auto annihilator = p.relation_matrix().kernel();
  F2Matrix basis(0, static_cast<std::size_t>(g * g));
  for (const auto& v : annihilator) basis.append_row(v);
  basis.rref();
  std::vector<Quadric> rels;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Quadric q;
    for (int c = 0; c < g * g; ++c)
      if (basis.get(r, static_cast<std::size_t>(c))) q.emplace_back(c / g, c % g);
    rels.push_back(std::move(q));
  }
  std::vector<std::string> gens;
  for (const auto& n : p.generators()) gens.push_back(dual_generator_name(n));
  return QuadraticPresentation(std::move(gens), std::move(rels));
}

DegreeTwoBasis::DegreeTwoBasis(const QuadraticPresentation& algebra, const GeneratorOrder& order)
    : g_(algebra.generator_count()) {
  check_order(order, g_);
  const auto rank = ranks_of(order);
  auto ascending = columns_descending(g_, rank);
  std::reverse(ascending.begin(), ascending.end());

  const auto natural = algebra.relation_matrix();
  F2Matrix permuted(natural.rows(), ascending.size());
  for (std::size_t r = 0; r < natural.rows(); ++r)
    for (std::size_t k = 0; k < ascending.size(); ++k)
      if (natural.get(r, ascending[k])) permuted.set(r, k);
  pivots_ = permuted.rref();
  // Reduced rows go back to natural column numbering.
  reduced_ = F2Matrix(permuted.rows(), ascending.size());
  for (std::size_t r = 0; r < permuted.rows(); ++r)
    for (std::size_t k = 0; k < ascending.size(); ++k)
      if (permuted.get(r, k)) reduced_.set(r, ascending[k]);
  std::vector<bool> pivot(ascending.size(), false);
  for (auto& pv : pivots_) {
    pivot[pv] = true;
    pv = ascending[pv];
  }

  const auto g = static_cast<std::size_t>(g_);
  for (std::size_t k = ascending.size(); k-- > 0;)
    if (!pivot[k]) monomials_.emplace_back(static_cast<int>(ascending[k] / g), static_cast<int>(ascending[k] % g));
  basis_position_.assign(g * g, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    basis_position_[static_cast<std::size_t>(monomials_[i].first) * g + static_cast<std::size_t>(monomials_[i].second)] = i;
}

BitRow DegreeTwoBasis::coordinates(const BitRow& element) const {
  BitRow v = element;
  for (std::size_t r = 0; r < pivots_.size(); ++r)
    if (v.get(pivots_[r])) v ^= reduced_.row(r);
  BitRow out(monomials_.size());
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v.get(c)) out.set(basis_position_[c]);
  return out;
}

BitRow DegreeTwoBasis::coordinates(const Monomial2& m) const {
  BitRow v(static_cast<std::size_t>(g_ * g_));
  v.set(static_cast<std::size_t>(m.first * g_ + m.second));
  return coordinates(v);
}

DegreeTwoBasis h2_basis(const QuadraticPresentation& dual, const GeneratorOrder& order) {
  return DegreeTwoBasis(dual, order);
}

DegreeTwoBasis h2_basis(const QuadraticPresentation& dual) { return DegreeTwoBasis(dual, natural_order(dual)); }

}  // namespace draag
