#include "draag/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace draag {

namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw InputError(where + ": integer out of range");
  return static_cast<int>(x);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph parse_graph(std::string_view text) {
  const auto doc = parse_document(text);
  const int n = as_int(member(doc, "vertices"), "vertices");
  if (n < 0 || n > kMaxVertices) throw InputError("vertices: must be between 0 and " + std::to_string(kMaxVertices));
  const auto& edges = member(doc, "edges");
  if (!edges.is_array()) throw InputError("edges: expected an array");
  std::vector<Edge> list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto where = "edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 2) throw InputError(where + ": expected a pair [i, j]");
    list.emplace_back(as_int(e[0], where + "[0]"), as_int(e[1], where + "[1]"));
  }
  try {
    return Graph(n, list);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

ZVector parse_z(std::string_view text, int vertex_count) {
  const auto doc = parse_document(text);
  const auto& z = member(doc, "z");
  if (!z.is_array()) throw InputError("z: expected an array of words");
  if (static_cast<int>(z.size()) != vertex_count)
    throw InputError("z: expected " + std::to_string(vertex_count) + " entries, got " + std::to_string(z.size()));
  ZVector out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const auto where = "z[" + std::to_string(i) + "]";
    if (!z[i].is_string()) throw InputError(where + ": expected a word string");
    GroupWord w;
    try {
      w = GroupWord::parse(z[i].get<std::string>());
    } catch (const WordError& e) {
      throw InputError(where + ": " + e.what());
    }
    for (const auto& l : w.letters())
      if (l.generator < 1 || l.generator > vertex_count)
        throw InputError(where + ": generator x" + std::to_string(l.generator) + " is not a graph vertex");
    out.words.push_back(std::move(w));
  }
  return out;
}

Json z_to_json(const ZVector& z) {
  Json words = Json::array();
  for (const auto& w : z.words) words.push_back(w.to_string());
  return Json{{"z", words}};
}

QuadraticPresentation parse_presentation(std::string_view text) {
  const auto doc = parse_document(text);
  const auto& gens = member(doc, "generators");
  if (!gens.is_array()) throw InputError("generators: expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_string()) throw InputError("generators[" + std::to_string(i) + "]: expected a string");
    names.push_back(gens[i].get<std::string>());
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == names[i]) throw InputError("generators[" + std::to_string(i) + "]: duplicate name");
  }
  auto index_of = [&](const Json& v, const std::string& where) {
    if (!v.is_string()) throw InputError(where + ": expected a generator name");
    const auto s = v.get<std::string>();
    for (std::size_t j = 0; j < names.size(); ++j)
      if (names[j] == s) return static_cast<int>(j);
    throw InputError(where + ": unknown generator \"" + s + "\"");
  };
  const auto& rels = member(doc, "relations");
  if (!rels.is_array()) throw InputError("relations: expected an array");
  std::vector<Quadric> relations;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    const auto where = "relations[" + std::to_string(r) + "]";
    if (!rels[r].is_array()) throw InputError(where + ": expected a list of monomials");
    Quadric q;
    for (std::size_t m = 0; m < rels[r].size(); ++m) {
      const auto mw = where + "[" + std::to_string(m) + "]";
      const auto& mono = rels[r][m];
      if (!mono.is_array() || mono.size() != 2) throw InputError(mw + ": expected a pair of generator names");
      q.emplace_back(index_of(mono[0], mw + "[0]"), index_of(mono[1], mw + "[1]"));
    }
    relations.push_back(std::move(q));
  }
  return QuadraticPresentation(std::move(names), std::move(relations));
}

Json presentation_to_json(const QuadraticPresentation& p) {
  Json rels = Json::array();
  for (const auto& q : p.relations()) {
    Json r = Json::array();
    for (const auto& [a, b] : q)
      r.push_back({p.generators()[static_cast<std::size_t>(a)], p.generators()[static_cast<std::size_t>(b)]});
    rels.push_back(r);
  }
  return Json{{"generators", p.generators()}, {"relations", rels}};
}

Json tree_to_json(const DecompositionTree& t) {
  switch (t.kind) {
    case DecompositionTree::Kind::base:
      return Json{{"kind", "base"}};
    case DecompositionTree::Kind::cone:
      return Json{{"kind", "cone"}, {"u", t.cone_size}, {"child", tree_to_json(t.children.front())}};
    case DecompositionTree::Kind::coproduct: {
      Json children = Json::array();
      for (const auto& c : t.children) children.push_back(tree_to_json(c));
      return Json{{"kind", "coproduct"}, {"children", children}};
    }
  }
  return nullptr;
}

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json series_to_json(const IntSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(bigint_to_json(c));
  return Json{{"order", s.order()}, {"coefficients", coeffs}};
}

Json matrix_to_json(const UnipotentMatrix& m) { return m.to_bit_strings(); }

}  // namespace draag
