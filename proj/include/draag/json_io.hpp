#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "draag/graph.hpp"
#include "draag/quad_alg.hpp"
#include "draag/raag_words.hpp"
#include "draag/recognition.hpp"
#include "draag/series.hpp"
#include "draag/unipotent.hpp"

namespace draag {

using Json = nlohmann::ordered_json;

/// Malformed input documents; messages carry a JSON path or byte offset.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

/// {"vertices": n, "edges": [[i,j], ...]}, 1-based endpoints.
Graph parse_graph(std::string_view text);
Json graph_to_json(const Graph& g);

/// {"z": ["1", "x5", ...]}; the entry count must equal `vertex_count`.
ZVector parse_z(std::string_view text, int vertex_count);
Json z_to_json(const ZVector& z);

/// {"generators": ["X0", ...], "relations": [[["X0","X0"]], ...]}.
QuadraticPresentation parse_presentation(std::string_view text);
Json presentation_to_json(const QuadraticPresentation& p);

Json tree_to_json(const DecompositionTree& t);
Json bigint_to_json(const BigInt& v);
Json series_to_json(const IntSeries& s);
Json matrix_to_json(const UnipotentMatrix& m);

}  // namespace draag
