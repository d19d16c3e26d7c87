#pragma once

#include <optional>
#include <string>
#include <vector>

#include "draag/json_io.hpp"
#include "draag/quad_alg.hpp"
#include "draag/series.hpp"

namespace draag {

inline constexpr const char* kSchemaVersion = "draag-report/1";

/// Object holding the schema header and the command name.
Json report_header(const std::string& command);

struct CalibrationResult {
  std::optional<SumMode> chosen;  // empty if neither mode fits
  int max_vertices = 0;
  int accepted_graphs = 0;                     // nonempty accepted graphs checked
  std::vector<int> witnessed;                  // per mode: accepted graphs with a witness
  std::vector<bool> square_rejected;           // per mode: C4 admits no witness
  std::vector<Graph> disagreements;            // graphs where the two modes differ
};

/// Picks the sum constant under which every nonempty accepted graph up to
/// `max_vertices` vertices has a witness and the square graph has none.
CalibrationResult calibrate_sum_mode(int max_vertices = 7);
Json calibration_to_json(const CalibrationResult& c);

struct AnalyzeOptions {
  int trunc = 8;
  std::optional<SumMode> sum_mode;  // empty: calibrate
  std::optional<std::string> order;
  std::size_t hilbert_columns = std::size_t{1} << 22;
};

/// Full per-graph report. Throws AlgebraError when z is not a valid twist.
Json analysis_report(const Graph& g, const ZVector& z, const AnalyzeOptions& options);

Json recognition_to_json(const Recognition& r);
Json witness_to_json(const std::optional<RealizabilityWitness>& w);
Json pbw_to_json(const QuadraticPresentation& p, const GeneratorOrder& order, const PbwResult& r);

/// Hilbert dimensions up to `order`, lowering the order until the column
/// budget suffices. Returns the dimensions actually computed.
std::vector<std::uint64_t> hilbert_within_budget(const QuadraticPresentation& p, int order, std::size_t columns);

}  // namespace draag
