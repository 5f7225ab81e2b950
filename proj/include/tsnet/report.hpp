#ifndef TSNET_REPORT_HPP
#define TSNET_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsnet/q_analysis.hpp"
#include "tsnet/series.hpp"
#include "tsnet/visibility.hpp"

namespace tsnet {

inline constexpr int kReportSchemaVersion = 1;

struct InputDescriptor {
  std::string source;
  std::string label;
  long length = 0;
  long start_index = 0;
  std::vector<long> block_starts;  // original block starts for segment inputs
};

struct StageTimings {
  double visibility_ms = 0.0;
  double cliques_ms = 0.0;
  double analysis_ms = 0.0;
  double total_ms = 0.0;
};

struct PipelineOptions {
  VisibilityMethod method = VisibilityMethod::quadratic;
  bool include_node_dims = false;  // O(n) rows, so off unless asked for
};

/// Serializable characteriser bundle for one series or segment.
struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  InputDescriptor input;
  long long nodes = 0;
  long long edges = 0;
  int q_max = 0;
  StructureVectorSet vectors;
  std::vector<double> entropy;
  long long max_dim = 0;
  std::optional<std::vector<long long>> node_dims;
  StageTimings timing;
};

/// Runs series -> visibility graph -> maximal cliques -> characterisers and
/// verifies the identity suite before returning. `source` names the input in
/// the report (a path, "generated", ...).
AnalysisReport analyze_series(const TimeSeries& ts,
                              const PipelineOptions& opts = {},
                              const std::string& source = {});

/// Same pipeline when the visibility stage is bypassed by an ingested graph.
AnalysisReport analyze_graph(const VisibilityGraph& g,
                             const InputDescriptor& input,
                             const PipelineOptions& opts = {});

/// Rounds to the given number of significant decimal digits.
double round_sig(double x, int digits = 10);

nlohmann::json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& doc);

/// Report content used for equality comparisons: everything except the
/// timing block.
nlohmann::json comparison_canon(nlohmann::json report_json);

/// Side-by-side tables, one row per report: max_dim, S, f and Q per q-level.
/// A delta row is appended when exactly two reports are compared.
std::string comparison_table_text(const std::vector<AnalysisReport>& reports);
std::string comparison_table_csv(const std::vector<AnalysisReport>& reports);

}  // namespace tsnet

#endif  // TSNET_REPORT_HPP
