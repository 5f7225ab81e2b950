#include "tsnet/report.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "tsnet/errors.hpp"

namespace tsnet {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Upstream failures keep their error code but gain stage attribution.
template <class F>
auto run_stage(const char* stage, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), std::string(stage) + " stage: " + e.message());
  }
}

std::string shortest_repr(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

AnalysisReport assemble(const VisibilityGraph& g, const InputDescriptor& input,
                        const PipelineOptions& opts, double visibility_ms,
                        Clock::time_point t_total) {
  auto t1 = Clock::now();
  CliqueComplex cx = run_stage("cliques", [&] { return maximal_cliques(g); });
  const double cliques_ms = ms_since(t1);

  auto t2 = Clock::now();
  Analysis analysis = run_stage("analysis", [&] {
    Analysis a = analyze(cx);
    verify_identities(a, cx, &g);
    return a;
  });
  const double analysis_ms = ms_since(t2);

  AnalysisReport report;
  report.input = input;
  report.nodes = g.node_count();
  report.edges = g.edge_count();
  report.q_max = analysis.q_max;
  report.vectors = std::move(analysis.vectors);
  for (double& qh : report.vectors.Qhat) qh = round_sig(qh);
  report.entropy = std::move(analysis.entropy);
  for (double& s : report.entropy) s = round_sig(s);
  report.max_dim = analysis.participation.max_dim;
  if (opts.include_node_dims) {
    report.node_dims = std::move(analysis.participation.dim_q);
  }
  report.timing.visibility_ms = round_sig(visibility_ms, 6);
  report.timing.cliques_ms = round_sig(cliques_ms, 6);
  report.timing.analysis_ms = round_sig(analysis_ms, 6);
  report.timing.total_ms = round_sig(ms_since(t_total), 6);
  return report;
}

}  // namespace

double round_sig(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

AnalysisReport analyze_series(const TimeSeries& ts, const PipelineOptions& opts,
                              const std::string& source) {
  auto t0 = Clock::now();
  VisibilityGraph g =
      run_stage("visibility", [&] { return build_visibility_graph(ts, opts.method); });
  const double visibility_ms = ms_since(t0);

  InputDescriptor input;
  input.source = source;
  input.label = ts.label();
  input.length = static_cast<long>(ts.size());
  input.start_index = ts.start_index();
  return assemble(g, input, opts, visibility_ms, t0);
}

AnalysisReport analyze_graph(const VisibilityGraph& g,
                             const InputDescriptor& input,
                             const PipelineOptions& opts) {
  return assemble(g, input, opts, 0.0, Clock::now());
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json doc;
  doc["schema_version"] = r.schema_version;
  doc["input"] = {{"source", r.input.source},
                  {"label", r.input.label},
                  {"length", r.input.length},
                  {"start_index", r.input.start_index}};
  if (!r.input.block_starts.empty()) {
    doc["input"]["block_starts"] = r.input.block_starts;
  }
  doc["graph"] = {{"nodes", r.nodes}, {"edges", r.edges}};
  doc["q_max"] = r.q_max;
  doc["vectors"] = {{"Q", r.vectors.Q},
                    {"Ns", r.vectors.Ns},
                    {"f", r.vectors.f},
                    {"Qhat", r.vectors.Qhat}};
  doc["entropy"] = r.entropy;
  doc["max_dim"] = r.max_dim;
  if (r.node_dims) doc["node_dims"] = *r.node_dims;
  doc["timing_ms"] = {{"visibility", r.timing.visibility_ms},
                      {"cliques", r.timing.cliques_ms},
                      {"analysis", r.timing.analysis_ms},
                      {"total", r.timing.total_ms}};
  return doc;
}

AnalysisReport report_from_json(const nlohmann::json& doc) {
  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != kReportSchemaVersion) {
      fail(errc::format_mismatch,
           "report schema version " + std::to_string(version) +
               ", this build reads version " +
               std::to_string(kReportSchemaVersion));
    }
    AnalysisReport r;
    r.schema_version = version;
    const auto& input = doc.at("input");
    r.input.source = input.at("source").get<std::string>();
    r.input.label = input.at("label").get<std::string>();
    r.input.length = input.at("length").get<long>();
    r.input.start_index = input.at("start_index").get<long>();
    if (input.contains("block_starts")) {
      r.input.block_starts = input.at("block_starts").get<std::vector<long>>();
    }
    r.nodes = doc.at("graph").at("nodes").get<long long>();
    r.edges = doc.at("graph").at("edges").get<long long>();
    r.q_max = doc.at("q_max").get<int>();
    const auto& vectors = doc.at("vectors");
    r.vectors.Q = vectors.at("Q").get<std::vector<long long>>();
    r.vectors.Ns = vectors.at("Ns").get<std::vector<long long>>();
    r.vectors.f = vectors.at("f").get<std::vector<long long>>();
    r.vectors.Qhat = vectors.at("Qhat").get<std::vector<double>>();
    r.entropy = doc.at("entropy").get<std::vector<double>>();
    r.max_dim = doc.at("max_dim").get<long long>();
    if (doc.contains("node_dims")) {
      r.node_dims = doc.at("node_dims").get<std::vector<long long>>();
    }
    const auto& timing = doc.at("timing_ms");
    r.timing.visibility_ms = timing.at("visibility").get<double>();
    r.timing.cliques_ms = timing.at("cliques").get<double>();
    r.timing.analysis_ms = timing.at("analysis").get<double>();
    r.timing.total_ms = timing.at("total").get<double>();
    return r;
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_failure, std::string("malformed report: ") + e.what());
  }
}

nlohmann::json comparison_canon(nlohmann::json report_json) {
  report_json.erase("timing_ms");
  return report_json;
}

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string report_name(const AnalysisReport& r, std::size_t index) {
  if (!r.input.label.empty()) return r.input.label;
  if (!r.input.source.empty()) return r.input.source;
  return "report-" + std::to_string(index);
}

Table build_table(const std::vector<AnalysisReport>& reports) {
  int levels = 0;
  for (const auto& r : reports) levels = std::max(levels, r.q_max + 1);

  Table t;
  t.header = {"report", "nodes", "edges", "q_max", "max_dim"};
  for (int q = 0; q < levels; ++q) t.header.push_back("S(" + std::to_string(q) + ")");
  for (int q = 0; q < levels; ++q) t.header.push_back("f(" + std::to_string(q) + ")");
  for (int q = 0; q < levels; ++q) t.header.push_back("Q(" + std::to_string(q) + ")");

  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::vector<std::string> row{report_name(r, i), std::to_string(r.nodes),
                                 std::to_string(r.edges), std::to_string(r.q_max),
                                 std::to_string(r.max_dim)};
    for (int q = 0; q < levels; ++q) {
      row.push_back(q <= r.q_max ? shortest_repr(r.entropy[static_cast<std::size_t>(q)])
                                 : "-");
    }
    for (int q = 0; q < levels; ++q) {
      row.push_back(q <= r.q_max
                        ? std::to_string(r.vectors.f[static_cast<std::size_t>(q)])
                        : "-");
    }
    for (int q = 0; q < levels; ++q) {
      row.push_back(q <= r.q_max
                        ? std::to_string(r.vectors.Q[static_cast<std::size_t>(q)])
                        : "-");
    }
    t.rows.push_back(std::move(row));
  }

  if (reports.size() == 2) {
    const auto& a = reports[0];
    const auto& b = reports[1];
    std::vector<std::string> delta{"delta", std::to_string(b.nodes - a.nodes),
                                   std::to_string(b.edges - a.edges),
                                   std::to_string(b.q_max - a.q_max),
                                   std::to_string(b.max_dim - a.max_dim)};
    auto both = [&](int q) { return q <= a.q_max && q <= b.q_max; };
    for (int q = 0; q < levels; ++q) {
      delta.push_back(both(q) ? shortest_repr(round_sig(
                                    b.entropy[static_cast<std::size_t>(q)] -
                                    a.entropy[static_cast<std::size_t>(q)]))
                              : "-");
    }
    for (int q = 0; q < levels; ++q) {
      delta.push_back(both(q)
                          ? std::to_string(b.vectors.f[static_cast<std::size_t>(q)] -
                                           a.vectors.f[static_cast<std::size_t>(q)])
                          : "-");
    }
    for (int q = 0; q < levels; ++q) {
      delta.push_back(both(q)
                          ? std::to_string(b.vectors.Q[static_cast<std::size_t>(q)] -
                                           a.vectors.Q[static_cast<std::size_t>(q)])
                          : "-");
    }
    t.rows.push_back(std::move(delta));
  }
  return t;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string comparison_table_text(const std::vector<AnalysisReport>& reports) {
  Table t = build_table(reports);
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c];
      if (c + 1 < row.size()) {
        for (std::size_t pad = row[c].size(); pad < width[c]; ++pad) out << ' ';
      }
    }
    out << '\n';
  };
  emit(t.header);
  for (const auto& row : t.rows) emit(row);
  return out.str();
}

std::string comparison_table_csv(const std::vector<AnalysisReport>& reports) {
  Table t = build_table(reports);
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << csv_escape(row[c]);
    }
    out << '\n';
  };
  emit(t.header);
  for (const auto& row : t.rows) emit(row);
  return out.str();
}

}  // namespace tsnet
