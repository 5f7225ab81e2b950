// tsnet: map a scalar time series to its natural visibility graph, extract
// the clique complex and report the simplicial characterisers.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsnet/clique.hpp"
#include "tsnet/errors.hpp"
#include "tsnet/report.hpp"
#include "tsnet/series.hpp"
#include "tsnet/visibility.hpp"

namespace fs = std::filesystem;

namespace {

// exit codes: 0 success, 1 usage, 2 input error, 3 internal invariant
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct GenerateArgs {
  double mu = 0.0;
  double x0 = 0.4;
  long n = 0;
  long transient = 1000;
  std::string out;
  std::string label;
};

struct AnalyzeArgs {
  std::string input;
  std::string graph_input;
  std::string format;  // "", "csv", "json"
  std::string column = "0";
  bool header = false;
  std::string label;
  std::string method = "quadratic";
  std::string report;
  std::string edges_out;
  std::string cliques_out;
  std::string dot_out;
  bool node_dims = false;
  long block_length = 0;
  std::string labels;
  std::string mode = "per-block";
  bool truncate = false;
};

struct CompareArgs {
  std::vector<std::string> reports;
  std::string out;
  std::string csv;
};

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) tsnet::fail(tsnet::errc::missing_file, "cannot write " + path.string());
  out << content;
}

int run_generate(const GenerateArgs& args) {
  tsnet::LogisticParams params{args.mu, args.x0, args.n, args.transient};
  tsnet::TimeSeries ts = tsnet::logistic_series(params);
  tsnet::save_series_csv(ts, args.out);

  nlohmann::json meta;
  meta["command"] = "generate";
  meta["mu"] = args.mu;
  meta["x0"] = args.x0;
  meta["n"] = args.n;
  meta["transient"] = args.transient;
  meta["label"] = args.label.empty() ? ts.label() : args.label;
  meta["output"] = args.out;
  write_text_file(args.out + ".meta.json", meta.dump(2) + "\n");

  std::cerr << "wrote " << ts.size() << " samples to " << args.out << "\n";
  return 0;
}

tsnet::LoadOptions load_options(const AnalyzeArgs& args) {
  tsnet::LoadOptions opts;
  if (args.format == "json") {
    opts.format = tsnet::SeriesFormat::json;
  } else if (args.format == "csv" || args.format.empty()) {
    opts.format = args.format.empty() && fs::path(args.input).extension() == ".json"
                      ? tsnet::SeriesFormat::json
                      : tsnet::SeriesFormat::csv;
  } else {
    tsnet::fail(tsnet::errc::invalid_parameter,
                "unknown --format '" + args.format + "' (csv or json)");
  }
  const bool numeric = !args.column.empty() &&
                       std::all_of(args.column.begin(), args.column.end(),
                                   [](unsigned char c) { return std::isdigit(c); });
  if (numeric) {
    try {
      opts.column = std::stoi(args.column);
    } catch (const std::exception&) {
      tsnet::fail(tsnet::errc::invalid_parameter,
                  "--column index out of range: " + args.column);
    }
  } else {
    opts.column_name = args.column;
  }
  opts.header = args.header;
  opts.label = args.label;
  return opts;
}

tsnet::PipelineOptions pipeline_options(const AnalyzeArgs& args) {
  tsnet::PipelineOptions opts;
  if (args.method == "quadratic") {
    opts.method = tsnet::VisibilityMethod::quadratic;
  } else if (args.method == "divide-and-conquer" || args.method == "dnc") {
    opts.method = tsnet::VisibilityMethod::divide_and_conquer;
  } else {
    tsnet::fail(tsnet::errc::invalid_parameter,
                "unknown --method '" + args.method + "'");
  }
  opts.include_node_dims = args.node_dims;
  return opts;
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> labels;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) labels.push_back(item);
  }
  return labels;
}

std::string sanitize(const std::string& label) {
  std::string out;
  for (char c : label) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  return out;
}

void emit_report(const tsnet::AnalysisReport& report, const std::string& path) {
  const std::string body = tsnet::report_to_json(report).dump(2) + "\n";
  if (path.empty()) {
    std::cout << body;
  } else {
    write_text_file(path, body);
  }
}

int run_analyze_graph(const AnalyzeArgs& args) {
  std::ifstream in(args.graph_input);
  if (!in) {
    tsnet::fail(tsnet::errc::missing_file, "cannot open " + args.graph_input);
  }
  tsnet::VisibilityGraph g = tsnet::read_edge_list(in);
  tsnet::InputDescriptor input;
  input.source = args.graph_input;
  input.label = args.label;
  input.length = g.node_count();
  tsnet::AnalysisReport report =
      tsnet::analyze_graph(g, input, pipeline_options(args));
  emit_report(report, args.report);
  return 0;
}

int run_analyze_batch(const AnalyzeArgs& args, const tsnet::TimeSeries& ts) {
  if (args.report.empty()) {
    tsnet::fail(tsnet::errc::invalid_parameter,
                "segmented analysis needs --report DIR");
  }
  if (!args.edges_out.empty() || !args.cliques_out.empty() || !args.dot_out.empty()) {
    tsnet::fail(tsnet::errc::invalid_parameter,
                "--edges/--cliques/--dot apply to whole-series analysis only");
  }
  tsnet::SegmentationPlan plan;
  plan.block_length = args.block_length;
  plan.labels = split_labels(args.labels);
  if (args.mode == "per-block") {
    plan.mode = tsnet::SegmentMode::per_block;
  } else if (args.mode == "concat-by-label") {
    plan.mode = tsnet::SegmentMode::concatenate_by_label;
  } else {
    tsnet::fail(tsnet::errc::invalid_parameter, "unknown --mode '" + args.mode + "'");
  }
  plan.allow_truncate = args.truncate;

  std::vector<tsnet::Segment> segments = tsnet::segment_series(ts, plan);
  const tsnet::PipelineOptions opts = pipeline_options(args);

  // segments are independent pipelines; analyze concurrently, write serially
  std::vector<std::future<tsnet::AnalysisReport>> pending;
  pending.reserve(segments.size());
  for (const auto& seg : segments) {
    pending.push_back(std::async(std::launch::async, [&opts, &args, &seg] {
      tsnet::AnalysisReport r = tsnet::analyze_series(seg.series, opts, args.input);
      r.input.block_starts = seg.block_starts;
      return r;
    }));
  }

  const fs::path dir(args.report);
  fs::create_directories(dir);
  for (std::size_t k = 0; k < pending.size(); ++k) {
    tsnet::AnalysisReport report = pending[k].get();
    std::ostringstream name;
    name << "segment_" << std::setw(3) << std::setfill('0') << k << '_'
         << sanitize(segments[k].series.label()) << ".json";
    emit_report(report, (dir / name.str()).string());
  }
  std::cerr << "wrote " << segments.size() << " segment reports to "
            << dir.string() << "\n";
  return 0;
}

int run_analyze(const AnalyzeArgs& args) {
  if (!args.graph_input.empty()) {
    if (!args.input.empty()) {
      tsnet::fail(tsnet::errc::invalid_parameter,
                  "--input and --graph-input are mutually exclusive");
    }
    return run_analyze_graph(args);
  }
  if (args.input.empty()) {
    tsnet::fail(tsnet::errc::invalid_parameter,
                "analyze needs --input FILE or --graph-input FILE");
  }

  tsnet::TimeSeries ts = tsnet::load_series(args.input, load_options(args));
  if (args.block_length > 0) return run_analyze_batch(args, ts);

  const tsnet::PipelineOptions opts = pipeline_options(args);
  tsnet::AnalysisReport report = tsnet::analyze_series(ts, opts, args.input);

  if (!args.edges_out.empty() || !args.cliques_out.empty() || !args.dot_out.empty()) {
    tsnet::VisibilityGraph g = tsnet::build_visibility_graph(ts, opts.method);
    if (!args.edges_out.empty()) {
      std::ostringstream buf;
      tsnet::write_edge_list(g, buf);
      write_text_file(args.edges_out, buf.str());
    }
    if (!args.dot_out.empty()) {
      std::ostringstream buf;
      tsnet::write_dot(g, buf);
      write_text_file(args.dot_out, buf.str());
    }
    if (!args.cliques_out.empty()) {
      std::ostringstream buf;
      tsnet::write_cliques(tsnet::maximal_cliques(g), buf);
      write_text_file(args.cliques_out, buf.str());
    }
  }

  emit_report(report, args.report);
  return 0;
}

int run_compare(const CompareArgs& args) {
  std::vector<tsnet::AnalysisReport> reports;
  reports.reserve(args.reports.size());
  for (const auto& path : args.reports) {
    std::ifstream in(path);
    if (!in) tsnet::fail(tsnet::errc::missing_file, "cannot open " + path);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      tsnet::fail(tsnet::errc::parse_failure, path + ": " + e.what());
    }
    reports.push_back(tsnet::report_from_json(doc));
  }
  const std::string text = tsnet::comparison_table_text(reports);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(args.out, text);
  }
  if (!args.csv.empty()) {
    write_text_file(args.csv, tsnet::comparison_table_csv(reports));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplicial characterisers of time-series visibility graphs"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "generate a logistic-map series as CSV");
  gen->add_option("--mu", gen_args.mu, "map parameter, in [0,4]")->required();
  gen->add_option("--x0", gen_args.x0, "initial condition, in (0,1)");
  gen->add_option("--n", gen_args.n, "number of samples")->required();
  gen->add_option("--transient", gen_args.transient,
                  "iterations discarded before recording");
  gen->add_option("--out", gen_args.out, "output CSV path")->required();
  gen->add_option("--label", gen_args.label, "label recorded in the sidecar");

  AnalyzeArgs an_args;
  auto* an = app.add_subcommand(
      "analyze", "series -> visibility graph -> cliques -> characterisers");
  an->add_option("--input", an_args.input, "series file (CSV or JSON)");
  an->add_option("--graph-input", an_args.graph_input,
                 "edge-list file; bypasses the visibility stage");
  an->add_option("--format", an_args.format, "csv|json (default: by extension)");
  an->add_option("--column", an_args.column, "CSV column index or header name");
  an->add_flag("--header", an_args.header, "first CSV row is a header");
  an->add_option("--label", an_args.label, "label attached to the series");
  an->add_option("--method", an_args.method, "quadratic|divide-and-conquer");
  an->add_option("--report", an_args.report,
                 "report JSON path (directory in segmented mode; default stdout)");
  an->add_option("--edges", an_args.edges_out, "also dump the edge list");
  an->add_option("--cliques", an_args.cliques_out, "also dump the maximal cliques");
  an->add_option("--dot", an_args.dot_out, "also dump the graph in DOT form");
  an->add_flag("--node-dims", an_args.node_dims,
               "include per-node dimensions in the report");
  an->add_option("--block-length", an_args.block_length,
                 "segment the series into blocks of this length");
  an->add_option("--labels", an_args.labels,
                 "comma-separated block labels, applied cyclically");
  an->add_option("--mode", an_args.mode, "per-block|concat-by-label");
  an->add_flag("--truncate", an_args.truncate, "drop a trailing partial block");

  CompareArgs cmp_args;
  auto* cmp = app.add_subcommand("compare", "tabulate reports side by side");
  cmp->add_option("reports", cmp_args.reports, "report JSON files")
      ->expected(2, -1);
  cmp->add_option("--out", cmp_args.out, "text table path (default stdout)");
  cmp->add_option("--csv", cmp_args.csv, "also write the table as CSV");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_generate(gen_args);
    if (an->parsed()) return run_analyze(an_args);
    if (cmp->parsed()) return run_compare(cmp_args);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const tsnet::Error& e) {
    std::cerr << "tsnet: " << e.what() << "\n";
    return e.code() == tsnet::errc::internal_invariant ? kExitInternal
                                                       : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "tsnet: unexpected failure: " << e.what() << "\n";
    return kExitInternal;
  }
}
