#include "tsnet/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "tsnet/errors.hpp"
#include "json.hpp"

namespace tsnet {

TimeSeries::TimeSeries(std::vector<double> values, long start_index,
                       std::string label)
    : values_(std::move(values)),
      start_index_(start_index),
      label_(std::move(label)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      fail(errc::non_finite_value,
           "sample " + std::to_string(i) + " is not finite");
    }
  }
}

TimeSeries logistic_series(const LogisticParams& p) {
  if (!(p.mu >= 0.0 && p.mu <= 4.0)) {
    fail(errc::invalid_parameter, "mu must lie in [0, 4]");
  }
  if (!(p.x0 > 0.0 && p.x0 < 1.0)) {
    fail(errc::invalid_parameter, "x0 must lie strictly inside (0, 1)");
  }
  if (p.n < 1) fail(errc::invalid_parameter, "n must be >= 1");
  if (p.transient < 0) fail(errc::invalid_parameter, "transient must be >= 0");

  double x = p.x0;
  for (long k = 0; k < p.transient; ++k) x = p.mu * x * (1.0 - x);

  std::vector<double> out(static_cast<std::size_t>(p.n));
  for (long k = 0; k < p.n; ++k) {
    out[static_cast<std::size_t>(k)] = x;
    x = p.mu * x * (1.0 - x);
  }

  std::ostringstream tag;
  tag << "logistic(mu=" << p.mu << ",x0=" << p.x0 << ")";
  return TimeSeries(std::move(out), 0, tag.str());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(pos)));
      break;
    }
    cells.push_back(trim(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return cells;
}

/// Parses a full cell as a double; from_chars does the heavy lifting so
/// "nan"/"inf" spellings are recognized and flagged as non-finite.
double parse_cell(std::string_view cell, std::size_t line_no) {
  if (cell.empty()) {
    fail(errc::parse_failure, "line " + std::to_string(line_no) + ": empty cell");
  }
  std::string_view body = cell;
  if (body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    fail(errc::parse_failure, "line " + std::to_string(line_no) +
                                  ": not a number: '" + std::string(cell) + "'");
  }
  if (!std::isfinite(value)) {
    fail(errc::non_finite_value, "line " + std::to_string(line_no) +
                                     ": non-finite value '" + std::string(cell) + "'");
  }
  return value;
}

TimeSeries load_csv(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) fail(errc::missing_file, "cannot open " + path.string());

  const bool by_name = !opts.column_name.empty();
  const bool header = opts.header || by_name;
  int column = opts.column;

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_csv(line);
    if (header && !header_seen) {
      header_seen = true;
      if (by_name) {
        auto it = std::find_if(cells.begin(), cells.end(), [&](std::string_view c) {
          return c == opts.column_name;
        });
        if (it == cells.end()) {
          fail(errc::parse_failure,
               "header has no column named '" + opts.column_name + "'");
        }
        column = static_cast<int>(it - cells.begin());
      }
      continue;
    }
    if (column < 0 || static_cast<std::size_t>(column) >= cells.size()) {
      fail(errc::parse_failure, "line " + std::to_string(line_no) +
                                    ": no column " + std::to_string(column));
    }
    values.push_back(parse_cell(cells[static_cast<std::size_t>(column)], line_no));
  }
  if (values.empty()) fail(errc::empty_column, "no samples in " + path.string());
  return TimeSeries(std::move(values), 0, opts.label);
}

TimeSeries load_json(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) fail(errc::missing_file, "cannot open " + path.string());

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_failure, path.string() + ": " + e.what());
  }
  if (!doc.is_array()) {
    fail(errc::parse_failure, path.string() + ": expected a top-level array");
  }
  if (doc.empty()) fail(errc::empty_column, "no samples in " + path.string());

  std::vector<double> values;
  values.reserve(doc.size());
  long start_index = 0;

  if (doc.front().is_object()) {
    // array of {"t": ..., "y": ...} records at consecutive integer times
    long expected_t = 0;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const auto& rec = doc[i];
      if (!rec.is_object() || !rec.contains("t") || !rec.contains("y") ||
          !rec["t"].is_number_integer() || !rec["y"].is_number()) {
        fail(errc::parse_failure, "record " + std::to_string(i) +
                                      ": expected {\"t\": int, \"y\": number}");
      }
      long t = rec["t"].get<long>();
      if (i == 0) {
        start_index = t;
        expected_t = t;
      }
      if (t != expected_t) {
        fail(errc::parse_failure,
             "record " + std::to_string(i) + ": time stamps must be consecutive");
      }
      ++expected_t;
      values.push_back(rec["y"].get<double>());
    }
  } else {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (!doc[i].is_number()) {
        fail(errc::parse_failure,
             "element " + std::to_string(i) + " is not a number");
      }
      values.push_back(doc[i].get<double>());
    }
  }
  return TimeSeries(std::move(values), start_index, opts.label);
}

}  // namespace

TimeSeries load_series(const std::filesystem::path& path, const LoadOptions& opts) {
  if (!std::filesystem::exists(path)) {
    fail(errc::missing_file, "no such file: " + path.string());
  }
  return opts.format == SeriesFormat::csv ? load_csv(path, opts)
                                          : load_json(path, opts);
}

void save_series_csv(const TimeSeries& ts, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(errc::missing_file, "cannot write " + path.string());
  char buf[64];
  for (double v : ts.values()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, ptr - buf);
    out.put('\n');
  }
}

std::vector<Segment> segment_series(const TimeSeries& ts,
                                    const SegmentationPlan& plan) {
  if (plan.block_length < 1) {
    fail(errc::invalid_parameter, "block_length must be >= 1");
  }
  if (plan.labels.empty()) {
    fail(errc::invalid_parameter, "segmentation needs at least one label");
  }
  const long n = static_cast<long>(ts.size());
  const long blocks = n / plan.block_length;
  const long remainder = n % plan.block_length;
  if (blocks == 0) {
    fail(errc::segmentation_mismatch,
         "series of length " + std::to_string(n) + " is shorter than one block");
  }
  if (remainder != 0 && !plan.allow_truncate) {
    fail(errc::segmentation_mismatch,
         std::to_string(remainder) + " trailing samples do not fill a block; "
         "pass the truncation flag to drop them");
  }

  auto values = ts.values();
  std::vector<Segment> per_block;
  per_block.reserve(static_cast<std::size_t>(blocks));
  for (long b = 0; b < blocks; ++b) {
    const long offset = b * plan.block_length;
    const long start = ts.start_index() + offset;
    const auto& label = plan.labels[static_cast<std::size_t>(b) % plan.labels.size()];
    std::vector<double> slice(values.begin() + offset,
                              values.begin() + offset + plan.block_length);
    per_block.push_back(
        {TimeSeries(std::move(slice), start, label), {start}});
  }
  if (plan.mode == SegmentMode::per_block) return per_block;

  // concatenate-by-label: one segment per distinct label, blocks kept in
  // temporal order; seams are visible through block_starts
  std::vector<Segment> merged;
  std::map<std::string, std::size_t> slot;
  for (auto& seg : per_block) {
    auto [it, inserted] = slot.try_emplace(seg.series.label(), merged.size());
    if (inserted) {
      merged.push_back(std::move(seg));
      continue;
    }
    Segment& dst = merged[it->second];
    std::vector<double> joined(dst.series.values().begin(),
                               dst.series.values().end());
    joined.insert(joined.end(), seg.series.values().begin(),
                  seg.series.values().end());
    dst.block_starts.push_back(seg.block_starts.front());
    dst.series = TimeSeries(std::move(joined), dst.series.start_index(),
                            dst.series.label());
  }
  return merged;
}

}  // namespace tsnet
