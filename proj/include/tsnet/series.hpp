#ifndef TSNET_SERIES_HPP
#define TSNET_SERIES_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace tsnet {

/// Immutable scalar time series sampled at consecutive integer times.
/// Sample k lives at time start_index() + k; every value is finite.
class TimeSeries {
 public:
  TimeSeries() = default;
  TimeSeries(std::vector<double> values, long start_index = 0,
             std::string label = {});

  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  long start_index() const { return start_index_; }
  long time(std::size_t i) const { return start_index_ + static_cast<long>(i); }
  const std::string& label() const { return label_; }

 private:
  std::vector<double> values_;
  long start_index_ = 0;
  std::string label_;
};

/// Parameters of the quadratic iteration x <- mu * x * (1 - x).
struct LogisticParams {
  double mu = 0.0;        // in [0, 4]
  double x0 = 0.4;        // strictly inside (0, 1)
  long n = 0;             // samples to record, >= 1
  long transient = 1000;  // iterations discarded before recording, >= 0
};

/// Iterates the map in plain double precision, discards the transient and
/// records the next n samples.
TimeSeries logistic_series(const LogisticParams& params);

enum class SeriesFormat { csv, json };

struct LoadOptions {
  SeriesFormat format = SeriesFormat::csv;
  int column = 0;            // CSV column index
  std::string column_name;   // when set, selects the CSV column by header name
  bool header = false;       // first CSV row is a header
  std::string label;         // label attached to the loaded series
};

/// Reads a series from a CSV or JSON file. Rows that fail to parse or hold a
/// non-finite value are hard errors naming the offending line.
TimeSeries load_series(const std::filesystem::path& path,
                       const LoadOptions& opts = {});

/// One sample per row, shortest round-trip decimal formatting, no header.
void save_series_csv(const TimeSeries& ts, const std::filesystem::path& path);

enum class SegmentMode { per_block, concatenate_by_label };

struct SegmentationPlan {
  long block_length = 0;
  std::vector<std::string> labels;  // applied cyclically to consecutive blocks
  SegmentMode mode = SegmentMode::per_block;
  bool allow_truncate = false;  // drop a trailing partial block instead of failing
};

/// A labeled slice (or label-wise concatenation of slices) of a source series.
/// block_starts records the original start time of every contributing block,
/// so concatenation seams stay identifiable.
struct Segment {
  TimeSeries series;
  std::vector<long> block_starts;
};

std::vector<Segment> segment_series(const TimeSeries& ts,
                                    const SegmentationPlan& plan);

}  // namespace tsnet

#endif  // TSNET_SERIES_HPP
