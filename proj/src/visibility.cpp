#include "tsnet/visibility.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "tsnet/errors.hpp"

namespace tsnet {

VisibilityGraph::VisibilityGraph(int node_count,
                                 std::vector<std::pair<int, int>> edges) {
  if (node_count < 0) fail(errc::invalid_parameter, "negative node count");
  adj_.resize(static_cast<std::size_t>(node_count));
  for (auto& [u, v] : edges) {
    if (u == v) fail(errc::invalid_parameter, "self-loop at node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      fail(errc::invalid_parameter, "edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [u, v] : edges) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
  edge_count_ = static_cast<long long>(edges.size());
}

bool VisibilityGraph::has_edge(int u, int v) const {
  const auto& row = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

bool visible(const TimeSeries& ts, int i, int j) {
  const int n = static_cast<int>(ts.size());
  if (i < 0 || j <= i || j >= n) {
    fail(errc::invalid_parameter, "visible() needs 0 <= i < j < length");
  }
  const double yi = ts[static_cast<std::size_t>(i)];
  const double yj = ts[static_cast<std::size_t>(j)];
  for (int r = i + 1; r < j; ++r) {
    const double line = yj + (yi - yj) * static_cast<double>(j - r) /
                                 static_cast<double>(j - i);
    if (!(ts[static_cast<std::size_t>(r)] < line)) return false;
  }
  return true;
}

namespace {

/// Scans rightward from anchor a over positions (a, hi], emitting an edge
/// whenever the slope to the current point strictly exceeds the maximum slope
/// to every intermediate. Mirrored for leftward scans via step = -1.
void scan_from(std::span<const double> y, int anchor, int last, int step,
               std::vector<std::pair<int, int>>& edges) {
  double max_slope = -std::numeric_limits<double>::infinity();
  const double ya = y[static_cast<std::size_t>(anchor)];
  for (int j = anchor + step; step > 0 ? j <= last : j >= last; j += step) {
    const double slope = (y[static_cast<std::size_t>(j)] - ya) /
                         static_cast<double>(step > 0 ? j - anchor : anchor - j);
    if (slope > max_slope) {
      edges.emplace_back(std::min(anchor, j), std::max(anchor, j));
      max_slope = slope;
    }
  }
}

std::vector<std::pair<int, int>> edges_quadratic(std::span<const double> y) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(y.size());
  edges.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i + 1 < n; ++i) scan_from(y, i, n - 1, +1, edges);
  return edges;
}

std::vector<std::pair<int, int>> edges_divide_and_conquer(std::span<const double> y) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(y.size());
  edges.reserve(static_cast<std::size_t>(2 * n));
  // No sight line crosses the maximum of its range, so every edge either has
  // the range maximum as an endpoint or lies entirely inside one half.
  std::vector<std::pair<int, int>> ranges{{0, n - 1}};
  while (!ranges.empty()) {
    auto [lo, hi] = ranges.back();
    ranges.pop_back();
    if (hi - lo < 1) continue;
    int k = lo;
    for (int r = lo + 1; r <= hi; ++r) {
      if (y[static_cast<std::size_t>(r)] > y[static_cast<std::size_t>(k)]) k = r;
    }
    if (k < hi) scan_from(y, k, hi, +1, edges);
    if (k > lo) scan_from(y, k, lo, -1, edges);
    ranges.emplace_back(lo, k - 1);
    ranges.emplace_back(k + 1, hi);
  }
  return edges;
}

}  // namespace

VisibilityGraph build_visibility_graph(const TimeSeries& ts,
                                       VisibilityMethod method) {
  const int n = static_cast<int>(ts.size());
  if (n < 2) {
    fail(errc::invalid_parameter,
         "visibility graph needs at least 2 samples, got " + std::to_string(n));
  }
  auto edges = method == VisibilityMethod::quadratic
                   ? edges_quadratic(ts.values())
                   : edges_divide_and_conquer(ts.values());
  return VisibilityGraph(n, std::move(edges));
}

int component_count(const VisibilityGraph& g) {
  const int n = g.node_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    seen[static_cast<std::size_t>(s)] = 1;
    queue.assign(1, s);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return components;
}

void write_edge_list(const VisibilityGraph& g, std::ostream& out) {
  for (int u = 0; u < g.node_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v > u) out << u << ' ' << v << '\n';
    }
  }
}

VisibilityGraph read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_node = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    long u, v;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest)) {
      fail(errc::parse_failure,
           "edge list line " + std::to_string(line_no) + ": expected 'i j'");
    }
    if (u < 0 || v < 0 || u == v) {
      fail(errc::parse_failure,
           "edge list line " + std::to_string(line_no) + ": bad endpoints");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_node = std::max(max_node, static_cast<int>(std::max(u, v)));
  }
  if (edges.empty()) fail(errc::empty_column, "edge list holds no edges");
  return VisibilityGraph(max_node + 1, std::move(edges));
}

void write_dot(const VisibilityGraph& g, std::ostream& out) {
  out << "graph ts {\n";
  for (int u = 0; u < g.node_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v > u) out << "  " << u << " -- " << v << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace tsnet
