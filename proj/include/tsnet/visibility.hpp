#ifndef TSNET_VISIBILITY_HPP
#define TSNET_VISIBILITY_HPP

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "tsnet/series.hpp"

namespace tsnet {

/// Simple undirected graph over time indices 0..n-1. Adjacency is stored as
/// sorted neighbor lists; the structure is immutable once built.
class VisibilityGraph {
 public:
  VisibilityGraph() = default;

  /// Builds from an edge list. Self-loops and out-of-range endpoints are
  /// rejected; duplicate edges collapse to one.
  VisibilityGraph(int node_count, std::vector<std::pair<int, int>> edges);

  int node_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edge_count_; }
  std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(int u, int v) const;

 private:
  std::vector<std::vector<int>> adj_;
  long long edge_count_ = 0;
};

enum class VisibilityMethod { quadratic, divide_and_conquer };

/// True iff samples i and j see each other: every intermediate sample lies
/// strictly below the straight segment joining them. A collinear intermediate
/// blocks the sight line. Evaluated in plain double precision.
bool visible(const TimeSeries& ts, int i, int j);

/// Connects every mutually visible pair of samples. The quadratic method
/// scans each row keeping the running maximum slope; the divide-and-conquer
/// method recurses around the range maximum. Both produce the same edge set.
VisibilityGraph build_visibility_graph(
    const TimeSeries& ts, VisibilityMethod method = VisibilityMethod::quadratic);

/// Number of connected components (BFS).
int component_count(const VisibilityGraph& g);

/// One "i j" pair per line, i < j, lexicographically ascending.
void write_edge_list(const VisibilityGraph& g, std::ostream& out);
VisibilityGraph read_edge_list(std::istream& in);

/// Graphviz dump for eyeballing small graphs.
void write_dot(const VisibilityGraph& g, std::ostream& out);

}  // namespace tsnet

#endif  // TSNET_VISIBILITY_HPP
