#ifndef TSNET_CLIQUE_HPP
#define TSNET_CLIQUE_HPP

#include <iosfwd>
#include <vector>

#include "tsnet/visibility.hpp"

namespace tsnet {

/// The maximal cliques of a graph, treated as the simplices of its clique
/// complex. Canonical order: every simplex is an ascending vertex list and
/// the simplex list is sorted lexicographically. An isolated vertex shows up
/// as a dimension-0 simplex, so every vertex belongs to at least one simplex.
struct CliqueComplex {
  std::vector<std::vector<int>> simplices;
  int node_count = 0;
  int q_max = 0;

  std::size_t size() const { return simplices.size(); }
  int dim(std::size_t k) const { return static_cast<int>(simplices[k].size()) - 1; }
};

/// Sorts the given simplices into canonical order and fills in q_max.
CliqueComplex make_complex(std::vector<std::vector<int>> simplices,
                           int node_count);

/// Bron-Kerbosch with pivoting over a degeneracy-ordered outer loop. The
/// pivot is the vertex covering most of the candidate set, ties broken by
/// lowest index.
CliqueComplex maximal_cliques(const VisibilityGraph& g);

/// Exhaustive subset oracle; refuses graphs with more than 20 nodes.
CliqueComplex brute_force_cliques(const VisibilityGraph& g);

/// One simplex per line as space-separated vertex indices, canonical order.
void write_cliques(const CliqueComplex& cx, std::ostream& out);

}  // namespace tsnet

#endif  // TSNET_CLIQUE_HPP
