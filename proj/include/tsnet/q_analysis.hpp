#ifndef TSNET_Q_ANALYSIS_HPP
#define TSNET_Q_ANALYSIS_HPP

#include <vector>

#include "tsnet/clique.hpp"
#include "tsnet/visibility.hpp"

namespace tsnet {

/// The structure vectors of a clique complex, indexed by q-level 0..q_max.
/// Q counts q-connected components, f counts simplices of dimension exactly
/// q, Ns counts dimension >= q (the suffix sums of f) and Qhat = 1 - Q/Ns.
struct StructureVectorSet {
  std::vector<long long> Q;
  std::vector<long long> Ns;
  std::vector<long long> f;
  std::vector<double> Qhat;

  int q_max() const { return static_cast<int>(Q.size()) - 1; }
};

/// Per-node participation: counts[q][i] is the number of simplices of
/// dimension exactly q that contain node i. dim_q[i] sums the levels, which
/// makes it the total number of maximal cliques node i belongs to.
struct NodeParticipation {
  std::vector<std::vector<long long>> counts;  // [q][node]
  std::vector<long long> dim_q;                // per node
  long long max_dim = 0;
};

struct QComponents {
  long long count = 0;
  std::vector<int> labels;  // per simplex; -1 where dimension < q
};

/// Components of the q-nearness relation over simplices of dimension >= q.
/// Two simplices are q-near when they share at least q+1 vertices; the count
/// is the number of classes under the transitive closure.
QComponents q_components(const CliqueComplex& cx, int q);

StructureVectorSet structure_vectors(const CliqueComplex& cx);

NodeParticipation node_dimensions(const CliqueComplex& cx);

/// Normalized Shannon entropy of node participation at level q: with
/// p_i = counts[q][i] / sum over participants, returns -sum p_i log p_i
/// divided by log of the participant count. 0 when fewer than two nodes
/// participate; exactly 1 for uniform participation.
double topological_entropy(const CliqueComplex& cx, int q);

/// Full characteriser bundle for one complex. edge_count is the number of
/// distinct vertex pairs covered by the simplices, which for a maximal-clique
/// complex equals the edge count of the source graph.
struct Analysis {
  StructureVectorSet vectors;
  std::vector<double> entropy;
  NodeParticipation participation;
  long long simplex_count = 0;
  int node_count = 0;
  long long edge_count = 0;
  int q_max = 0;
};

Analysis analyze(const CliqueComplex& cx);

/// Identity suite run after every analysis: suffix-sum identity, top-level
/// isolation, handshake identities, entropy bounds, and (given the source
/// graph) Q[0] against the BFS component count plus matching edge counts.
/// Violations throw errc::internal_invariant.
void verify_identities(const Analysis& a, const CliqueComplex& cx,
                       const VisibilityGraph* g = nullptr);

}  // namespace tsnet

#endif  // TSNET_Q_ANALYSIS_HPP
