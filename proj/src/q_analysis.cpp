#include "tsnet/q_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>

#include "tsnet/errors.hpp"
#include "tsnet/union_find.hpp"

namespace tsnet {

namespace {

void check_level(const CliqueComplex& cx, int q) {
  if (cx.size() == 0) fail(errc::invalid_parameter, "empty complex");
  if (q < 0 || q > cx.q_max) {
    fail(errc::invalid_parameter, "q-level " + std::to_string(q) +
                                      " outside 0.." + std::to_string(cx.q_max));
  }
}

/// Participation counts at one exact dimension level.
std::vector<long long> level_counts(const CliqueComplex& cx, int q) {
  std::vector<long long> counts(static_cast<std::size_t>(cx.node_count), 0);
  for (std::size_t k = 0; k < cx.size(); ++k) {
    if (cx.dim(k) != q) continue;
    for (int v : cx.simplices[k]) ++counts[static_cast<std::size_t>(v)];
  }
  return counts;
}

double entropy_from_counts(std::span<const long long> counts) {
  long long total = 0;
  long long first = 0;
  std::size_t participants = 0;
  bool uniform = true;
  for (long long c : counts) {
    if (c <= 0) continue;
    if (participants == 0) {
      first = c;
    } else if (c != first) {
      uniform = false;
    }
    ++participants;
    total += c;
  }
  if (participants <= 1) return 0.0;
  if (uniform) return 1.0;
  double h = 0.0;
  for (long long c : counts) {
    if (c <= 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log(p);
  }
  return h / std::log(static_cast<double>(participants));
}

}  // namespace

QComponents q_components(const CliqueComplex& cx, int q) {
  check_level(cx, q);

  std::vector<std::size_t> qualifying;
  for (std::size_t k = 0; k < cx.size(); ++k) {
    if (cx.dim(k) >= q) qualifying.push_back(k);
  }

  // inverted index: vertex -> local ids of qualifying simplices containing it
  std::vector<std::vector<std::uint32_t>> by_vertex(
      static_cast<std::size_t>(cx.node_count));
  for (std::uint32_t local = 0; local < qualifying.size(); ++local) {
    for (int v : cx.simplices[qualifying[local]]) {
      by_vertex[static_cast<std::size_t>(v)].push_back(local);
    }
  }

  UnionFind dsu(qualifying.size());
  if (q == 0) {
    // sharing a single vertex suffices, so union everything in each bucket
    for (const auto& bucket : by_vertex) {
      for (std::size_t i = 1; i < bucket.size(); ++i) {
        dsu.unite(bucket[0], bucket[i]);
      }
    }
  } else {
    // two simplices share exactly as many vertices as buckets they co-occupy
    std::unordered_map<std::uint64_t, int> shared;
    for (const auto& bucket : by_vertex) {
      for (std::size_t i = 0; i < bucket.size(); ++i) {
        for (std::size_t j = i + 1; j < bucket.size(); ++j) {
          const std::uint64_t key =
              (static_cast<std::uint64_t>(bucket[i]) << 32) | bucket[j];
          ++shared[key];
        }
      }
    }
    for (const auto& [key, count] : shared) {
      if (count >= q + 1) {
        dsu.unite(static_cast<std::size_t>(key >> 32),
                  static_cast<std::size_t>(key & 0xffffffffu));
      }
    }
  }

  QComponents result;
  result.count = static_cast<long long>(dsu.component_count());
  result.labels.assign(cx.size(), -1);
  std::unordered_map<std::size_t, int> label_of_root;
  for (std::size_t local = 0; local < qualifying.size(); ++local) {
    const std::size_t root = dsu.find(local);
    auto [it, inserted] =
        label_of_root.try_emplace(root, static_cast<int>(label_of_root.size()));
    result.labels[qualifying[local]] = it->second;
  }
  return result;
}

StructureVectorSet structure_vectors(const CliqueComplex& cx) {
  if (cx.size() == 0) fail(errc::invalid_parameter, "empty complex");
  const int levels = cx.q_max + 1;
  StructureVectorSet sv;
  sv.f.assign(static_cast<std::size_t>(levels), 0);
  for (std::size_t k = 0; k < cx.size(); ++k) {
    ++sv.f[static_cast<std::size_t>(cx.dim(k))];
  }
  sv.Ns.assign(static_cast<std::size_t>(levels), 0);
  long long running = 0;
  for (int q = levels - 1; q >= 0; --q) {
    running += sv.f[static_cast<std::size_t>(q)];
    sv.Ns[static_cast<std::size_t>(q)] = running;
  }
  sv.Q.resize(static_cast<std::size_t>(levels));
  for (int q = 0; q < levels; ++q) {
    sv.Q[static_cast<std::size_t>(q)] = q_components(cx, q).count;
  }
  sv.Qhat.resize(static_cast<std::size_t>(levels));
  for (int q = 0; q < levels; ++q) {
    const auto ns = sv.Ns[static_cast<std::size_t>(q)];
    sv.Qhat[static_cast<std::size_t>(q)] =
        ns == 0 ? 0.0
                : 1.0 - static_cast<double>(sv.Q[static_cast<std::size_t>(q)]) /
                            static_cast<double>(ns);
  }
  return sv;
}

NodeParticipation node_dimensions(const CliqueComplex& cx) {
  if (cx.size() == 0) fail(errc::invalid_parameter, "empty complex");
  NodeParticipation np;
  np.counts.resize(static_cast<std::size_t>(cx.q_max) + 1);
  for (int q = 0; q <= cx.q_max; ++q) {
    np.counts[static_cast<std::size_t>(q)] = level_counts(cx, q);
  }
  np.dim_q.assign(static_cast<std::size_t>(cx.node_count), 0);
  for (const auto& level : np.counts) {
    for (std::size_t i = 0; i < level.size(); ++i) np.dim_q[i] += level[i];
  }
  np.max_dim = 0;
  for (long long d : np.dim_q) np.max_dim = std::max(np.max_dim, d);
  return np;
}

double topological_entropy(const CliqueComplex& cx, int q) {
  check_level(cx, q);
  return entropy_from_counts(level_counts(cx, q));
}

namespace {

long long covered_edge_count(const CliqueComplex& cx) {
  std::vector<std::vector<std::uint32_t>> simplices_of(
      static_cast<std::size_t>(cx.node_count));
  for (std::uint32_t k = 0; k < cx.size(); ++k) {
    for (int v : cx.simplices[k]) {
      simplices_of[static_cast<std::size_t>(v)].push_back(k);
    }
  }
  long long edges = 0;
  std::vector<int> peers;
  for (int u = 0; u < cx.node_count; ++u) {
    peers.clear();
    for (std::uint32_t k : simplices_of[static_cast<std::size_t>(u)]) {
      for (int v : cx.simplices[k]) {
        if (v > u) peers.push_back(v);
      }
    }
    std::sort(peers.begin(), peers.end());
    edges += std::unique(peers.begin(), peers.end()) - peers.begin();
  }
  return edges;
}

}  // namespace

Analysis analyze(const CliqueComplex& cx) {
  if (cx.size() == 0) fail(errc::invalid_parameter, "empty complex");
  Analysis a;
  a.vectors = structure_vectors(cx);
  a.participation = node_dimensions(cx);
  a.entropy.resize(static_cast<std::size_t>(cx.q_max) + 1);
  for (int q = 0; q <= cx.q_max; ++q) {
    a.entropy[static_cast<std::size_t>(q)] =
        entropy_from_counts(a.participation.counts[static_cast<std::size_t>(q)]);
  }
  a.simplex_count = static_cast<long long>(cx.size());
  a.node_count = cx.node_count;
  a.edge_count = covered_edge_count(cx);
  a.q_max = cx.q_max;
  return a;
}

namespace {

[[noreturn]] void violated(const std::string& what) {
  fail(errc::internal_invariant, what);
}

}  // namespace

void verify_identities(const Analysis& a, const CliqueComplex& cx,
                       const VisibilityGraph* g) {
  const int levels = a.q_max + 1;
  const auto& sv = a.vectors;
  if (static_cast<int>(sv.Q.size()) != levels ||
      static_cast<int>(sv.Ns.size()) != levels ||
      static_cast<int>(sv.f.size()) != levels ||
      static_cast<int>(sv.Qhat.size()) != levels ||
      static_cast<int>(a.entropy.size()) != levels) {
    violated("vector lengths disagree with q_max+1");
  }

  long long suffix = 0;
  for (int q = levels - 1; q >= 0; --q) {
    suffix += sv.f[static_cast<std::size_t>(q)];
    if (sv.Ns[static_cast<std::size_t>(q)] != suffix) {
      violated("Ns is not the suffix sum of f at q=" + std::to_string(q));
    }
  }
  if (sv.Ns[0] != a.simplex_count) violated("Ns[0] differs from simplex count");

  const auto top = static_cast<std::size_t>(a.q_max);
  if (sv.Q[top] != sv.f[top] || sv.Q[top] != sv.Ns[top]) {
    violated("top level: Q[q_max], f[q_max], Ns[q_max] must coincide");
  }
  if (sv.Qhat[top] != 0.0) violated("Qhat[q_max] must be exactly 0");

  for (int q = 0; q < levels; ++q) {
    const auto qi = static_cast<std::size_t>(q);
    if (sv.Ns[qi] > 0 && (sv.Q[qi] < 1 || sv.Q[qi] > sv.Ns[qi])) {
      violated("Q out of [1, Ns] at q=" + std::to_string(q));
    }
    const double expect =
        sv.Ns[qi] == 0 ? 0.0
                       : 1.0 - static_cast<double>(sv.Q[qi]) /
                                   static_cast<double>(sv.Ns[qi]);
    if (sv.Qhat[qi] != expect) violated("Qhat != 1 - Q/Ns at q=" + std::to_string(q));
    if (a.entropy[qi] < 0.0 || a.entropy[qi] > 1.0) {
      violated("entropy outside [0,1] at q=" + std::to_string(q));
    }
  }

  // handshake: every level and in total
  const auto& np = a.participation;
  long long total_dim = 0;
  for (int q = 0; q < levels; ++q) {
    const auto qi = static_cast<std::size_t>(q);
    long long level_sum = 0;
    for (long long c : np.counts[qi]) level_sum += c;
    if (level_sum != (q + 1) * sv.f[qi]) {
      violated("node participation does not match (q+1)*f at q=" + std::to_string(q));
    }
    total_dim += level_sum;
  }
  long long dim_sum = 0;
  long long max_dim = 0;
  for (long long d : np.dim_q) {
    if (d < 1) violated("a node belongs to no simplex");
    dim_sum += d;
    max_dim = std::max(max_dim, d);
  }
  if (dim_sum != total_dim) violated("sum of dim Q^i differs from sum of (q+1)*f");
  if (max_dim != np.max_dim) violated("stored max_dim is stale");

  if (g != nullptr) {
    if (g->node_count() != a.node_count || g->node_count() != cx.node_count) {
      violated("node counts disagree between graph and complex");
    }
    if (sv.Q[0] != component_count(*g)) {
      violated("Q[0] differs from the graph component count");
    }
    if (a.edge_count != g->edge_count()) {
      violated("covered edge count differs from the graph edge count");
    }
  }
}

}  // namespace tsnet
