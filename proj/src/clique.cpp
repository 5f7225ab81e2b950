#include "tsnet/clique.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <string>

#include "tsnet/errors.hpp"

namespace tsnet {

namespace {

// Matula-Beck: repeatedly remove the minimum-degree vertex, lowest index
// first among ties.
std::vector<int> degeneracy_order(const VisibilityGraph& g) {
  const int n = g.node_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> queue;  // (current degree, vertex)
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(deg[static_cast<std::size_t>(v)], v);
  }
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      queue.erase({deg[static_cast<std::size_t>(w)], w});
      --deg[static_cast<std::size_t>(w)];
      queue.emplace(deg[static_cast<std::size_t>(w)], w);
    }
  }
  return order;
}

std::vector<int> intersect(const std::vector<int>& sorted,
                           std::span<const int> sorted_other) {
  std::vector<int> out;
  std::set_intersection(sorted.begin(), sorted.end(), sorted_other.begin(),
                        sorted_other.end(), std::back_inserter(out));
  return out;
}

std::size_t intersect_size(const std::vector<int>& a, std::span<const int> b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

struct BronKerbosch {
  const VisibilityGraph& g;
  std::vector<std::vector<int>>& out;
  std::vector<int> stack;  // current clique R, in discovery order

  // P and X are sorted candidate / excluded sets.
  void expand(std::vector<int> P, std::vector<int> X) {
    if (P.empty() && X.empty()) {
      out.push_back(stack);
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    bool have_pivot = false;
    auto consider = [&](int u) {
      std::size_t c = intersect_size(P, g.neighbors(u));
      if (!have_pivot || c > best || (c == best && u < pivot)) {
        have_pivot = true;
        best = c;
        pivot = u;
      }
    };
    for (int u : P) consider(u);
    for (int u : X) consider(u);

    auto piv_nbrs = g.neighbors(pivot);
    std::vector<int> branch;
    std::set_difference(P.begin(), P.end(), piv_nbrs.begin(), piv_nbrs.end(),
                        std::back_inserter(branch));
    for (int v : branch) {
      auto nv = g.neighbors(v);
      stack.push_back(v);
      expand(intersect(P, nv), intersect(X, nv));
      stack.pop_back();
      P.erase(std::lower_bound(P.begin(), P.end(), v));
      X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
  }
};

}  // namespace

CliqueComplex make_complex(std::vector<std::vector<int>> simplices,
                           int node_count) {
  CliqueComplex cx;
  cx.node_count = node_count;
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  std::sort(simplices.begin(), simplices.end());
  cx.simplices = std::move(simplices);
  cx.q_max = 0;
  for (std::size_t k = 0; k < cx.simplices.size(); ++k) {
    cx.q_max = std::max(cx.q_max, cx.dim(k));
  }
  return cx;
}

CliqueComplex maximal_cliques(const VisibilityGraph& g) {
  const int n = g.node_count();
  std::vector<int> order = degeneracy_order(g);
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int idx = 0; idx < n; ++idx) {
    rank[static_cast<std::size_t>(order[static_cast<std::size_t>(idx)])] = idx;
  }

  std::vector<std::vector<int>> found;
  BronKerbosch bk{g, found, {}};
  for (int v : order) {
    // Candidates are v's later neighbors in degeneracy order; earlier ones
    // land in X so each maximal clique is reported exactly once.
    std::vector<int> P, X;
    for (int w : g.neighbors(v)) {
      if (rank[static_cast<std::size_t>(w)] > rank[static_cast<std::size_t>(v)]) {
        P.push_back(w);
      } else {
        X.push_back(w);
      }
    }
    bk.stack.assign(1, v);
    bk.expand(std::move(P), std::move(X));
  }
  return make_complex(std::move(found), n);
}

CliqueComplex brute_force_cliques(const VisibilityGraph& g) {
  const int n = g.node_count();
  if (n > 20) {
    fail(errc::invalid_parameter,
         "exhaustive clique oracle refuses n > 20 (got " + std::to_string(n) + ")");
  }
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) nbr[static_cast<std::size_t>(v)] |= 1u << w;
  }
  auto is_clique = [&](std::uint32_t s) {
    for (int v = 0; v < n; ++v) {
      if (!(s & (1u << v))) continue;
      std::uint32_t rest = s & ~(1u << v);
      if ((rest & nbr[static_cast<std::size_t>(v)]) != rest) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> found;
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t s = 1; s <= all; ++s) {
    if (!is_clique(s)) continue;
    bool maximal = true;
    for (int u = 0; u < n && maximal; ++u) {
      if (s & (1u << u)) continue;
      if ((s & nbr[static_cast<std::size_t>(u)]) == s) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) {
      if (s & (1u << v)) verts.push_back(v);
    }
    found.push_back(std::move(verts));
  }
  return make_complex(std::move(found), n);
}

void write_cliques(const CliqueComplex& cx, std::ostream& out) {
  for (const auto& s : cx.simplices) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ' ';
      out << s[i];
    }
    out << '\n';
  }
}

}  // namespace tsnet
