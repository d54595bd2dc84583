#pragma once

// Spanning-tree search: the LCA-guided swap procedure that turns any rooted
// spanning tree of a connected bipartite graph into one whose fundamental
// paths all alternate under the depth coloring, plus exhaustive enumeration
// and a Kirchhoff cross-check used by the exhaustive bound modes.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <numeric>
#include <tuple>
#include <vector>

#include "plumb/error.hpp"
#include "plumb/graph.hpp"
#include "plumb/tree.hpp"

namespace plumb {

using TreeCount = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultEdgeCap = 20;

/// Sum of vertex depths. Strictly increases under swap_step.
inline std::size_t eta(const RootedTree& t) {
  const auto& d = t.depths();
  return std::accumulate(d.begin(), d.end(), std::size_t{0});
}

/// Coedges whose endpoints' LCA is neither endpoint, ordered by
/// (LCA depth, smaller endpoint id, larger endpoint id, edge id).
inline std::vector<EdgeId> offending_coedges(const SignedMultigraph& g,
                                             const RootedTree& t) {
  using Key = std::tuple<std::size_t, VertexId, VertexId, EdgeId>;
  std::vector<Key> keys;
  for (EdgeId e : coedges(g, t)) {
    const auto& ed = g.edge(e);
    const VertexId top = lca(t, ed.u, ed.v);
    if (top == ed.u || top == ed.v) continue;
    keys.emplace_back(t.depth(top), std::min(ed.u, ed.v), std::max(ed.u, ed.v), e);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<EdgeId> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(std::get<3>(k));
  return out;
}

struct SwapStep {
  EdgeId removed = 0;
  EdgeId inserted = 0;
  std::size_t eta_before = 0;
  std::size_t eta_after = 0;
};

namespace detail {

// Child edge of `top` on the root path of x. Precondition: top is a proper
// ancestor of x.
inline EdgeId child_edge_toward(const RootedTree& t, VertexId top, VertexId x) {
  while (*t.parent(x) != top) x = *t.parent(x);
  return t.parent_edge(x);
}

}  // namespace detail

/// Replaces the child edge of the offending coedge's LCA on the strictly
/// shorter half of its fundamental path by the coedge itself. The root is
/// kept. Throws InternalError if eta fails to increase.
inline RootedTree swap_step(const SignedMultigraph& g, const RootedTree& t, EdgeId f,
                            SwapStep* record = nullptr) {
  if (t.contains(f)) throw PreconditionError("swap_step: edge is a tree edge");
  const auto& ed = g.edge(f);
  const VertexId top = lca(t, ed.u, ed.v);
  if (top == ed.u || top == ed.v) {
    throw PreconditionError("swap_step: coedge " + std::to_string(f) + " is not offending");
  }
  const std::size_t du = t.depth(ed.u) - t.depth(top);
  const std::size_t dv = t.depth(ed.v) - t.depth(top);
  if (du == dv) {
    throw InternalError("swap_step: equal half lengths; the graph is not bipartite");
  }
  const VertexId near = du < dv ? ed.u : ed.v;
  const EdgeId drop = detail::child_edge_toward(t, top, near);

  std::vector<EdgeId> next;
  next.reserve(t.edges().size());
  for (EdgeId e : t.edges()) {
    if (e != drop) next.push_back(e);
  }
  next.push_back(f);
  RootedTree out(g, std::move(next), t.root());

  const std::size_t before = eta(t);
  const std::size_t after = eta(out);
  if (after <= before) {
    throw InternalError("swap_step: eta did not increase (" + std::to_string(before) +
                        " -> " + std::to_string(after) + ")");
  }
  if (record) *record = SwapStep{drop, f, before, after};
  return out;
}

struct SwapTrace {
  RootedTree initial;
  std::vector<SwapStep> steps;
  RootedTree final_tree;
};

/// Runs swap_step on the first offending coedge until none remain.
inline SwapTrace construct_valid_pair(const SignedMultigraph& g, RootedTree start) {
  const std::size_t n = g.vertex_count();
  const std::size_t guard = std::max<std::size_t>(1, n * n * n);
  SwapTrace trace{start, {}, start};
  for (;;) {
    const auto bad = offending_coedges(g, trace.final_tree);
    if (bad.empty()) break;
    if (trace.steps.size() >= guard) {
      throw InternalError("construct_valid_pair: swap guard of " + std::to_string(guard) +
                          " exceeded");
    }
    SwapStep step;
    trace.final_tree = swap_step(g, trace.final_tree, bad.front(), &step);
    trace.steps.push_back(step);
  }
  return trace;
}

/// Starts from the breadth-first tree at `root`.
inline SwapTrace construct_valid_pair(const SignedMultigraph& g, VertexId root) {
  return construct_valid_pair(g, bfs_tree(g, root));
}

/// Tries roots in vertex order and returns the first completed trace. The
/// swap procedure succeeds from every root, so this is the first vertex's.
inline SwapTrace construct_valid_pair(const SignedMultigraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("empty graph");
  return construct_valid_pair(g, VertexId{0});
}

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

/// Calls visit(tree_edges) once per spanning tree, in lexicographic order of
/// the sorted edge-id lists. Throws CapExceeded when |E| > cap.
inline void for_each_spanning_tree(
    const SignedMultigraph& g, const std::function<void(const std::vector<EdgeId>&)>& visit,
    std::size_t cap = kDefaultEdgeCap) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m > cap) {
    throw CapExceeded("spanning-tree enumeration capped at " + std::to_string(cap) +
                      " edges; graph has " + std::to_string(m));
  }
  if (n == 0) return;
  if (!g.connected()) return;
  const std::size_t need = n - 1;
  std::vector<EdgeId> chosen;
  chosen.reserve(need);

  // Whether chosen + edges[from..] can still connect everything.
  auto completable = [&](std::size_t from) {
    detail::UnionFind uf(n);
    std::size_t joins = 0;
    for (EdgeId e : chosen) joins += uf.unite(g.edge(e).u, g.edge(e).v);
    for (EdgeId e = from; e < m && joins < need; ++e) {
      joins += uf.unite(g.edge(e).u, g.edge(e).v);
    }
    return joins == need;
  };

  std::function<void(EdgeId)> dfs = [&](EdgeId next) {
    if (chosen.size() == need) {
      visit(chosen);
      return;
    }
    if (next >= m || m - next < need - chosen.size()) return;
    // Take `next` if it joins two components of the current forest.
    detail::UnionFind uf(n);
    for (EdgeId e : chosen) uf.unite(g.edge(e).u, g.edge(e).v);
    if (uf.find(g.edge(next).u) != uf.find(g.edge(next).v)) {
      chosen.push_back(next);
      dfs(next + 1);
      chosen.pop_back();
    }
    if (completable(next + 1)) dfs(next + 1);
  };
  dfs(0);
}

inline std::vector<std::vector<EdgeId>> enumerate_spanning_trees(
    const SignedMultigraph& g, std::size_t cap = kDefaultEdgeCap) {
  std::vector<std::vector<EdgeId>> out;
  for_each_spanning_tree(g, [&](const std::vector<EdgeId>& t) { out.push_back(t); }, cap);
  return out;
}

/// Kirchhoff: determinant of the Laplacian with the last row and column
/// removed, by fraction-free (Bareiss) elimination in exact integers.
inline TreeCount matrix_tree_count(const SignedMultigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  const std::size_t k = n - 1;
  std::vector<std::vector<TreeCount>> a(k, std::vector<TreeCount>(k, 0));
  for (const auto& e : g.edges()) {
    if (e.u < k) a[e.u][e.u] += 1;
    if (e.v < k) a[e.v][e.v] += 1;
    if (e.u < k && e.v < k) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  TreeCount prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      }
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  TreeCount det = a[k - 1][k - 1];
  return sign < 0 ? TreeCount(-det) : det;
}

}  // namespace plumb
