#pragma once

// Rooted spanning trees of a SignedMultigraph: depths, least common
// ancestors, fundamental paths and depth colorings.

#include <algorithm>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "plumb/error.hpp"
#include "plumb/graph.hpp"

namespace plumb {

/// A spanning tree with a root. Immutable snapshot; it refers to its graph
/// only through edge and vertex ids.
class RootedTree {
 public:
  /// Throws PreconditionError unless `tree_edges` is a spanning tree of g.
  RootedTree(const SignedMultigraph& g, std::vector<EdgeId> tree_edges, VertexId root)
      : root_(root), edges_(std::move(tree_edges)) {
    const std::size_t n = g.vertex_count();
    if (root >= n) throw PreconditionError("root is not a vertex of the graph");
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw PreconditionError("tree edge listed twice");
    }
    if (edges_.size() + 1 != n) {
      throw PreconditionError("a spanning tree needs |V|-1 = " + std::to_string(n - 1) +
                              " edges, got " + std::to_string(edges_.size()));
    }
    in_tree_.assign(g.edge_count(), false);
    for (EdgeId e : edges_) {
      if (e >= g.edge_count()) throw PreconditionError("unknown tree edge id");
      in_tree_[e] = true;
    }
    depth_.assign(n, kUnset);
    parent_.assign(n, 0);
    parent_edge_.assign(n, 0);
    depth_[root] = 0;
    std::queue<VertexId> q;
    q.push(root);
    std::size_t reached = 1;
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      for (EdgeId e : g.incident(x)) {
        if (!in_tree_[e]) continue;
        const VertexId y = g.edge(e).other(x);
        if (depth_[y] != kUnset) continue;
        depth_[y] = depth_[x] + 1;
        parent_[y] = x;
        parent_edge_[y] = e;
        ++reached;
        q.push(y);
      }
    }
    if (reached != n) throw PreconditionError("tree edges do not span the graph");
    edge_depth_.assign(g.edge_count(), 0);
    for (EdgeId e : edges_) {
      const auto& ed = g.edge(e);
      edge_depth_[e] = std::max(depth_[ed.u], depth_[ed.v]);
    }
  }

  VertexId root() const { return root_; }
  std::size_t vertex_count() const { return depth_.size(); }
  /// Sorted ascending.
  const std::vector<EdgeId>& edges() const { return edges_; }
  bool contains(EdgeId e) const { return e < in_tree_.size() && in_tree_[e]; }

  std::size_t depth(VertexId v) const { return depth_.at(v); }
  const std::vector<std::size_t>& depths() const { return depth_; }
  /// Max endpoint depth of a tree edge; always >= 1.
  std::size_t edge_depth(EdgeId e) const { return edge_depth_.at(e); }

  std::optional<VertexId> parent(VertexId v) const {
    if (v == root_) return std::nullopt;
    return parent_.at(v);
  }
  /// The tree edge joining v to its parent. Precondition: v is not the root.
  EdgeId parent_edge(VertexId v) const { return parent_edge_.at(v); }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.edges_ == b.edges_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  VertexId root_;
  std::vector<EdgeId> edges_;
  std::vector<bool> in_tree_;
  std::vector<std::size_t> depth_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::size_t> edge_depth_;
};

/// Breadth-first spanning tree from root, scanning incident edges in id order.
/// Throws PreconditionError when g is disconnected.
inline RootedTree bfs_tree(const SignedMultigraph& g, VertexId root) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<EdgeId> chosen;
  std::queue<VertexId> q;
  if (root >= g.vertex_count()) throw PreconditionError("root is not a vertex of the graph");
  seen[root] = true;
  q.push(root);
  while (!q.empty()) {
    const VertexId x = q.front();
    q.pop();
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.edge(e).other(x);
      if (seen[y]) continue;
      seen[y] = true;
      chosen.push_back(e);
      q.push(y);
    }
  }
  if (chosen.size() + 1 != g.vertex_count()) {
    throw PreconditionError("graph is not connected");
  }
  return RootedTree(g, std::move(chosen), root);
}

/// Signs on tree edges. Coedge slots are unused.
struct EdgeColoring {
  std::vector<Sign> kappa;
  bool flipped = false;

  Sign operator[](EdgeId e) const { return kappa.at(e); }
};

/// kappa(e) = sign of (-1)^{d(e)}, negated everywhere when flipped.
inline EdgeColoring depth_coloring(const RootedTree& t, std::size_t edge_count,
                                   bool flipped = false) {
  EdgeColoring c{std::vector<Sign>(edge_count, Sign::kPlus), flipped};
  for (EdgeId e : t.edges()) {
    Sign s = t.edge_depth(e) % 2 == 0 ? Sign::kPlus : Sign::kMinus;
    c.kappa[e] = flipped ? -s : s;
  }
  return c;
}

inline VertexId lca(const RootedTree& t, VertexId u, VertexId v) {
  while (t.depth(u) > t.depth(v)) u = *t.parent(u);
  while (t.depth(v) > t.depth(u)) v = *t.parent(v);
  while (u != v) {
    u = *t.parent(u);
    v = *t.parent(v);
  }
  return u;
}

/// Tree path between the endpoints of coedge e, ordered from e.u to e.v.
inline std::vector<EdgeId> fundamental_path(const SignedMultigraph& g,
                                            const RootedTree& t, EdgeId e) {
  if (t.contains(e)) {
    throw PreconditionError("edge " + std::to_string(e) + " is a tree edge");
  }
  VertexId u = g.edge(e).u;
  VertexId v = g.edge(e).v;
  const VertexId top = lca(t, u, v);
  std::vector<EdgeId> head;
  std::vector<EdgeId> back;
  for (; u != top; u = *t.parent(u)) head.push_back(t.parent_edge(u));
  for (; v != top; v = *t.parent(v)) back.push_back(t.parent_edge(v));
  head.insert(head.end(), back.rbegin(), back.rend());
  return head;
}

inline bool is_alternating(std::span<const Sign> signs) {
  for (std::size_t i = 1; i < signs.size(); ++i) {
    if (signs[i] == signs[i - 1]) return false;
  }
  return true;
}

inline std::vector<Sign> colors_along(std::span<const EdgeId> path,
                                      const EdgeColoring& kappa) {
  std::vector<Sign> s;
  s.reserve(path.size());
  for (EdgeId e : path) s.push_back(kappa[e]);
  return s;
}

inline bool is_alternating(std::span<const EdgeId> path, const EdgeColoring& kappa) {
  return is_alternating(colors_along(path, kappa));
}

/// How a path's colors combine into one sign.
///  kSum: sign of the sum of +-1 values (defined because paths are odd);
///        this is what annulus budgets use.
///  kProduct: product of the signs.
enum class PathSignRule { kSum, kProduct };

inline Sign path_sign(std::span<const Sign> signs, PathSignRule rule = PathSignRule::kSum) {
  if (signs.empty()) throw PreconditionError("path_sign of an empty path");
  if (rule == PathSignRule::kProduct) {
    Sign p = Sign::kPlus;
    for (Sign s : signs) p = p * s;
    return p;
  }
  int sum = 0;
  for (Sign s : signs) sum += value(s);
  if (sum == 0) throw PreconditionError("path_sign: even path has no majority sign");
  return sum > 0 ? Sign::kPlus : Sign::kMinus;
}

inline Sign path_sign(std::span<const EdgeId> path, const EdgeColoring& kappa,
                      PathSignRule rule = PathSignRule::kSum) {
  return path_sign(colors_along(path, kappa), rule);
}

/// Coedges of t in id order.
inline std::vector<EdgeId> coedges(const SignedMultigraph& g, const RootedTree& t) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!t.contains(e)) out.push_back(e);
  }
  return out;
}

/// True iff every fundamental path alternates under the depth coloring.
/// Equivalently, every coedge's endpoints are in ancestor relation.
inline bool is_valid_pair(const SignedMultigraph& g, const RootedTree& t) {
  const auto kappa = depth_coloring(t, g.edge_count());
  for (EdgeId e : coedges(g, t)) {
    if (!is_alternating(fundamental_path(g, t, e), kappa)) return false;
  }
  return true;
}

struct SeifertStats {
  std::size_t s = 0;  // Seifert circles (vertices)
  std::size_t c = 0;  // half-twisted bands (edges)
  int l = 0;          // boundary components
  int g_c = 0;        // genus of the canonical surface
};

/// g_c = (c - s + 2 - l) / 2 from the Euler characteristic s - c of a
/// connected canonical surface with l boundary circles.
inline SeifertStats seifert_stats(const SignedMultigraph& g, int l) {
  if (l < 1) throw PreconditionError("component count must be positive");
  const long twice = static_cast<long>(g.edge_count()) -
                     static_cast<long>(g.vertex_count()) + 2 - l;
  if (twice < 0 || twice % 2 != 0) {
    throw PreconditionError("component count " + std::to_string(l) +
                            " is inconsistent with " + std::to_string(g.vertex_count()) +
                            " circles and " + std::to_string(g.edge_count()) + " bands");
  }
  return SeifertStats{g.vertex_count(), g.edge_count(), l, static_cast<int>(twice / 2)};
}

}  // namespace plumb
