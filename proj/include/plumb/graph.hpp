#pragma once

// Signed bipartite multigraph: the induced graph of a Seifert surface, with
// discs as vertices and half-twisted bands as signed edges.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plumb/error.hpp"

namespace plumb {

using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class Sign : std::int8_t { kMinus = -1, kPlus = 1 };

constexpr Sign operator-(Sign s) {
  return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus;
}
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPlus : Sign::kMinus;
}
constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr char symbol(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::kPlus;

  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Immutable after construction. Edge ids are positions in edges(), assigned
/// in insertion order. Built through GraphBuilder or parse_graph, both of
/// which reject loops and odd cycles.
class SignedMultigraph {
 public:
  SignedMultigraph() = default;

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Incident edge ids of v in increasing id order.
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_.at(v); }

  /// Bipartition class (0 or 1) of each vertex; class 0 holds the first
  /// vertex of every connected component.
  int side(VertexId v) const { return side_.at(v); }

  /// Number of boundary link components, when known.
  std::optional<int> components() const { return components_; }

  std::optional<VertexId> find(std::string_view name) const {
    for (VertexId v = 0; v < names_.size(); ++v) {
      if (names_[v] == name) return v;
    }
    return std::nullopt;
  }

  std::size_t degree(VertexId v) const { return incident_.at(v).size(); }

  bool connected() const {
    if (names_.empty()) return true;
    std::vector<bool> seen(names_.size(), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : incident_[x]) {
        const VertexId y = edges_[e].other(x);
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == names_.size();
  }

  SignedMultigraph with_components(std::optional<int> l) const {
    SignedMultigraph g = *this;
    g.components_ = l;
    return g;
  }

  friend bool operator==(const SignedMultigraph& a, const SignedMultigraph& b) {
    if (a.names_ != b.names_ || a.components_ != b.components_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.u != y.u || x.v != y.v || x.sign != y.sign) return false;
    }
    return true;
  }

 private:
  friend class GraphBuilder;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<int> side_;
  std::optional<int> components_;
};

class GraphBuilder {
 public:
  VertexId add_vertex(std::string name) {
    names_.push_back(std::move(name));
    return names_.size() - 1;
  }

  EdgeId add_edge(VertexId u, VertexId v, Sign s) {
    edges_.push_back(Edge{u, v, s});
    return edges_.size() - 1;
  }

  void set_components(std::optional<int> l) { components_ = l; }

  /// Validates and freezes the graph. Throws ParseError on a loop, an
  /// out-of-range endpoint, or an odd cycle (the cycle is named).
  SignedMultigraph build() const {
    SignedMultigraph g;
    g.names_ = names_;
    g.edges_ = edges_;
    g.components_ = components_;
    g.incident_.assign(names_.size(), {});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      const auto& ed = edges_[e];
      if (ed.u >= names_.size() || ed.v >= names_.size()) {
        throw ParseError(0, "edge " + std::to_string(e) + " has an unknown endpoint");
      }
      if (ed.u == ed.v) {
        throw ParseError(0, "loop edge at vertex '" + names_[ed.u] + "'");
      }
      g.incident_[ed.u].push_back(e);
      g.incident_[ed.v].push_back(e);
    }
    g.side_ = two_color(g);
    return g;
  }

 private:
  static std::vector<int> two_color(const SignedMultigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<std::optional<EdgeId>> via(n);
    for (VertexId s = 0; s < n; ++s) {
      if (side[s] != -1) continue;
      side[s] = 0;
      std::queue<VertexId> q;
      q.push(s);
      while (!q.empty()) {
        const VertexId x = q.front();
        q.pop();
        for (EdgeId e : g.incident(x)) {
          const VertexId y = g.edge(e).other(x);
          if (side[y] == -1) {
            side[y] = 1 - side[x];
            via[y] = e;
            q.push(y);
          } else if (side[y] == side[x]) {
            throw ParseError(0, "graph is not bipartite; odd cycle " +
                                    odd_cycle(g, via, x, y));
          }
        }
      }
    }
    return side;
  }

  // Closes the two BFS-tree paths from x and y at their meeting vertex.
  static std::string odd_cycle(const SignedMultigraph& g,
                               const std::vector<std::optional<EdgeId>>& via,
                               VertexId x, VertexId y) {
    auto root_path = [&](VertexId a) {
      std::vector<VertexId> p{a};
      while (via[a]) {
        a = g.edge(*via[a]).other(a);
        p.push_back(a);
      }
      return p;
    };
    auto px = root_path(x);
    auto py = root_path(y);
    while (px.size() > 1 && py.size() > 1 && px[px.size() - 2] == py[py.size() - 2]) {
      px.pop_back();
      py.pop_back();
    }
    std::string out;
    for (VertexId v : px) out += g.name(v) + " ";
    for (auto it = py.rbegin() + 1; it != py.rend(); ++it) out += g.name(*it) + " ";
    out += g.name(x);
    return out;
  }

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::optional<int> components_;
};

/// Graph file grammar (line oriented, '#' comments):
///   vertex <name>
///   edge <u> <v> <+|->
///   components <l>
/// Edge ids follow file order starting at 0.
inline SignedMultigraph parse_graph(std::string_view text) {
  GraphBuilder b;
  std::map<std::string, VertexId, std::less<>> index;
  std::optional<int> components;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::istringstream is{std::string(line)};
    std::vector<std::string> toks;
    for (std::string t; is >> t;) toks.push_back(t);
    if (toks.empty() || toks.front().front() == '#') continue;
    const std::string& kw = toks.front();
    if (kw == "vertex") {
      if (toks.size() != 2) throw ParseError(line_no, "expected 'vertex <name>'");
      if (index.count(toks[1])) {
        throw ParseError(line_no, "duplicate vertex '" + toks[1] + "'");
      }
      index.emplace(toks[1], b.add_vertex(toks[1]));
    } else if (kw == "edge") {
      if (toks.size() != 4) throw ParseError(line_no, "expected 'edge <u> <v> <+|->'");
      auto u = index.find(toks[1]);
      auto v = index.find(toks[2]);
      if (u == index.end()) throw ParseError(line_no, "unknown vertex '" + toks[1] + "'");
      if (v == index.end()) throw ParseError(line_no, "unknown vertex '" + toks[2] + "'");
      if (u->second == v->second) {
        throw ParseError(line_no, "loop edge at vertex '" + toks[1] + "'");
      }
      if (toks[3] != "+" && toks[3] != "-") {
        throw ParseError(line_no, "edge sign must be '+' or '-', got '" + toks[3] + "'");
      }
      b.add_edge(u->second, v->second, toks[3] == "+" ? Sign::kPlus : Sign::kMinus);
    } else if (kw == "components") {
      if (toks.size() != 2) throw ParseError(line_no, "expected 'components <l>'");
      if (components) throw ParseError(line_no, "duplicate components line");
      int l = 0;
      try {
        std::size_t used = 0;
        l = std::stoi(toks[1], &used);
        if (used != toks[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line_no, "invalid component count '" + toks[1] + "'");
      }
      if (l < 1) throw ParseError(line_no, "component count must be positive");
      components = l;
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  b.set_components(components);
  return b.build();
}

/// Emits the graph file form; parse_graph(render_graph(g)) == g.
inline std::string render_graph(const SignedMultigraph& g,
                                std::string_view header = {}) {
  std::ostringstream os;
  if (!header.empty()) os << "# " << header << '\n';
  for (const auto& n : g.names()) os << "vertex " << n << '\n';
  if (g.components()) os << "components " << *g.components() << '\n';
  for (const auto& e : g.edges()) {
    os << "edge " << g.name(e.u) << ' ' << g.name(e.v) << ' ' << symbol(e.sign) << '\n';
  }
  return os.str();
}

struct PruneResult {
  SignedMultigraph graph;
  std::size_t removed = 0;
  /// Original id of each surviving vertex / edge.
  std::vector<VertexId> vertex_origin;
  std::vector<EdgeId> edge_origin;
};

/// Repeatedly deletes degree-1 vertices with their edge (Reidemeister I at
/// graph level). Survivors keep their relative order. A lone vertex stays.
inline PruneResult prune_pendants(const SignedMultigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> vertex_alive(n, true);
  std::vector<bool> edge_alive(g.edge_count(), true);
  std::vector<std::size_t> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::size_t alive = n;
  std::size_t removed = 0;
  std::vector<VertexId> work;
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] == 1) work.push_back(v);
  }
  while (!work.empty()) {
    const VertexId v = work.back();
    work.pop_back();
    if (!vertex_alive[v] || deg[v] != 1 || alive <= 1) continue;
    for (EdgeId e : g.incident(v)) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = false;
      const VertexId w = g.edge(e).other(v);
      --deg[v];
      --deg[w];
      if (deg[w] == 1) work.push_back(w);
    }
    vertex_alive[v] = false;
    --alive;
    ++removed;
  }

  PruneResult r;
  r.removed = removed;
  GraphBuilder b;
  std::vector<VertexId> remap(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (!vertex_alive[v]) continue;
    remap[v] = b.add_vertex(g.name(v));
    r.vertex_origin.push_back(v);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!edge_alive[e]) continue;
    const auto& ed = g.edge(e);
    b.add_edge(remap[ed.u], remap[ed.v], ed.sign);
    r.edge_origin.push_back(e);
  }
  b.set_components(g.components());
  r.graph = b.build();
  return r;
}

}  // namespace plumb
