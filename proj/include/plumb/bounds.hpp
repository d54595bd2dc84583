#pragma once

// Upper bounds for the basket number bk, the flat plumbing number fp and the
// flat plumbing basket number fpbk of a link, from a braid word or from the
// induced graph of a canonical Seifert surface.

#include <algorithm>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "plumb/braid.hpp"
#include "plumb/error.hpp"
#include "plumb/graph.hpp"
#include "plumb/search.hpp"
#include "plumb/tree.hpp"

namespace plumb {

// ---------------------------------------------------------------------------
// Braid-word bounds

struct PrefixBound {
  long value = 0;
  DiscPrefixSplit split;
};

/// bk(L) <= m, m = length of the word after the disc prefix.
inline Outcome<PrefixBound> basket_bound(const BraidWord& w) {
  auto split = find_disc_prefix(w);
  if (!split) {
    return Inapplicable{"no cyclic rotation starts with a positive prefix using each "
                        "generator once"};
  }
  const auto m = static_cast<long>(split->tail_length());
  return PrefixBound{m, std::move(*split)};
}

/// fp(L) <= m + n - 1 for any n-strand word of length m.
inline long fp_bound_braid(const BraidWord& w) {
  return static_cast<long>(w.length()) + w.strands - 1;
}

/// fpbk(L) <= m + 2s, s = positive letters after the disc prefix.
inline Outcome<PrefixBound> fpbk_bound_simple(const BraidWord& w) {
  auto split = find_disc_prefix(w);
  if (!split) {
    return Inapplicable{"no cyclic rotation starts with a positive prefix using each "
                        "generator once"};
  }
  const auto value =
      static_cast<long>(split->tail_length() + 2 * split->tail_positive());
  return PrefixBound{value, std::move(*split)};
}

struct SignedBound {
  long value = 0;
  BraidWord word;  // the word the counts were taken from
  GeneratorCounts counts;
  bool inserted = false;
};

/// fpbk(L) <= sum_i a_i(-eps_i) + 2 (a_i(eps_i) - 1). Requires both signs of
/// every generator; with auto_insert the missing pairs are appended first.
inline Outcome<SignedBound> fpbk_bound_signed(const BraidWord& w, bool auto_insert) {
  BraidWord word = auto_insert ? insert_trivial_pairs(w) : w;
  auto counts = generator_counts(word);
  long total = 0;
  for (int i = 1; i < word.strands; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (counts.plus[s] == 0 || counts.minus[s] == 0) {
      return Inapplicable{"generator " + std::to_string(i) +
                          " does not occur with both signs (use --auto-insert)"};
    }
    const int same = counts.eps[s] > 0 ? counts.plus[s] : counts.minus[s];
    const int opposite = counts.eps[s] > 0 ? counts.minus[s] : counts.plus[s];
    total += opposite + 2L * (same - 1);
  }
  const bool inserted = word.letters.size() != w.letters.size();
  return SignedBound{total, std::move(word), std::move(counts), inserted};
}

// ---------------------------------------------------------------------------
// Flat plumbing: companion edges of opposite sign

enum class Mode { kConstructive, kExhaustive };

struct SearchOptions {
  std::size_t cap = kDefaultEdgeCap;
  unsigned workers = 1;
  std::optional<VertexId> root;  // fixes the root where roots matter
};

namespace detail {

// Two-state sweep: an alternating choice exists iff one of the two
// alternating patterns fits every edge's offered signs.
inline bool admits_alternation(const SignedMultigraph& g, const std::vector<EdgeId>& path,
                               const std::vector<bool>& doubled) {
  for (Sign start : {Sign::kPlus, Sign::kMinus}) {
    Sign want = start;
    bool ok = true;
    for (EdgeId e : path) {
      if (!doubled[e] && g.edge(e).sign != want) {
        ok = false;
        break;
      }
      want = -want;
    }
    if (ok) return true;
  }
  return false;
}

inline std::vector<std::vector<EdgeId>> all_fundamental_paths(const SignedMultigraph& g,
                                                              const RootedTree& t) {
  std::vector<std::vector<EdgeId>> paths;
  for (EdgeId e : coedges(g, t)) paths.push_back(fundamental_path(g, t, e));
  return paths;
}

}  // namespace detail

/// Whether doubling exactly the given tree edges lets every fundamental path
/// of the tree alternate.
inline bool flat_feasible(const SignedMultigraph& g, const RootedTree& t,
                          const std::vector<EdgeId>& companions) {
  std::vector<bool> doubled(g.edge_count(), false);
  for (EdgeId e : companions) {
    if (!t.contains(e)) throw PreconditionError("companion edge is not a tree edge");
    doubled[e] = true;
  }
  for (const auto& p : detail::all_fundamental_paths(g, t)) {
    if (!detail::admits_alternation(g, p, doubled)) return false;
  }
  return true;
}

struct FlatDelta {
  std::size_t delta = 0;
  std::vector<EdgeId> companions;  // lexicographically least minimum set
};

/// Minimum number of tree edges that must be doubled by an edge of opposite
/// sign so that every fundamental path can alternate.
inline FlatDelta delta_flat(const SignedMultigraph& g, const RootedTree& t,
                            std::size_t cap = kDefaultEdgeCap) {
  const auto paths = detail::all_fundamental_paths(g, t);
  // Only edges on some fundamental path can matter; a minimum set never
  // contains any other.
  std::vector<bool> on_path(g.edge_count(), false);
  for (const auto& p : paths) {
    for (EdgeId e : p) on_path[e] = true;
  }
  std::vector<EdgeId> cand;
  for (EdgeId e : t.edges()) {
    if (on_path[e]) cand.push_back(e);
  }
  if (cand.size() > cap) {
    throw CapExceeded("companion search capped at " + std::to_string(cap) +
                      " tree edges; tree has " + std::to_string(cand.size()) +
                      " edges on fundamental paths");
  }
  std::vector<bool> doubled(g.edge_count(), false);
  auto feasible = [&] {
    for (const auto& p : paths) {
      if (!detail::admits_alternation(g, p, doubled)) return false;
    }
    return true;
  };
  const std::size_t k_max = cand.size();
  for (std::size_t k = 0; k <= k_max; ++k) {
    // Combinations of size k in lexicographic order.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      for (std::size_t i : idx) doubled[cand[i]] = true;
      const bool ok = feasible();
      for (std::size_t i : idx) doubled[cand[i]] = false;
      if (ok) {
        FlatDelta out{k, {}};
        for (std::size_t i : idx) out.companions.push_back(cand[i]);
        return out;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == k_max - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InternalError("delta_flat: doubling every tree edge must be feasible");
}

struct FlatBound {
  long value = 0;
  std::vector<EdgeId> tree_edges;
  std::optional<VertexId> root;  // set in constructive mode (BFS root)
  FlatDelta delta;
};

// ---------------------------------------------------------------------------
// Flat plumbing basket: annulus budgets

struct AnnulusBudget {
  RootedTree tree;
  EdgeColoring kappa;
  std::vector<EdgeId> set_b;  // tree edges with mu != kappa
  std::vector<EdgeId> set_c;  // coedges with mu != path sign of kappa
  std::size_t coedge_count = 0;
  long gamma = 0;
  long delta = 0;
  long bound = 0;  // 3(E - V) + 2(gamma - delta) + 3
};

/// Budget for one fixed orientation of the depth coloring. Precondition:
/// is_valid_pair(g, t).
inline AnnulusBudget annulus_budget_for(const SignedMultigraph& g, const RootedTree& t,
                                        bool flipped) {
  if (!is_valid_pair(g, t)) {
    throw PreconditionError("annulus budget needs a tree whose fundamental paths alternate");
  }
  AnnulusBudget b{t, depth_coloring(t, g.edge_count(), flipped), {}, {}, 0, 0, 0, 0};
  for (EdgeId e : t.edges()) {
    if (g.edge(e).sign != b.kappa[e]) b.set_b.push_back(e);
  }
  for (EdgeId e : coedges(g, t)) {
    ++b.coedge_count;
    if (g.edge(e).sign != path_sign(fundamental_path(g, t, e), b.kappa)) {
      b.set_c.push_back(e);
    }
  }
  b.gamma = static_cast<long>(b.set_b.size());
  b.delta = static_cast<long>(b.set_c.size());
  const long ev = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
  b.bound = 3 * ev + 2 * (b.gamma - b.delta) + 3;
  return b;
}

/// Evaluates both orientations and keeps the smaller bound (ties: fewer
/// Reidemeister II moves, then the unflipped coloring).
inline AnnulusBudget annulus_budget(const SignedMultigraph& g, const RootedTree& t) {
  auto plain = annulus_budget_for(g, t, false);
  auto flip = annulus_budget_for(g, t, true);
  if (flip.bound < plain.bound || (flip.bound == plain.bound && flip.gamma < plain.gamma)) {
    return flip;
  }
  return plain;
}

namespace detail {

// Total order used for every min-reduction: value, then the sorted tree
// edge list, then root id (absent roots first).
inline bool witness_less(long av, const std::vector<EdgeId>& at, std::optional<VertexId> ar, long bv,
                  const std::vector<EdgeId>& bt, std::optional<VertexId> br) {
  if (av != bv) return av < bv;
  if (at != bt) return at < bt;
  return ar < br;
}

template <typename Result, typename Eval>
std::optional<Result> parallel_min(std::size_t count, unsigned workers, Eval eval) {
  workers = std::max(1u, workers);
  std::vector<std::optional<Result>> best(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < count; i += workers) {
        eval(i, best[w]);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::optional<Result> out;
  for (auto& b : best) {
    if (b && (!out || b->less(*out))) out = std::move(b);
  }
  return out;
}

struct FlatCandidate {
  FlatBound bound;
  bool less(const FlatCandidate& o) const {
    return witness_less(bound.value, bound.tree_edges, bound.root, o.bound.value,
                              o.bound.tree_edges, o.bound.root);
  }
};

struct BasketCandidate {
  AnnulusBudget budget;
  bool less(const BasketCandidate& o) const {
    return witness_less(budget.bound, budget.tree.edges(), budget.tree.root(),
                              o.budget.bound, o.budget.tree.edges(), o.budget.tree.root());
  }
};

inline void require_connected(const SignedMultigraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("empty graph");
  if (!g.connected()) {
    throw PreconditionError("graph is not connected; bound each split component separately");
  }
}

template <typename Candidate>
void keep_min(std::optional<Candidate>& slot, Candidate c) {
  if (!slot || c.less(*slot)) slot = std::move(c);
}

}  // namespace detail

/// fp(L) <= (E - V + 1) + 2 delta. Constructive: breadth-first tree of every
/// root. Exhaustive: every spanning tree.
inline FlatBound fp_bound_graph(const SignedMultigraph& g, Mode mode,
                                const SearchOptions& opt = {}) {
  detail::require_connected(g);
  const long base = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) + 1;
  auto make = [&](const RootedTree& t, std::optional<VertexId> root) {
    auto d = delta_flat(g, t, opt.cap);
    const long value = base + 2 * static_cast<long>(d.delta);
    return detail::FlatCandidate{FlatBound{value, t.edges(), root, std::move(d)}};
  };
  std::optional<detail::FlatCandidate> best;
  if (mode == Mode::kConstructive) {
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      if (opt.root && *opt.root != r) continue;
      detail::keep_min(best, make(bfs_tree(g, r), r));
    }
  } else {
    const auto trees = enumerate_spanning_trees(g, opt.cap);
    best = detail::parallel_min<detail::FlatCandidate>(
        trees.size(), opt.workers, [&](std::size_t i, std::optional<detail::FlatCandidate>& slot) {
          detail::keep_min(slot, make(RootedTree(g, trees[i], 0), std::nullopt));
        });
  }
  if (!best) throw InternalError("fp_bound_graph: connected graph without a spanning tree");
  return std::move(best->bound);
}

/// fpbk(L) <= 3 (E - V) + 2 (gamma - delta) + 3, minimized over (tree, root)
/// pairs whose fundamental paths alternate under the depth coloring.
/// Constructive: the swap procedure from the breadth-first tree of each root.
/// Exhaustive: every spanning tree with every root.
inline AnnulusBudget fpbk_bound_graph(const SignedMultigraph& g, Mode mode,
                                      const SearchOptions& opt = {}) {
  detail::require_connected(g);
  if (opt.root && *opt.root >= g.vertex_count()) {
    throw PreconditionError("root is not a vertex of the graph");
  }
  std::optional<detail::BasketCandidate> best;
  if (mode == Mode::kConstructive) {
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      if (opt.root && *opt.root != r) continue;
      auto trace = construct_valid_pair(g, r);
      detail::keep_min(best, detail::BasketCandidate{annulus_budget(g, trace.final_tree)});
    }
  } else {
    const auto trees = enumerate_spanning_trees(g, opt.cap);
    best = detail::parallel_min<detail::BasketCandidate>(
        trees.size(), opt.workers,
        [&](std::size_t i, std::optional<detail::BasketCandidate>& slot) {
          for (VertexId r = 0; r < g.vertex_count(); ++r) {
            if (opt.root && *opt.root != r) continue;
            RootedTree t(g, trees[i], r);
            if (!is_valid_pair(g, t)) continue;
            detail::keep_min(slot, detail::BasketCandidate{annulus_budget(g, t)});
          }
        });
  }
  if (!best) throw InternalError("fpbk_bound_graph: no valid (tree, root) pair found");
  return std::move(best->budget);
}

// ---------------------------------------------------------------------------
// Genus relations

struct GenusChain {
  long fp_upper = 0;    // 2 g_c + 2 delta + l - 1
  long fpbk_upper = 0;  // 6 g_c + 2 (gamma - delta) + 3 l - 3
  std::optional<long> lower;  // 2 g + l - 1, when the genus is supplied
};

inline GenusChain genus_chain(const SeifertStats& stats, long flat_delta,
                              long gamma_minus_delta, std::optional<long> genus_hint) {
  GenusChain c;
  c.fp_upper = 2L * stats.g_c + 2 * flat_delta + stats.l - 1;
  c.fpbk_upper = 6L * stats.g_c + 2 * gamma_minus_delta + 3L * stats.l - 3;
  if (genus_hint) c.lower = 2 * *genus_hint + stats.l - 1;
  return c;
}

}  // namespace plumb
