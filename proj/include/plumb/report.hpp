#pragma once

// Assembles per-theorem bound rows for a braid or graph input and renders
// them as a fixed-order text table or a JSON report.

#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "plumb/bounds.hpp"
#include "plumb/braid.hpp"
#include "plumb/graph.hpp"
#include "plumb/search.hpp"
#include "plumb/tree.hpp"

namespace plumb {

using Json = nlohmann::ordered_json;

struct Witness {
  std::optional<std::string> root;
  std::optional<std::vector<EdgeId>> tree_edges;
  std::optional<bool> flipped;
  std::optional<long> gamma;
  std::optional<long> delta;
  std::optional<std::vector<EdgeId>> set_b;
  std::optional<std::vector<EdgeId>> set_c;
  std::optional<std::vector<EdgeId>> companions;
  std::optional<std::size_t> rotation;
};

struct BoundRow {
  std::string name;
  bool applicable = false;
  long value = 0;
  std::string reason;  // set when inapplicable
  Witness witness;
};

struct ReportStats {
  std::size_t s = 0;
  std::size_t c = 0;
  std::optional<int> l;
  std::optional<int> g_c;
};

struct BoundsReport {
  std::string input;
  ReportStats stats;
  std::vector<BoundRow> bounds;
  std::vector<std::string> notes;

  const BoundRow* row(std::string_view name) const {
    for (const auto& r : bounds) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }

  bool any_applicable() const {
    for (const auto& r : bounds) {
      if (r.applicable) return true;
    }
    return false;
  }
};

inline constexpr const char* kChainNote =
    "bk <= fp <= fpbk holds for the invariants themselves; the upper bounds "
    "in this report are computed independently and need not be ordered";

struct BraidReportOptions {
  bool auto_insert = false;
  std::optional<long> genus_hint;
};

struct GraphReportOptions {
  bool exhaustive = false;
  std::optional<std::string> root;
  std::optional<int> components;
  std::size_t cap = kDefaultEdgeCap;
  unsigned workers = 1;
  bool keep_pendants = false;
  std::optional<long> genus_hint;
};

namespace detail {

inline BoundRow inapplicable_row(std::string name, std::string reason) {
  BoundRow r;
  r.name = std::move(name);
  r.reason = std::move(reason);
  return r;
}

inline std::vector<EdgeId> map_ids(const std::vector<EdgeId>& ids,
                                   const std::vector<EdgeId>& origin) {
  std::vector<EdgeId> out;
  out.reserve(ids.size());
  for (EdgeId e : ids) out.push_back(origin.empty() ? e : origin.at(e));
  return out;
}

inline BoundRow flat_row(std::string name, const SignedMultigraph& g, const FlatBound& b,
                         const std::vector<EdgeId>& origin) {
  BoundRow r;
  r.name = std::move(name);
  r.applicable = true;
  r.value = b.value;
  if (b.root) r.witness.root = g.name(*b.root);
  r.witness.tree_edges = map_ids(b.tree_edges, origin);
  r.witness.delta = static_cast<long>(b.delta.delta);
  r.witness.companions = map_ids(b.delta.companions, origin);
  return r;
}

inline BoundRow basket_row(std::string name, const SignedMultigraph& g,
                           const AnnulusBudget& b, const std::vector<EdgeId>& origin) {
  BoundRow r;
  r.name = std::move(name);
  r.applicable = true;
  r.value = b.bound;
  r.witness.root = g.name(b.tree.root());
  r.witness.tree_edges = map_ids(b.tree.edges(), origin);
  r.witness.flipped = b.kappa.flipped;
  r.witness.gamma = b.gamma;
  r.witness.delta = b.delta;
  r.witness.set_b = map_ids(b.set_b, origin);
  r.witness.set_c = map_ids(b.set_c, origin);
  return r;
}

inline void add_genus_rows(BoundsReport& rep, const std::optional<SeifertStats>& stats,
                           const std::optional<FlatBound>& flat,
                           const std::optional<AnnulusBudget>& basket,
                           std::optional<long> genus_hint) {
  if (!stats) {
    const char* why = "number of link components (and so the canonical genus) unknown";
    rep.bounds.push_back(inapplicable_row("fp_genus_upper", why));
    rep.bounds.push_back(inapplicable_row("fpbk_genus_upper", why));
    return;
  }
  const long flat_delta = flat ? static_cast<long>(flat->delta.delta) : 0;
  const long gmd = basket ? basket->gamma - basket->delta : 0;
  const auto chain = genus_chain(*stats, flat_delta, gmd, genus_hint);
  if (flat) {
    BoundRow r;
    r.name = "fp_genus_upper";
    r.applicable = true;
    r.value = chain.fp_upper;
    r.witness.delta = flat_delta;
    rep.bounds.push_back(r);
  } else {
    rep.bounds.push_back(inapplicable_row("fp_genus_upper", "no flat plumbing witness"));
  }
  if (basket) {
    BoundRow r;
    r.name = "fpbk_genus_upper";
    r.applicable = true;
    r.value = chain.fpbk_upper;
    r.witness.gamma = basket->gamma;
    r.witness.delta = basket->delta;
    rep.bounds.push_back(r);
  } else {
    rep.bounds.push_back(inapplicable_row("fpbk_genus_upper", "no annulus budget witness"));
  }
  if (chain.lower) {
    BoundRow r;
    r.name = "genus_lower";
    r.applicable = true;
    r.value = *chain.lower;
    rep.bounds.push_back(r);
  }
}

}  // namespace detail

/// Rows: basket, fp_braid, fpbk_simple, fpbk_signed, then the constructive
/// graph rows of the closure's induced graph and the genus lines.
inline BoundsReport braid_report(const BraidWord& w, std::string input,
                                 const BraidReportOptions& opt = {}) {
  BoundsReport rep;
  rep.input = std::move(input);
  const auto g = induced_graph(w);
  const int l = closure_components(w);
  rep.stats.s = g.vertex_count();
  rep.stats.c = g.edge_count();
  rep.stats.l = l;
  std::optional<SeifertStats> stats;
  if (g.connected()) {
    stats = seifert_stats(g, l);
    rep.stats.g_c = stats->g_c;
  }

  auto prefix_row = [](std::string name, const Outcome<PrefixBound>& o) {
    if (!applicable(o)) return detail::inapplicable_row(name, std::get<Inapplicable>(o).reason);
    const auto& b = std::get<PrefixBound>(o);
    BoundRow r;
    r.name = std::move(name);
    r.applicable = true;
    r.value = b.value;
    r.witness.rotation = b.split.rotation;
    return r;
  };
  rep.bounds.push_back(prefix_row("basket", basket_bound(w)));
  {
    BoundRow r;
    r.name = "fp_braid";
    r.applicable = true;
    r.value = fp_bound_braid(w);
    rep.bounds.push_back(r);
  }
  rep.bounds.push_back(prefix_row("fpbk_simple", fpbk_bound_simple(w)));
  {
    const auto o = fpbk_bound_signed(w, opt.auto_insert);
    if (applicable(o)) {
      BoundRow r;
      r.name = "fpbk_signed";
      r.applicable = true;
      r.value = std::get<SignedBound>(o).value;
      rep.bounds.push_back(r);
      if (std::get<SignedBound>(o).inserted) {
        std::string word;
        for (Letter k : std::get<SignedBound>(o).word.letters) {
          word += (word.empty() ? "" : " ") + std::to_string(k);
        }
        rep.notes.push_back("fpbk_signed counts taken after appending trivial pairs: word " +
                            word);
      }
    } else {
      rep.bounds.push_back(
          detail::inapplicable_row("fpbk_signed", std::get<Inapplicable>(o).reason));
    }
  }

  std::optional<FlatBound> flat;
  std::optional<AnnulusBudget> basket;
  if (g.connected()) {
    flat = fp_bound_graph(g, Mode::kConstructive);
    basket = fpbk_bound_graph(g, Mode::kConstructive);
    rep.bounds.push_back(detail::flat_row("fp_graph", g, *flat, {}));
    rep.bounds.push_back(detail::basket_row("fpbk_graph", g, *basket, {}));
  } else {
    const char* why = "induced graph is disconnected (a generator is missing)";
    rep.bounds.push_back(detail::inapplicable_row("fp_graph", why));
    rep.bounds.push_back(detail::inapplicable_row("fpbk_graph", why));
  }
  detail::add_genus_rows(rep, stats, flat, basket, opt.genus_hint);

  rep.notes.push_back(
      "basket and fpbk_simple use the least cyclic rotation exposing a positive disc prefix "
      "(witness.rotation); other braid words for the same link can give different values");
  rep.notes.push_back(kChainNote);
  return rep;
}

/// Rows: fp_graph_constructive, fpbk_graph_constructive, then the exhaustive
/// rows when requested, then the genus lines from the best rows.
inline BoundsReport graph_report(const SignedMultigraph& input_graph, std::string input,
                                 const GraphReportOptions& opt = {}) {
  BoundsReport rep;
  rep.input = std::move(input);
  std::optional<int> l = opt.components ? opt.components : input_graph.components();
  rep.stats.s = input_graph.vertex_count();
  rep.stats.c = input_graph.edge_count();
  rep.stats.l = l;
  if (!input_graph.connected()) {
    throw PreconditionError("graph is not connected; bound each split component separately");
  }
  std::optional<SeifertStats> stats;
  if (l) {
    stats = seifert_stats(input_graph, *l);
    rep.stats.g_c = stats->g_c;
  }

  SignedMultigraph g = input_graph;
  std::vector<EdgeId> origin;
  if (!opt.keep_pendants) {
    auto pr = prune_pendants(input_graph);
    if (pr.removed > 0) {
      rep.notes.push_back("removed " + std::to_string(pr.removed) +
                          " pendant vertex(es) (Reidemeister I); witness edge ids refer to "
                          "the input file");
      g = std::move(pr.graph);
      origin = std::move(pr.edge_origin);
    }
  }

  SearchOptions so;
  so.cap = opt.cap;
  so.workers = opt.workers;
  if (opt.root) {
    so.root = g.find(*opt.root);
    if (!so.root) {
      if (input_graph.find(*opt.root)) {
        throw PreconditionError("root '" + *opt.root + "' was removed as a pendant vertex");
      }
      throw PreconditionError("root '" + *opt.root + "' is not a vertex of the graph");
    }
  }

  auto flat = fp_bound_graph(g, Mode::kConstructive, so);
  auto basket = fpbk_bound_graph(g, Mode::kConstructive, so);
  rep.bounds.push_back(detail::flat_row("fp_graph_constructive", g, flat, origin));
  rep.bounds.push_back(detail::basket_row("fpbk_graph_constructive", g, basket, origin));
  if (opt.exhaustive) {
    auto flat_ex = fp_bound_graph(g, Mode::kExhaustive, so);
    auto basket_ex = fpbk_bound_graph(g, Mode::kExhaustive, so);
    rep.bounds.push_back(detail::flat_row("fp_graph_exhaustive", g, flat_ex, origin));
    rep.bounds.push_back(detail::basket_row("fpbk_graph_exhaustive", g, basket_ex, origin));
    if (flat_ex.value < flat.value) flat = std::move(flat_ex);
    if (basket_ex.bound < basket.bound) basket = std::move(basket_ex);
  }
  detail::add_genus_rows(rep, stats, flat, basket, opt.genus_hint);
  if (opt.root) {
    rep.notes.push_back("fpbk rows restricted to root " + *opt.root);
  }
  rep.notes.push_back(kChainNote);
  return rep;
}

namespace detail {

template <typename T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace detail

inline Json to_json(const BoundsReport& rep) {
  Json j;
  j["input"] = rep.input;
  j["stats"] = Json{{"s", rep.stats.s},
                    {"c", rep.stats.c},
                    {"l", detail::opt_json(rep.stats.l)},
                    {"g_c", detail::opt_json(rep.stats.g_c)}};
  Json rows = Json::array();
  for (const auto& r : rep.bounds) {
    Json row;
    row["name"] = r.name;
    row["applicable"] = r.applicable;
    row["value"] = r.applicable ? Json(r.value) : Json(nullptr);
    if (!r.applicable) row["reason"] = r.reason;
    const auto& w = r.witness;
    row["witness"] = Json{{"root", detail::opt_json(w.root)},
                          {"tree_edges", detail::opt_json(w.tree_edges)},
                          {"flipped", detail::opt_json(w.flipped)},
                          {"gamma", detail::opt_json(w.gamma)},
                          {"delta", detail::opt_json(w.delta)},
                          {"set_B", detail::opt_json(w.set_b)},
                          {"set_C", detail::opt_json(w.set_c)},
                          {"companions", detail::opt_json(w.companions)},
                          {"rotation", detail::opt_json(w.rotation)}};
    rows.push_back(std::move(row));
  }
  j["bounds"] = std::move(rows);
  j["notes"] = rep.notes;
  return j;
}

namespace detail {

inline std::string join_ids(const std::vector<EdgeId>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ids[i]);
  }
  return s + "}";
}

inline std::string describe(const Witness& w) {
  std::string s;
  auto add = [&](const std::string& part) {
    if (!s.empty()) s += ' ';
    s += part;
  };
  if (w.rotation) add("rotation=" + std::to_string(*w.rotation));
  if (w.root) add("root=" + *w.root);
  if (w.tree_edges) add("T=" + join_ids(*w.tree_edges));
  if (w.flipped) add(std::string("flipped=") + (*w.flipped ? "yes" : "no"));
  if (w.gamma) add("gamma=" + std::to_string(*w.gamma));
  if (w.delta) add("delta=" + std::to_string(*w.delta));
  if (w.set_b) add("B=" + join_ids(*w.set_b));
  if (w.set_c) add("C=" + join_ids(*w.set_c));
  if (w.companions) add("S=" + join_ids(*w.companions));
  return s;
}

}  // namespace detail

inline std::string to_text(const BoundsReport& rep) {
  std::ostringstream os;
  auto or_dash = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << "input: " << rep.input << '\n';
  os << "stats: s=" << rep.stats.s << " c=" << rep.stats.c << " l=" << or_dash(rep.stats.l)
     << " g_c=" << or_dash(rep.stats.g_c) << '\n';
  os << std::left << std::setw(26) << "bound" << std::setw(8) << "value" << "witness\n";
  for (const auto& r : rep.bounds) {
    os << std::left << std::setw(26) << r.name;
    if (r.applicable) {
      os << std::setw(8) << r.value << detail::describe(r.witness);
    } else {
      os << std::setw(8) << "n/a" << r.reason;
    }
    os << '\n';
  }
  for (const auto& n : rep.notes) os << "note: " << n << '\n';
  return os.str();
}

}  // namespace plumb
