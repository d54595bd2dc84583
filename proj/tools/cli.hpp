#pragma once

// Command dispatch for the `plumb` executable. Kept separate from main() so
// tests can run commands in-process.
//
// Exit codes: 0 success, 1 parse or input error, 2 every requested theorem
// inapplicable or a search cap exceeded, 3 internal invariant violation.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "plumb/plumb.hpp"

namespace plumb::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kInapplicable = 2, kInternal = 3 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
  out << text;
}

inline std::string label_for(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

struct BraidSource {
  std::string file;
  std::string word;
  std::optional<int> strands;
  bool word_given = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "braid file");
    cmd->add_option("--word", word, "inline word of signed generator indices")
        ->each([this](const std::string&) { word_given = true; });
    cmd->add_option("--strands", strands, "strand count for --word");
  }

  std::pair<BraidWord, std::string> load() const {
    if (!file.empty() == word_given) {
      throw ParseError(0, "give exactly one of a braid file or --word");
    }
    if (word_given) {
      if (!strands) throw ParseError(0, "--word needs --strands");
      BraidWord w{*strands, parse_letters(word)};
      validate(w);
      std::string label = "strands " + std::to_string(*strands) + " word";
      for (Letter k : w.letters) label += " " + std::to_string(k);
      return {std::move(w), label};
    }
    return {parse_braid(read_file(file)), label_for(file)};
  }
};

inline Json tree_json(const SignedMultigraph& g, const SwapTrace& trace) {
  Json j;
  j["root"] = g.name(trace.final_tree.root());
  j["initial_tree"] = trace.initial.edges();
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(Json{{"removed", s.removed},
                         {"inserted", s.inserted},
                         {"eta_before", s.eta_before},
                         {"eta_after", s.eta_after}});
  }
  j["steps"] = std::move(steps);
  const auto& t = trace.final_tree;
  const auto kappa = depth_coloring(t, g.edge_count());
  Json depths;
  for (VertexId v = 0; v < g.vertex_count(); ++v) depths[g.name(v)] = t.depth(v);
  Json colors = Json::array();
  for (EdgeId e : t.edges()) {
    colors.push_back(Json{{"edge", e}, {"sign", std::string(1, symbol(kappa[e]))}});
  }
  j["final"] = Json{{"root", g.name(t.root())},
                    {"tree_edges", t.edges()},
                    {"depths", std::move(depths)},
                    {"kappa", std::move(colors)},
                    {"valid", is_valid_pair(g, t)}};
  return j;
}

inline std::string tree_text(const SignedMultigraph& g, const SwapTrace& trace) {
  std::ostringstream os;
  auto edge_str = [&](EdgeId e) {
    const auto& ed = g.edge(e);
    return std::to_string(e) + " (" + g.name(ed.u) + "-" + g.name(ed.v) + " " +
           symbol(ed.sign) + ")";
  };
  os << "root: " << g.name(trace.final_tree.root()) << '\n';
  os << "initial tree:";
  for (EdgeId e : trace.initial.edges()) os << ' ' << e;
  os << "\neta: " << eta(trace.initial) << '\n';
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    os << "swap " << i + 1 << ": remove " << edge_str(s.removed) << ", insert "
       << edge_str(s.inserted) << ", eta " << s.eta_before << " -> " << s.eta_after << '\n';
  }
  const auto& t = trace.final_tree;
  const auto kappa = depth_coloring(t, g.edge_count());
  os << "final tree (edge, depth, kappa):\n";
  for (EdgeId e : t.edges()) {
    os << "  " << edge_str(e) << " d=" << t.edge_depth(e) << " kappa=" << symbol(kappa[e])
       << '\n';
  }
  os << "valid: " << (is_valid_pair(g, t) ? "yes" : "no") << '\n';
  return os.str();
}

/// Runs one command line (args exclude the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Upper bounds for basket, flat plumbing and flat plumbing basket numbers",
               "plumb"};
  app.require_subcommand(1);

  // braid-bounds
  auto* braid_cmd = app.add_subcommand("braid-bounds", "bounds from a braid word");
  BraidSource braid_src;
  braid_src.attach(braid_cmd);
  bool auto_insert = false;
  std::string braid_json;
  std::optional<long> braid_genus;
  braid_cmd->add_flag("--auto-insert", auto_insert,
                      "append sigma_i sigma_i^-1 where a generator lacks a sign");
  braid_cmd->add_option("--json", braid_json, "write the JSON report to this path");
  braid_cmd->add_option("--genus", braid_genus, "known genus g(L) for the lower line");

  // graph-bounds
  auto* graph_cmd = app.add_subcommand("graph-bounds", "bounds from a Seifert graph file");
  std::string graph_file;
  GraphReportOptions gopt;
  std::string graph_json;
  std::optional<std::string> graph_root;
  std::optional<int> graph_components;
  std::optional<long> graph_genus;
  graph_cmd->add_option("file", graph_file, "graph file")->required();
  graph_cmd->add_flag("--exhaustive", gopt.exhaustive, "also minimize over all spanning trees");
  graph_cmd->add_option("--root", graph_root, "fix the root vertex");
  graph_cmd->add_option("--components", graph_components, "number of link components l")
      ->check(CLI::PositiveNumber);
  graph_cmd->add_option("--cap", gopt.cap, "edge cap for exhaustive search")
      ->check(CLI::PositiveNumber);
  graph_cmd->add_option("--workers", gopt.workers, "threads for exhaustive search")
      ->check(CLI::PositiveNumber);
  graph_cmd->add_flag("--keep-pendants", gopt.keep_pendants, "do not prune degree-1 vertices");
  graph_cmd->add_option("--genus", graph_genus, "known genus g(L) for the lower line");
  graph_cmd->add_option("--json", graph_json, "write the JSON report to this path");

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "run the swap procedure and print its trace");
  std::string tree_file;
  std::optional<std::string> tree_root;
  std::string tree_json_path;
  tree_cmd->add_option("file", tree_file, "graph file")->required();
  tree_cmd->add_option("--root", tree_root, "root vertex (default: first vertex)");
  tree_cmd->add_option("--json", tree_json_path, "write the trace as JSON to this path");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive cross-checks for a graph");
  std::string oracle_file;
  std::size_t oracle_cap = kDefaultEdgeCap;
  unsigned oracle_workers = 1;
  oracle_cmd->add_option("file", oracle_file, "graph file")->required();
  oracle_cmd->add_option("--cap", oracle_cap, "edge cap")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--workers", oracle_workers, "threads")->check(CLI::PositiveNumber);

  // braid-to-graph
  auto* b2g_cmd = app.add_subcommand("braid-to-graph", "emit the induced graph of a braid");
  BraidSource b2g_src;
  b2g_src.attach(b2g_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "plumb: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*braid_cmd) {
      auto [w, label] = braid_src.load();
      for (const auto& warning : braid_warnings(w)) err << "warning: " << warning << '\n';
      BraidReportOptions bopt{auto_insert, braid_genus};
      const auto rep = braid_report(w, label, bopt);
      out << to_text(rep);
      if (!braid_json.empty()) write_file(braid_json, to_json(rep).dump(2) + "\n");
      return rep.any_applicable() ? kOk : kInapplicable;
    }
    if (*graph_cmd) {
      const auto g = parse_graph(read_file(graph_file));
      gopt.root = graph_root;
      gopt.components = graph_components;
      gopt.genus_hint = graph_genus;
      const auto rep = graph_report(g, label_for(graph_file), gopt);
      out << to_text(rep);
      if (!graph_json.empty()) write_file(graph_json, to_json(rep).dump(2) + "\n");
      return rep.any_applicable() ? kOk : kInapplicable;
    }
    if (*tree_cmd) {
      const auto g = parse_graph(read_file(tree_file));
      if (!g.connected()) throw PreconditionError("graph is not connected");
      VertexId root = 0;
      if (tree_root) {
        auto r = g.find(*tree_root);
        if (!r) throw PreconditionError("root '" + *tree_root + "' is not a vertex");
        root = *r;
      }
      const auto trace = construct_valid_pair(g, root);
      out << tree_text(g, trace);
      if (!tree_json_path.empty()) write_file(tree_json_path, tree_json(g, trace).dump(2) + "\n");
      return kOk;
    }
    if (*oracle_cmd) {
      const auto g = parse_graph(read_file(oracle_file));
      if (!g.connected()) throw PreconditionError("graph is not connected");
      SearchOptions so;
      so.cap = oracle_cap;
      so.workers = oracle_workers;
      const auto trees = enumerate_spanning_trees(g, oracle_cap);
      const auto flat = fp_bound_graph(g, Mode::kExhaustive, so);
      const auto basket = fpbk_bound_graph(g, Mode::kExhaustive, so);
      out << "spanning trees (enumeration): " << trees.size() << '\n';
      out << "spanning trees (matrix-tree): " << matrix_tree_count(g) << '\n';
      out << "min delta_flat: " << flat.delta.delta << " (fp bound " << flat.value << ")\n";
      out << "min gamma-delta: " << basket.gamma - basket.delta << " (fpbk bound "
          << basket.bound << ")\n";
      return kOk;
    }
    if (*b2g_cmd) {
      auto [w, label] = b2g_src.load();
      for (const auto& warning : braid_warnings(w)) err << "warning: " << warning << '\n';
      out << render_graph(induced_graph(w), "induced graph of the closure of " + label);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "plumb: parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "plumb: " << e.what() << '\n';
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "plumb: " << e.what() << '\n';
    return kInapplicable;
  } catch (const InternalError& e) {
    err << "plumb: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInputError;
}

}  // namespace plumb::cli
