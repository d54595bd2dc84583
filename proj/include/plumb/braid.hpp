#pragma once

// Braid words on n strands: parsing, normalization, generator statistics,
// closure permutation, disc-prefix search and the induced Seifert graph of
// the braid closure.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "plumb/error.hpp"
#include "plumb/graph.hpp"

namespace plumb {

/// A signed Artin generator: +i is sigma_i, -i is sigma_i^{-1}.
using Letter = int;

struct BraidWord {
  int strands = 1;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct GeneratorCounts {
  // Indexed by generator i in [1, strands-1]; slot 0 unused.
  std::vector<int> plus;
  std::vector<int> minus;
  std::vector<int> eps;

  int generators() const { return static_cast<int>(plus.size()) - 1; }
};

/// A cyclic rotation of the word whose first strands-1 letters are positive
/// and use every generator exactly once.
struct DiscPrefixSplit {
  std::size_t rotation = 0;
  std::vector<Letter> prefix;
  std::vector<Letter> tail;

  std::size_t tail_length() const { return tail.size(); }
  std::size_t tail_positive() const {
    return static_cast<std::size_t>(
        std::count_if(tail.begin(), tail.end(), [](Letter k) { return k > 0; }));
  }
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<long long> parse_int(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  if (tok.empty()) return std::nullopt;
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Checks every letter against the strand count.
inline void validate(const BraidWord& w) {
  if (w.strands < 1) throw ParseError(0, "strand count must be positive");
  for (Letter k : w.letters) {
    if (k == 0 || std::abs(k) >= w.strands) {
      throw ParseError(0, "generator index " + std::to_string(k) +
                              " out of range for " + std::to_string(w.strands) +
                              " strands");
    }
  }
}

/// Parses a whitespace-separated list of signed generator indices.
inline std::vector<Letter> parse_letters(std::string_view text,
                                         std::size_t line = 0) {
  std::vector<Letter> letters;
  for (auto tok : detail::split_ws(text)) {
    auto v = detail::parse_int(tok);
    if (!v || *v < -1'000'000 || *v > 1'000'000) {
      throw ParseError(line, "malformed generator token '" + std::string(tok) + "'");
    }
    letters.push_back(static_cast<Letter>(*v));
  }
  return letters;
}

/// Braid file grammar:
///   strands <n>
///   word <k1> <k2> ...
/// Lines starting with '#' and blank lines are ignored.
inline BraidWord parse_braid(std::string_view text) {
  std::optional<int> strands;
  std::optional<std::vector<Letter>> letters;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.front() == "strands") {
      if (strands) throw ParseError(line_no, "duplicate strands header");
      if (letters) throw ParseError(line_no, "strands header must precede word");
      if (toks.size() != 2) throw ParseError(line_no, "expected 'strands <n>'");
      auto n = detail::parse_int(toks[1]);
      if (!n || *n < 1 || *n > 100'000) {
        throw ParseError(line_no, "invalid strand count '" + std::string(toks[1]) + "'");
      }
      strands = static_cast<int>(*n);
    } else if (toks.front() == "word") {
      if (!strands) throw ParseError(line_no, "missing strands header");
      if (letters) throw ParseError(line_no, "duplicate word line");
      auto body = line.substr(line.find("word") + 4);
      letters = parse_letters(body, line_no);
      for (Letter k : *letters) {
        if (k == 0 || std::abs(k) >= *strands) {
          throw ParseError(line_no, "generator index " + std::to_string(k) +
                                        " out of range for " +
                                        std::to_string(*strands) + " strands");
        }
      }
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(toks.front()) + "'");
    }
    if (end == text.size()) break;
  }
  if (!strands) throw ParseError(0, "missing strands header");
  if (!letters) throw ParseError(0, "missing word line");
  return BraidWord{*strands, std::move(*letters)};
}

/// Canonical file form; parse_braid(render_braid(w)) == w.
inline std::string render_braid(const BraidWord& w) {
  std::ostringstream os;
  os << "strands " << w.strands << "\nword";
  for (Letter k : w.letters) os << ' ' << k;
  os << '\n';
  return os.str();
}

/// Non-fatal diagnostics: generators that never occur leave the closure split.
inline std::vector<std::string> braid_warnings(const BraidWord& w) {
  std::vector<std::string> out;
  std::vector<bool> seen(static_cast<std::size_t>(w.strands), false);
  for (Letter k : w.letters) seen[static_cast<std::size_t>(std::abs(k))] = true;
  for (int i = 1; i < w.strands; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      out.push_back("generator " + std::to_string(i) +
                    " does not occur; the closure is a split link");
    }
  }
  return out;
}

/// Cancels adjacent inverse pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.letters.size());
  for (Letter k : w.letters) {
    if (!stack.empty() && stack.back() == -k) {
      stack.pop_back();
    } else {
      stack.push_back(k);
    }
  }
  return BraidWord{w.strands, std::move(stack)};
}

inline GeneratorCounts generator_counts(const BraidWord& w) {
  const auto slots = static_cast<std::size_t>(std::max(w.strands, 1));
  GeneratorCounts c{std::vector<int>(slots, 0), std::vector<int>(slots, 0),
                    std::vector<int>(slots, 1)};
  for (Letter k : w.letters) {
    auto i = static_cast<std::size_t>(std::abs(k));
    (k > 0 ? c.plus : c.minus)[i] += 1;
  }
  for (std::size_t i = 1; i < slots; ++i) {
    const int diff = c.plus[i] - c.minus[i];
    c.eps[i] = diff == 0 ? 1 : (diff > 0 ? -1 : 1);
  }
  return c;
}

/// Appends sigma_i sigma_i^{-1} for every generator missing either sign.
inline BraidWord insert_trivial_pairs(const BraidWord& w) {
  BraidWord out = w;
  const auto counts = generator_counts(w);
  for (int i = 1; i < w.strands; ++i) {
    const auto s = static_cast<std::size_t>(i);
    if (counts.plus[s] == 0 || counts.minus[s] == 0) {
      out.letters.push_back(i);
      out.letters.push_back(-i);
    }
  }
  return out;
}

/// Strand permutation of the word: letters act as transpositions (|k|, |k|+1)
/// in word order. Entry p[j] is the final position of the strand starting at j.
inline std::vector<int> closure_permutation(const BraidWord& w) {
  std::vector<int> pos(static_cast<std::size_t>(w.strands));
  std::iota(pos.begin(), pos.end(), 0);
  // at[x] = strand currently at position x
  std::vector<int> at = pos;
  for (Letter k : w.letters) {
    const auto a = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(at[a], at[a + 1]);
  }
  std::vector<int> perm(pos.size());
  for (std::size_t x = 0; x < at.size(); ++x) {
    perm[static_cast<std::size_t>(at[x])] = static_cast<int>(x);
  }
  return perm;
}

/// Number of link components of the braid closure.
inline int closure_components(const BraidWord& w) {
  const auto perm = closure_permutation(w);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (auto x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
  }
  return cycles;
}

inline BraidWord rotate(const BraidWord& w, std::size_t offset) {
  BraidWord out = w;
  if (!out.letters.empty()) {
    std::rotate(out.letters.begin(),
                out.letters.begin() + static_cast<std::ptrdiff_t>(offset % out.letters.size()),
                out.letters.end());
  }
  return out;
}

/// Least cyclic rotation whose first strands-1 letters are positive and
/// contain each generator once. The trivial one-strand braid splits at 0.
inline std::optional<DiscPrefixSplit> find_disc_prefix(const BraidWord& w) {
  const auto need = static_cast<std::size_t>(w.strands - 1);
  const std::size_t len = w.letters.size();
  if (need == 0) {
    return DiscPrefixSplit{0, {}, w.letters};
  }
  if (len < need) return std::nullopt;
  std::vector<bool> used(need + 1);
  for (std::size_t r = 0; r < len; ++r) {
    std::fill(used.begin(), used.end(), false);
    bool ok = true;
    for (std::size_t j = 0; j < need && ok; ++j) {
      const Letter k = w.letters[(r + j) % len];
      if (k < 0 || used[static_cast<std::size_t>(k)]) {
        ok = false;
      } else {
        used[static_cast<std::size_t>(k)] = true;
      }
    }
    if (!ok) continue;
    DiscPrefixSplit split;
    split.rotation = r;
    for (std::size_t j = 0; j < len; ++j) {
      (j < need ? split.prefix : split.tail).push_back(w.letters[(r + j) % len]);
    }
    return split;
  }
  return std::nullopt;
}

inline std::string strand_name(int strand) { return "s" + std::to_string(strand); }

/// Canonical Seifert surface of the closure collapsed to a graph: one vertex
/// per strand, one signed edge (i, i+1) per letter +-i, in word order.
inline SignedMultigraph induced_graph(const BraidWord& w) {
  GraphBuilder b;
  for (int s = 1; s <= w.strands; ++s) b.add_vertex(strand_name(s));
  for (Letter k : w.letters) {
    const int i = std::abs(k);
    b.add_edge(static_cast<VertexId>(i - 1), static_cast<VertexId>(i),
               k > 0 ? Sign::kPlus : Sign::kMinus);
  }
  b.set_components(closure_components(w));
  return b.build();
}

}  // namespace plumb
