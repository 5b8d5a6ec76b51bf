#pragma once

// Plain-text input documents for the command line tool.
//
//   # comments run to the end of the line
//   format 1
//   pattern 2 2          # n m, then n rows of m nonnegative integers
//   1 1
//   0 1
//   word a1 b1 a2 b2     # signs optional: a1+ b1-
//   order a1 b2 b1       # cyclic order of the β curves met by α_1
//   crossing a1 b2 -     # crossing orientation, + by default
//   graph 3              # or a Coxeter graph: vertex count, then edges
//   edge 1 2
//   signs + - +
//   reflections 2 1 3    # custom reflection order
//
// Indices are 1-based in the file and 0-based in memory.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "penner/graph.hpp"
#include "penner/penner.hpp"
#include "penner/topology.hpp"

namespace penner {

struct PatternDocument {
  int format = 1;
  std::optional<IntersectionPattern> pattern;
  std::optional<TwistWord> word;
  /// Partners of α_i / β_j in cyclic order, for the curves that have an `order` line.
  std::map<int, std::vector<int>> alpha_orders;
  std::map<int, std::vector<int>> beta_orders;
  /// (i, j) → ±1 for the crossings that have a `crossing` line.
  std::map<std::pair<int, int>, int> crossings;
  std::optional<Graph> graph;
  std::optional<std::vector<int>> signs;
  std::optional<std::vector<int>> reflections;

  bool has_framing() const { return !alpha_orders.empty() || !beta_orders.empty() || !crossings.empty(); }
  friend bool operator==(const PatternDocument&, const PatternDocument&) = default;
};

/// Throws `invalid_document` with the offending line number.
PatternDocument parse_document(std::string_view text);
PatternDocument read_document(const std::string& path);

/// Canonical text; parse_document(to_text(d)) == d.
std::string to_text(const PatternDocument& d);

/// "a1", "b2-" and so on. A missing sign means the usual one (α +, β -).
/// Throws `invalid_document`.
Letter parse_letter(std::string_view token);
TwistWord parse_word(std::string_view text);

/// The document's framing, with ascending orders and + crossings where
/// nothing is given. Throws `invalid_document` without a pattern and
/// `invalid_map` / `invalid_parameter` like FramedPattern.
FramedPattern framing_of(const PatternDocument& d);

}  // namespace penner
