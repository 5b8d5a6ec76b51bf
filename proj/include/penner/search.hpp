#pragma once

// Pruning of intersection patterns, the classification of the survivors and
// the certified minimal-dilatation computation.

#include <optional>
#include <string>
#include <vector>

#include "penner/coxeter.hpp"
#include "penner/penner.hpp"

namespace penner {

/// Vertex map h → g (`map[v]` is the image of v) of a subgraph embedding:
/// edges of h go to edges of g, non-edges are unconstrained.
using Embedding = std::vector<int>;

/// Backtracking search; h should be connected. Empty if there is none.
std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h);

enum class ExclusionReason { double_intersection, affine_subgraph, four_cycle_subgraph };
enum class SurvivorType { A_n, D_n, E6, E7, E8, even_cycle, enriched_6_cycle };

std::string to_string(ExclusionReason r);
std::string to_string(SurvivorType t);

struct AdmissibilityReport {
  std::optional<ExclusionReason> excluded_by;
  std::optional<SurvivorType> surviving_type;
  /// The forbidden subgraph that was found, or the survivor's exact shape.
  std::optional<DynkinType> shape;
  /// Embedding of the forbidden subgraph into the input.
  Embedding witness;
  /// Set for double intersections: the offending pair, 0-based.
  std::optional<std::pair<int, int>> crossing;

  bool excluded() const { return excluded_by.has_value(); }
};

/// Throws `invalid_parameter` for a disconnected graph, `not_bipartite`, and
/// `unclassified_survivor` if a graph passes every exclusion test without
/// matching one of the survivor families.
AdmissibilityReport classify(const Graph& g);

/// Like classify(g) on the intersection graph, but a pair of curves meeting
/// twice or more is excluded first.
AdmissibilityReport classify(const IntersectionPattern& p);

enum class SearchMode { closed_form, certified };

/// One row of the audit trail.
struct CandidateResult {
  DynkinType type;
  Graph graph;
  /// How the candidate was admitted, e.g. "tree genus 3" or "framings reach genus 2".
  std::string genus_evidence;
  TwistWord word;
  RootApproximation value;
  long long words_evaluated = 0;
};

struct MinimalDilatation {
  int genus = 0;
  SearchMode mode = SearchMode::closed_form;
  double value = 0.0;
  /// Certified spectral radius of the witness product (certified mode).
  std::optional<RootApproximation> certified;
  DynkinType witness{DynkinFamily::A, 2};
  IntersectionPattern witness_pattern{Matrix<std::int64_t>::Ones(1, 1)};
  TwistWord witness_word;
  /// Every candidate that was evaluated, in the order it was generated.
  std::vector<CandidateResult> audit;
  /// Candidates handled by an argument rather than a computation.
  std::vector<std::string> notes;
};

/// Genera reachable by some framing of the pattern of g.
std::vector<int> fillable_genera(const Graph& g);

/// Minimal dilatation of Penner mapping classes on the closed genus-g surface.
/// Throws `invalid_genus` for g < 1.
MinimalDilatation minimal_dilatation(int genus, SearchMode mode = SearchMode::certified,
                                     double tol = kDefaultTolerance);

struct Table1Row {
  DynkinType type;
  /// Genus filled; an upper bound when `genus_is_bound`.
  int genus = 0;
  bool genus_is_bound = false;
  RootApproximation dilatation;
  TwistWord word;
  /// Lower bound from a subgraph (the E7 inside the enriched 6-cycle).
  std::optional<RootApproximation> lower_bound;
  std::optional<DynkinType> lower_bound_from;
};

/// A6, A8, E6, E7, E8 and the enriched 6-cycle.
std::vector<Table1Row> table1(double tol = kDefaultTolerance);

}  // namespace penner
