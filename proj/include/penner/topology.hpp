#pragma once

// Cell decompositions from framed intersection patterns: the intersection
// points are 0-cells, arcs of the curves 1-cells, complementary discs 2-cells.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "penner/graph.hpp"
#include "penner/penner.hpp"

namespace penner {

/// A 0/1 pattern together with a rotation system: the cyclic order of the
/// intersection points along every curve and the crossing orientation
/// (+1 or -1) at every point.
class FramedPattern {
 public:
  /// `alpha_orders[i]` lists the β curves met by α_i in cyclic order,
  /// `beta_orders[j]` the α curves met by β_j. `orientation(i, j)` matters
  /// only where X(i, j) = 1. Throws `invalid_parameter` for entries >= 2 or
  /// a curve with no intersections, `invalid_map` for inconsistent orders.
  FramedPattern(IntersectionPattern pattern, std::vector<std::vector<int>> alpha_orders,
                std::vector<std::vector<int>> beta_orders, Matrix<int> orientation);

  /// Ascending cyclic orders, every crossing +1.
  static FramedPattern standard(const IntersectionPattern& pattern);

  const IntersectionPattern& pattern() const { return pattern_; }
  const std::vector<std::vector<int>>& alpha_orders() const { return alpha_orders_; }
  const std::vector<std::vector<int>>& beta_orders() const { return beta_orders_; }
  const Matrix<int>& orientation() const { return orientation_; }

 private:
  IntersectionPattern pattern_;
  std::vector<std::vector<int>> alpha_orders_;
  std::vector<std::vector<int>> beta_orders_;
  Matrix<int> orientation_;
};

struct CellCounts {
  int zero_cells = 0;
  int one_cells = 0;
  int two_cells = 0;
  int euler_characteristic = 0;
  /// Empty when the map is disconnected or χ is odd.
  std::optional<int> genus;
};

/// Faces of the combinatorial map (cycles of rotation ∘ edge involution).
CellCounts trace_faces(const FramedPattern& f);

/// Calls `visit` with every framing of the pattern: every cyclic order of
/// every curve (rotations identified) and every choice of crossing signs.
void for_each_framing(const IntersectionPattern& p, const std::function<void(const FramedPattern&)>& visit);

/// Number of framings `for_each_framing` visits.
long long framing_count(const IntersectionPattern& p);

/// Two-cell count → number of framings with that count.
std::map<int, long long> face_distribution(const IntersectionPattern& p);

enum class TreeFamily { A, D };

/// A_{2g}, A_{2g+1}, D_{2g+1}, D_{2g+2} fill genus g. Throws `invalid_parameter`.
int tree_fill_genus(TreeFamily family, int n);

/// Parity of the number of 2-cells: χ = V - 2V + F must be even and V is the
/// number of graph edges. Returns 0 or 1. Throws `invalid_parameter` for
/// disconnected graphs.
int face_parity(const Graph& g);

/// Largest genus any framing can fill, from F >= 1 (odd) or F >= 2 (even).
int genus_bound_from_parity(const Graph& g);

/// A 2g-cycle fills genus at most g. Throws `invalid_parameter` for odd or short cycles.
int cycle_fill_genus_bound(int cycle_length);

/// Genus filled by a tree pattern (framing independent), from one framing.
int tree_genus(const Graph& tree);

}  // namespace penner
