#pragma once

// Mixed-sign Coxeter graphs: bilinear form, reflections, Coxeter
// transformations and the eigenvalue relations used for the minimal
// dilatation λ_g.

#include <optional>
#include <string>
#include <vector>

#include "penner/graph.hpp"
#include "penner/polynomial.hpp"
#include "penner/spectral.hpp"

namespace penner {

enum class SignMode { alternating, classical };

/// A simple graph with a sign (+1 or -1) on every vertex.
class MixedSignCoxeterGraph {
 public:
  /// Throws `invalid_parameter` unless `signs` has one ±1 entry per vertex.
  MixedSignCoxeterGraph(Graph graph, std::vector<int> signs);

  /// All signs +1.
  static MixedSignCoxeterGraph classical(Graph graph);
  /// Bipartition classes get opposite signs; the class holding the lowest
  /// vertex of each component is +. Throws `not_bipartite`.
  static MixedSignCoxeterGraph alternating(Graph graph);
  static MixedSignCoxeterGraph with_mode(Graph graph, SignMode mode);

  const Graph& graph() const { return graph_; }
  const std::vector<int>& signs() const { return signs_; }
  int sign(int v) const { return signs_[static_cast<std::size_t>(v)]; }
  int vertex_count() const { return graph_.vertex_count(); }

  MixedSignCoxeterGraph flipped() const;

 private:
  Graph graph_;
  std::vector<int> signs_;
};

/// A permutation of the vertices: the order in which reflections are applied.
class ReflectionOrder {
 public:
  /// Throws `invalid_parameter` unless `order` is a permutation of 0..n-1.
  ReflectionOrder(std::vector<int> order, int n);
  static ReflectionOrder identity(int n);

  const std::vector<int>& indices() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  int operator[](int k) const { return order_[static_cast<std::size_t>(k)]; }

 private:
  std::vector<int> order_;
};

/// B(v_i, v_i) = -2·sign(i), B(v_i, v_j) = a_ij.
IntegerMatrix bilinear_form(const MixedSignCoxeterGraph& g);

/// Matrix of v ↦ v - 2·B(v_i, v)/B(v_i, v_i)·v_i; column j is the image of v_j.
IntegerMatrix reflection(const MixedSignCoxeterGraph& g, int i);

/// Product of all reflections; `order[0]` is applied first (rightmost factor).
IntegerMatrix coxeter_transformation(const MixedSignCoxeterGraph& g, const ReflectionOrder& order);

/// The negative-sign class first, then the other, ascending inside each class.
/// For classical signs the class of vertex 0 goes second. Throws `not_bipartite`.
ReflectionOrder bipartite_order(const MixedSignCoxeterGraph& g);

/// -coxeter_transformation(g, order).
IntegerMatrix homological_action(const MixedSignCoxeterGraph& g, const ReflectionOrder& order);

struct CoxeterSpectrum {
  IntPolynomial coxeter_char_poly;
  IntPolynomial homological_char_poly;
  /// Largest modulus among eigenvalues of the homological action.
  double spectral_radius = 0.0;
  /// Present when the radius is certified: either the homological action is
  /// nonnegative (Perron-Frobenius) or the dominant eigenvalue is a real root.
  std::optional<RootApproximation> certified;
  bool homological_nonnegative = false;
};

CoxeterSpectrum coxeter_spectrum(const MixedSignCoxeterGraph& g, const ReflectionOrder& order,
                                 double tol = kDefaultTolerance);

/// λ with λ + 1/λ = 4 - 2·re, for re = Re(μ) of a unit-circle eigenvalue μ.
double classical_to_alternating(double mu_real_part);

/// Alexander polynomial of the torus knot T(2, 2g+1).
IntPolynomial alexander_torus_2_odd(int g);

struct AlexanderRoute {
  /// Smallest real part among the (4g+2)-th roots of unity that are roots of Δ.
  double min_real_part = 0.0;
  int roots_found = 0;
  double lambda = 0.0;
};

AlexanderRoute alexander_route(int g);

double lambda_closed_form(int g);

enum class DynkinFamily { A, D, E6, E7, E8, affine_D, affine_E6, affine_E7, affine_E8, cycle, enriched_6_cycle };

struct DynkinType {
  DynkinFamily family;
  /// Index for A, D, affine_D (the n of D̃_n) and cycle (the length); the
  /// vertex count otherwise.
  int n;

  bool is_affine() const;
  std::string name() const;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// The named shape. A_n is a path, D_n a path of n-1 with a leaf on the
/// second vertex, E_k a path of k-1 with a leaf on the third vertex, D̃_n
/// a D_n with a second leaf at the far end, Ẽ_6/Ẽ_7/Ẽ_8 have arm lengths
/// (2,2,2), (1,3,3), (1,2,5), and the enriched 6-cycle is a 6-cycle with
/// one pendant vertex. Throws `invalid_parameter` for out-of-range n.
Graph dynkin_shape(DynkinFamily family, int n = 0);
MixedSignCoxeterGraph dynkin_graph(DynkinFamily family, int n = 0, SignMode mode = SignMode::alternating);

/// Recognises the shapes above up to isomorphism.
std::optional<DynkinType> identify_dynkin(const Graph& g);

/// 3 + 2√2 for alternating affine diagrams, after checking that the homological
/// action of the bipartite order has that spectral radius. Throws `not_affine`.
double affine_alternating_dilatation(const MixedSignCoxeterGraph& g, double tol = kDefaultTolerance);

struct UnitCircleReport {
  /// max | |z| - 1 | over the distinct complex eigenvalues.
  double max_deviation = 0.0;
  bool minus_one_is_eigenvalue = false;
  std::vector<std::complex<double>> eigenvalues;
};

/// Eigenvalues of the classical (all-plus) Coxeter transformation of g.
UnitCircleReport classical_unit_circle_check(const Graph& g);

}  // namespace penner
