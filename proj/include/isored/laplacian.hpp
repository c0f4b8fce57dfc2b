#pragma once

#include "isored/graph.hpp"

namespace isored {

/// Undirected (symmetric), unit-weighted and loop-free.
bool is_simple_graph(const WeightedDigraph& g);

/// L(G): loops d(v) and off-diagonal -1 on adjacent pairs. Throws NotSimple.
WeightedDigraph combinatorial_laplacian_graph(const WeightedDigraph& g);

enum class NormalizedMode {
  /// I - D^{-1} A, similar to the normalized Laplacian and exactly rational.
  ExactSimilar,
  /// -1/sqrt(d_i d_j) off the diagonal, each replaced by a continued-fraction
  /// convergent within 1e-12 (exact when d_i d_j is a square).
  Numeric,
};

/// The normalized Laplacian graph. Isolated vertices get diagonal 0.
/// Throws NotSimple.
WeightedDigraph normalized_laplacian_graph(const WeightedDigraph& g, NormalizedMode mode = NormalizedMode::ExactSimilar);

/// Weighted generalization: off-diagonal -M_ij, diagonal the row sum of M.
/// Throws HasLoops.
WeightedDigraph generalized_laplacian_graph(const WeightedDigraph& g);

/// Rational approximation of 1/sqrt(n) for n >= 1 within `tol` (exact for
/// perfect squares).
mpq_class inverse_sqrt_approximant(unsigned long n, double tol = 1e-12);

}  // namespace isored
