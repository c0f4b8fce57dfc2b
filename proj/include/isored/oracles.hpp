#pragma once

#include <vector>

#include "isored/graph.hpp"
#include "isored/spectrum.hpp"

namespace isored {

/// Brute-force correctness anchors, deliberately independent of the main
/// algorithms and guarded by size limits.

/// Leibniz expansion over all permutations. Throws Size when n > 6.
RatFun det_leibniz(const RatMatrix& m);

/// Every simple path from i to j (and, when i == j, every cycle through i)
/// whose interior avoids `forbidden_interiors`, by exhaustive DFS over vertex
/// sequences. Loops are not used as path edges except the loop (i, i) itself.
/// Throws Size when g has more than 10 vertices.
std::vector<std::vector<int>> all_paths(const WeightedDigraph& g, int i, int j,
                                        const std::vector<int>& forbidden_interiors);

/// Dense complex eigensolve of a constant-weight adjacency matrix, with
/// multiplicities from 1e-6 clustering. Throws NonconstantWeight.
SpectralList eig_dense(const WeightedDigraph& g);

}  // namespace isored
