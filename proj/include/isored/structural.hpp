#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isored/forbidden_set.hpp"
#include "isored/graph.hpp"

namespace isored {

struct StructuralCheck {
  bool ok = false;
  /// Human-readable reason on failure, naming the offending cycle or loop.
  std::string diagnostic;
  /// A cycle inside the complement of S in l(G), when that is the failure.
  std::vector<int> cycle;
  /// A complement vertex whose loop weight is lambda.
  std::optional<int> lambda_loop;
};

/// Tests S (vertex indices) against the structural-set definition: S is
/// nonempty, its complement induces an acyclic subgraph of l(G), and no
/// complement loop equals lambda. Throws UnknownVertex for a bad index.
StructuralCheck check_structural_set(const WeightedDigraph& g, const std::vector<int>& s);
bool is_structural_set(const WeightedDigraph& g, const std::vector<int>& s);
/// Throws InvalidStructuralSet carrying the diagnostic.
void require_structural_set(const WeightedDigraph& g, const std::vector<int>& s);

/// N(G;S): lambda-roots of q (poles of the loop) and of lambda*q - p for each
/// complement loop p/q; an absent loop contributes {0}.
ForbiddenSet forbidden_set(const WeightedDigraph& g, const std::vector<int>& s);

/// D_out(G) = {v : out-degree(v) >= 2}, loops counted as out-edges.
std::vector<int> high_out_degree_vertices(const WeightedDigraph& g);
/// bas(G): D_out(G) together with the vertices of every simple cycle that
/// avoids D_out. Sorted ascending. Throws EmptyBas when the result is empty.
std::vector<int> basic_structural_set(const WeightedDigraph& g);

/// Every present weight has pi <= 0.
bool is_g_pi(const WeightedDigraph& g);
void require_g_pi(const WeightedDigraph& g);

/// All simple cycles (as vertex sequences, smallest index first) of the
/// subgraph of l(G) induced by `allowed`. Exponential; for oracles only.
std::vector<std::vector<int>> simple_cycles_bruteforce(const WeightedDigraph& g, const std::vector<int>& allowed);

}  // namespace isored
