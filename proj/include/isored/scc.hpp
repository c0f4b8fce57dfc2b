#pragma once

#include <string>
#include <vector>

#include "isored/graph.hpp"

namespace isored {

/// Strongly connected components in reverse topological order of the
/// condensation (sink components first), ties broken by least vertex index.
/// Listing vertices component by component puts M(G) in block lower
/// triangular form. Each component is sorted ascending.
struct SccPartition {
  std::vector<std::vector<int>> components;
  /// component_of[v] is the position of v's component in `components`.
  std::vector<int> component_of;
};

SccPartition scc_partition(const WeightedDigraph& g);

/// G^scc: same vertices, only edges whose ends share a component (loops
/// included).
WeightedDigraph scc_filter(const WeightedDigraph& g);

/// Vertex order obtained by concatenating the components.
std::vector<int> block_order(const SccPartition& p);

/// True when M(G) permuted by `order` has no entry above the diagonal blocks
/// given by p.
bool is_block_lower_triangular(const WeightedDigraph& g, const SccPartition& p);

struct SccCheck {
  bool ok = false;
  std::string report;
};

/// For each component C meeting s, R_{s cap C}(C) must be
/// exactly the subgraph of R_s(G) induced on one of its strongly connected
/// components, and those components must be exactly the sets s cap C.
SccCheck reduced_scc_check(const WeightedDigraph& g, const std::vector<int>& s);

}  // namespace isored
