#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isored/forbidden_set.hpp"
#include "isored/graph.hpp"

namespace isored {

/// A path or cycle v_1, ..., v_m (m >= 2) whose endpoints lie in S and whose
/// interior vertices do not.
struct Branch {
  std::vector<int> vertices;

  int source() const { return vertices.front(); }
  int target() const { return vertices.back(); }
  friend bool operator==(const Branch&, const Branch&) = default;
};

/// All branches from i to j with respect to s, ordered lexicographically by
/// their interior vertex indices (the direct edge, if any, comes first).
/// Throws InvalidStructuralSet when s is not structural.
std::vector<Branch> enumerate_branches(const WeightedDigraph& g, const std::vector<int>& s, int i, int j);
/// Every branch for s, grouped by (source, target) in row-major order of
/// S-indices and ordered within a group as enumerate_branches does.
std::vector<Branch> enumerate_all_branches(const WeightedDigraph& g, const std::vector<int>& s);

/// omega(e_12) * prod_{k=2}^{m-1} omega(e_{k,k+1}) / (lambda - omega(e_kk)).
RatFun branch_product(const WeightedDigraph& g, const Branch& b);

/// Omega(b): omega(e_11), omega(e_12), omega(e_22), ..., omega(e_mm), with
/// absent loops as zero. Length 2m - 1.
std::vector<RatFun> weight_sequence(const WeightedDigraph& g, const Branch& b);

enum class ReduceMethod {
  /// Sum of branch products over enumerated branches.
  Branches,
  /// Successive single-vertex elimination over the complement, ascending.
  Elimination,
};

/// R_S(G): the graph on S (kept in ascending index order of g) whose (i, j)
/// weight is the sum of branch products over branches from i to j. Edges
/// whose sum cancels to zero are absent. Throws InvalidStructuralSet.
WeightedDigraph reduce(const WeightedDigraph& g, const std::vector<int>& s,
                       ReduceMethod method = ReduceMethod::Elimination);

/// R_{V \ {v}}(G) by the closed form
///   nu_ij = omega_ij + omega_iv * omega_vj / (lambda - omega_vv).
/// Throws InvalidStructuralSet when omega_vv = lambda or v is the only vertex.
WeightedDigraph remove_vertex(const WeightedDigraph& g, int v);

/// A reduced graph together with the accumulated forbidden set.
struct Reduction {
  WeightedDigraph graph;
  ForbiddenSet forbidden;
};

/// R(G; S_1, ..., S_m), with N accumulated step by step. Sets are given by
/// label because indices change between steps. A failing step raises
/// InvalidStructuralSet (or UnknownVertex) naming the step, counted from 1.
Reduction sequential_reduce(const WeightedDigraph& g, const std::vector<std::vector<std::string>>& sets);

/// R_V[G] for G in G_pi: removes every vertex outside `target` one at a time.
/// `order` lists the removed labels in sequence; by default ascending index.
/// Throws NotInGPi, EmptyTarget, UnknownVertex, or InvalidStructuralSet
/// (when `order` is not a permutation of the complement).
Reduction unique_reduce_to(const WeightedDigraph& g, const std::vector<std::string>& target,
                           const std::optional<std::vector<std::string>>& order = std::nullopt);

}  // namespace isored
