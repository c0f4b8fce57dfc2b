#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isored/graph.hpp"
#include "isored/reduce.hpp"

namespace isored {

/// A weight-preserving isomorphism g -> h as a map from g-indices to
/// h-indices, or nullopt. Backtracking, pruned by per-vertex invariants
/// (loop weight, in/out weight multisets).
std::optional<std::vector<int>> isomorphic(const WeightedDigraph& g, const WeightedDigraph& h);

/// The witness of isomorphic() as a label map.
std::optional<std::map<std::string, std::string>> isomorphism_labels(const WeightedDigraph& g,
                                                                     const WeightedDigraph& h);

/// True when `perm` maps g's adjacency matrix onto h's exactly.
bool is_isomorphism(const WeightedDigraph& g, const WeightedDigraph& h, const std::vector<int>& perm);

/// R_S(G) isomorphic to R_T(H). Throws InvalidStructuralSet.
bool common_reduction(const WeightedDigraph& g, const std::vector<int>& s, const WeightedDigraph& h,
                      const std::vector<int>& t);

/// Membership of h in [g]: common reduction over the basic structural sets.
/// Throws EmptyBas.
bool bas_equivalent(const WeightedDigraph& g, const WeightedDigraph& h);

/// A rule picking a nonempty vertex subset of a graph in G_pi.
using TauRule = std::function<std::vector<int>(const WeightedDigraph&)>;

/// R_{tau(V)}[G]. Throws NotInGPi or EmptyTarget.
Reduction tau_reduce(const WeightedDigraph& g, const TauRule& rule);

/// Vertices of least out-degree (loops counted).
std::vector<int> min_out_degree_vertices(const WeightedDigraph& g);

/// Repeats G <- R_{V \ m(V)}[G], where m(V) is the set of least out-degree
/// vertices, until every vertex has the same out-degree. Throws NotInGPi.
Reduction tau_min_outdegree_reduce(const WeightedDigraph& g);

/// g ~ h under a deterministic reduction map (tau_reduce or the iterated
/// minimum-out-degree rule).
bool tau_equivalent(const WeightedDigraph& g, const WeightedDigraph& h,
                    const std::function<Reduction(const WeightedDigraph&)>& reducer);

}  // namespace isored
