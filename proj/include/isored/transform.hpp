#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isored/graph.hpp"
#include "isored/reduce.hpp"

namespace isored {

struct DecompositionEntry {
  std::string source;
  std::string target;
  std::vector<RatFun> omega;
};

/// D_S(G): one (source, target, Omega) entry per branch, multiplicities kept,
/// in the order of enumerate_all_branches.
using BranchDecomposition = std::vector<DecompositionEntry>;

BranchDecomposition branch_decomposition(const WeightedDigraph& g, const std::vector<int>& s);

/// Multiset equality of D_S(G) and D_T(H) after relabelling S by rho, which
/// must be a bijection from the labels of s onto the labels of t.
bool common_decomposition(const WeightedDigraph& g, const std::vector<int>& s, const WeightedDigraph& h,
                          const std::vector<int>& t, const std::map<std::string, std::string>& rho);

/// Branch expansion: keeps the S vertices with their loops and rebuilds every
/// branch with its own fresh interior vertices, named
/// "<src>~<dst>~<k>~<pos>" (k counts branches of the pair from 1, pos counts
/// interior positions from 1).
WeightedDigraph expand(const WeightedDigraph& g, const std::vector<int>& s);

/// Replaces the edge (i, k) by i -> j -> k through a fresh vertex j carrying
/// loop w_jj. Requires omega(e_ik) = w_ij * w_jk / (lambda - w_jj) exactly,
/// else throws FactorizationMismatch. The new label defaults to
/// "<i>~<k>~bisect", suffixed with a counter if taken.
WeightedDigraph loop_bisect(const WeightedDigraph& g, int i, int k, const RatFun& w_ij, const RatFun& w_jj,
                            const RatFun& w_jk, const std::optional<std::string>& new_label = std::nullopt);

/// Drops every edge and vertex that lies on no branch with respect to s,
/// keeping all of s. Loops of retained interior vertices are retained.
WeightedDigraph prune_off_branch(const WeightedDigraph& g, const std::vector<int>& s);

}  // namespace isored
