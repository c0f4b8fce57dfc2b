#pragma once

#include <functional>
#include <string>
#include <vector>

#include "isored/graph.hpp"

namespace isored {

/// Membership predicate for a unital subring of the weight field.
using SubringTest = std::function<bool(const RatFun&)>;

enum class Subring {
  Integers,          // "int"
  GaussianIntegers,  // "gauss-int"
  Constants,         // "const"
  Unit,              // "unit": sums of 1, i.e. nonnegative integers
};

SubringTest subring_test(Subring s);
/// Parses "int", "gauss-int", "const" or "unit"; throws ParseError.
Subring parse_subring(const std::string& name);

struct WeightsetResult {
  WeightedDigraph graph;
  /// Basic vertices of the input, ascending.
  std::vector<int> bas;
  /// Longest branch length into each basic vertex (1 when none enters).
  std::vector<int> longest;
  int expected_vertices = 0;
  /// Attachments that landed on an existing edge and were summed.
  std::vector<std::string> merged;
};

/// Builds a graph in [g] with weights in the subring and
/// m + sum_i (l_i - 1) vertices: each basic vertex v_i keeps one longest
/// incoming branch gamma^i, rebuilt on fresh vertices "<v_i>~gamma~<pos>" with
/// the full weight product on its first edge and 1 elsewhere; every other
/// branch of length n from v_j becomes one edge from v_j to gamma^i(l_i + 1 - n)
/// carrying its weight product. Throws EmptyBas or OutsideSubring.
WeightsetResult weightset_construct(const WeightedDigraph& g, const SubringTest& in_subring);
WeightedDigraph weightset_reduce(const WeightedDigraph& g, const SubringTest& in_subring);

/// Expected vertex count m + sum_i (l_i - 1) for g. Throws EmptyBas.
int weightset_vertex_count(const WeightedDigraph& g);

struct WeightsetCheck {
  bool ok = false;
  bool count_ok = false;
  bool subring_ok = false;
  /// R_bas(g)(g) and R_bas(reduced)(reduced) are isomorphic, i.e. reduced is in [g].
  bool equivalent = false;
  /// R_bas(g)(g) is isomorphic to the reduction of `reduced` over the vertices
  /// carrying the labels of bas(g). This can hold while `equivalent` fails: an
  /// edge of g on no branch still counts towards out-degrees in bas(g) but has
  /// no counterpart in the construction.
  bool branch_equivalent = false;
  int expected_vertices = 0;
  int actual_vertices = 0;
  std::string report;
};

/// Checks the vertex count, subring membership of every weight of `reduced`,
/// and that R_bas(g) and R_bas(reduced) are isomorphic.
WeightsetCheck verify_weightset(const WeightedDigraph& g, const WeightedDigraph& reduced, const SubringTest& in_subring);

}  // namespace isored
