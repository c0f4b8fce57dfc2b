#pragma once

#include <string>
#include <vector>

#include "isored/forbidden_set.hpp"
#include "isored/graph.hpp"
#include "isored/spectrum.hpp"

namespace isored {

/// Graph JSON:
///   { "vertices": ["w1", ...],
///     "edges": [ {"from": "w1", "to": "w2", "weight": "1"}, ... ],
///     "undirected": false, "unit_weights": false }
/// With "undirected" each listed pair is oriented both ways. With
/// "unit_weights" an omitted weight means 1. A repeated directed edge is an
/// error unless "merge_parallel" is true, in which case weights are summed.
/// Labels first seen in an edge are appended to the vertex list. Throws
/// ParseError for malformed JSON or weights, DuplicateVertex, DuplicateEdge.
WeightedDigraph parse_graph_json(const std::string& text);
WeightedDigraph read_graph_file(const std::string& path);

/// Canonical serialization: vertices in index order, edges row-major, weights
/// in normalized form. parse_graph_json(write_graph_json(g)) == g, and the
/// text is a fixed point of a read/write cycle.
std::string write_graph_json(const WeightedDigraph& g);

std::string write_spectrum_json(const SpectralList& sigma, const RatFun& char_det);
std::string write_forbidden_json(const ForbiddenSet& n);
/// {"graph": ..., "forbidden": ...}
std::string write_reduction_json(const WeightedDigraph& g, const ForbiddenSet& n);

/// A JSON array of arrays of labels, e.g. [["a","b","c"],["a","b"]].
std::vector<std::vector<std::string>> parse_set_sequence_json(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace isored
