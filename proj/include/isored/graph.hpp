#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isored/ratfun.hpp"

namespace isored {

/// Dense square matrix over the weight field, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  int size() const { return n_; }
  RatFun& operator()(int i, int j) { return a_[idx(i, j)]; }
  const RatFun& operator()(int i, int j) const { return a_[idx(i, j)]; }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  /// The matrix minus lambda times the identity.
  RatMatrix minus_lambda_identity() const;
  RatMatrix transposed() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  int n_ = 0;
  std::vector<RatFun> a_;
};

struct Edge {
  int from;
  int to;
  RatFun weight;
};

/// Finite weighted digraph with loops and no parallel edges. Vertices carry
/// unique string labels and a dense index in insertion order; an absent edge
/// is the zero weight, and no zero weight is ever stored.
///
/// Instances are immutable; use GraphBuilder to assemble one.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  std::optional<int> find(std::string_view label) const;
  /// Index of a label; throws UnknownVertex.
  int index_of(std::string_view label) const;

  /// Weight of (i, j), the zero function when the edge is absent.
  const RatFun& weight(int i, int j) const { return w_[idx(i, j)]; }
  bool has_edge(int i, int j) const { return !weight(i, j).is_zero(); }
  bool has_loop(int i) const { return has_edge(i, i); }

  /// Out-neighbours in ascending index order, including i itself for a loop.
  const std::vector<int>& successors(int i) const { return succ_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& predecessors(int i) const { return pred_[static_cast<std::size_t>(i)]; }
  /// Out-degree counting a loop as one out-edge.
  int out_degree(int i) const { return static_cast<int>(successors(i).size()); }
  int in_degree(int i) const { return static_cast<int>(predecessors(i).size()); }

  std::size_t edge_count() const;
  /// Edges in row-major (from, to) order.
  std::vector<Edge> edges() const;

  /// Label-based equality: same label set, same labelled edges, identical
  /// canonical weights. Index order is irrelevant.
  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b);

 private:
  friend class GraphBuilder;
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * labels_.size() + static_cast<std::size_t>(j);
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<RatFun> w_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
};

class GraphBuilder {
 public:
  GraphBuilder() = default;
  /// Starts from a copy of g's vertices and edges.
  explicit GraphBuilder(const WeightedDigraph& g);

  /// Appends a vertex; throws DuplicateVertex if the label exists.
  int add_vertex(const std::string& label);
  /// Index of label, appending it when missing.
  int vertex(const std::string& label);
  std::optional<int> find(std::string_view label) const;
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  /// Overwrites the weight of (i, j); a zero weight removes the edge.
  GraphBuilder& set_edge(int i, int j, RatFun w);
  /// Adds w to the current weight of (i, j), dropping the edge on cancellation.
  GraphBuilder& add_to_edge(int i, int j, const RatFun& w);
  const RatFun& weight(int i, int j) const;

  WeightedDigraph build() const;

 private:
  void check(int i) const;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::map<std::pair<int, int>, RatFun> edges_;
};

struct UndirectedEdge {
  std::string a;
  std::string b;
  std::optional<RatFun> weight;  // defaults to 1
};

/// Orients each undirected edge both ways with equal weight. A self-loop
/// becomes a single directed loop. Throws DuplicateEdge for a repeated pair.
/// `vertices` fixes the index order; labels first seen in `edges` follow.
WeightedDigraph from_undirected(const std::vector<std::string>& vertices, const std::vector<UndirectedEdge>& edges);

struct RawEdge {
  std::string from;
  std::string to;
  RatFun weight;
};

/// Sums the weights of parallel edges; zero sums leave the edge absent.
WeightedDigraph merge_parallel(const std::vector<std::string>& vertices, const std::vector<RawEdge>& edges);

WeightedDigraph from_matrix(const std::vector<std::string>& labels, const RatMatrix& m);
RatMatrix adjacency_matrix(const WeightedDigraph& g);

WeightedDigraph loopless(const WeightedDigraph& g);
WeightedDigraph transpose(const WeightedDigraph& g);
/// Subgraph on the given vertex indices, in the order given.
WeightedDigraph induced_subgraph(const WeightedDigraph& g, const std::vector<int>& vertices);
/// Same vertices, edges filtered by keep(i, j).
template <class Pred>
WeightedDigraph filter_edges(const WeightedDigraph& g, Pred keep) {
  GraphBuilder b;
  for (const auto& l : g.labels()) b.add_vertex(l);
  for (const auto& e : g.edges())
    if (keep(e.from, e.to)) b.set_edge(e.from, e.to, e.weight);
  return b.build();
}

/// Indices of labels, throwing UnknownVertex. Duplicates are rejected with
/// DuplicateVertex.
std::vector<int> indices_of(const WeightedDigraph& g, const std::vector<std::string>& labels);
std::vector<std::string> labels_of(const WeightedDigraph& g, const std::vector<int>& indices);
/// Ascending list of indices not in `members`.
std::vector<int> complement(const WeightedDigraph& g, const std::vector<int>& members);

/// True when every weight is a constant.
bool is_constant_weighted(const WeightedDigraph& g);

}  // namespace isored
