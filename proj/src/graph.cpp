#include "isored/graph.hpp"

#include <algorithm>
#include <set>

#include "isored/error.hpp"

namespace isored {

RatMatrix RatMatrix::minus_lambda_identity() const {
  RatMatrix out = *this;
  const RatFun lam = RatFun::lambda();
  for (int i = 0; i < n_; ++i) out(i, i) -= lam;
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::optional<int> WeightedDigraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int WeightedDigraph::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(label) + "'");
}

std::size_t WeightedDigraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : succ_) n += s.size();
  return n;
}

std::vector<Edge> WeightedDigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int i = 0; i < size(); ++i)
    for (int j : successors(i)) out.push_back({i, j, weight(i, j)});
  return out;
}

bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    auto j = b.find(a.label(i));
    if (!j) return false;
    map[static_cast<std::size_t>(i)] = *j;
  }
  for (int i = 0; i < a.size(); ++i) {
    for (int j : a.successors(i)) {
      if (!(a.weight(i, j) == b.weight(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)])))
        return false;
    }
  }
  return true;
}

GraphBuilder::GraphBuilder(const WeightedDigraph& g) {
  for (const auto& l : g.labels()) add_vertex(l);
  for (const auto& e : g.edges()) edges_.emplace(std::make_pair(e.from, e.to), e.weight);
}

int GraphBuilder::add_vertex(const std::string& label) {
  if (index_.count(label)) throw Error(ErrorKind::DuplicateVertex, "duplicate vertex '" + label + "'");
  const int i = size();
  labels_.push_back(label);
  index_.emplace(label, i);
  return i;
}

int GraphBuilder::vertex(const std::string& label) {
  if (auto i = find(label)) return *i;
  return add_vertex(label);
}

std::optional<int> GraphBuilder::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void GraphBuilder::check(int i) const {
  if (i < 0 || i >= size()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(i) + " out of range");
}

GraphBuilder& GraphBuilder::set_edge(int i, int j, RatFun w) {
  check(i);
  check(j);
  if (w.is_zero()) {
    edges_.erase({i, j});
  } else {
    edges_[{i, j}] = std::move(w);
  }
  return *this;
}

GraphBuilder& GraphBuilder::add_to_edge(int i, int j, const RatFun& w) {
  check(i);
  check(j);
  if (w.is_zero()) return *this;
  auto it = edges_.find({i, j});
  if (it == edges_.end()) {
    edges_.emplace(std::make_pair(i, j), w);
    return *this;
  }
  it->second += w;
  if (it->second.is_zero()) edges_.erase(it);
  return *this;
}

const RatFun& GraphBuilder::weight(int i, int j) const {
  static const RatFun zero;
  auto it = edges_.find({i, j});
  return it == edges_.end() ? zero : it->second;
}

WeightedDigraph GraphBuilder::build() const {
  WeightedDigraph g;
  g.labels_ = labels_;
  g.index_ = index_;
  const auto n = labels_.size();
  g.w_.assign(n * n, RatFun());
  g.succ_.assign(n, {});
  g.pred_.assign(n, {});
  // std::map iterates in (from, to) order, so successor lists come out sorted.
  for (const auto& [key, w] : edges_) {
    g.w_[g.idx(key.first, key.second)] = w;
    g.succ_[static_cast<std::size_t>(key.first)].push_back(key.second);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (int j : g.succ_[i]) g.pred_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
  return g;
}

WeightedDigraph from_undirected(const std::vector<std::string>& vertices, const std::vector<UndirectedEdge>& edges) {
  GraphBuilder b;
  for (const auto& v : vertices) b.add_vertex(v);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    const int a = b.vertex(e.a);
    const int c = b.vertex(e.b);
    if (!seen.insert({std::min(a, c), std::max(a, c)}).second)
      throw Error(ErrorKind::DuplicateEdge, "duplicate undirected edge {" + e.a + "," + e.b + "}");
    const RatFun w = e.weight.value_or(RatFun(1));
    b.set_edge(a, c, w);
    b.set_edge(c, a, w);
  }
  return b.build();
}

WeightedDigraph merge_parallel(const std::vector<std::string>& vertices, const std::vector<RawEdge>& edges) {
  GraphBuilder b;
  for (const auto& v : vertices) b.add_vertex(v);
  for (const auto& e : edges) {
    const int i = b.vertex(e.from);
    const int j = b.vertex(e.to);
    b.add_to_edge(i, j, e.weight);
  }
  return b.build();
}

WeightedDigraph from_matrix(const std::vector<std::string>& labels, const RatMatrix& m) {
  if (static_cast<int>(labels.size()) != m.size())
    throw Error(ErrorKind::Size, "label count does not match matrix size");
  GraphBuilder b;
  for (const auto& l : labels) b.add_vertex(l);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) b.set_edge(i, j, m(i, j));
  return b.build();
}

RatMatrix adjacency_matrix(const WeightedDigraph& g) {
  RatMatrix m(g.size());
  for (const auto& e : g.edges()) m(e.from, e.to) = e.weight;
  return m;
}

WeightedDigraph loopless(const WeightedDigraph& g) {
  return filter_edges(g, [](int i, int j) { return i != j; });
}

WeightedDigraph transpose(const WeightedDigraph& g) {
  GraphBuilder b;
  for (const auto& l : g.labels()) b.add_vertex(l);
  for (const auto& e : g.edges()) b.set_edge(e.to, e.from, e.weight);
  return b.build();
}

WeightedDigraph induced_subgraph(const WeightedDigraph& g, const std::vector<int>& vertices) {
  GraphBuilder b;
  for (int v : vertices) b.add_vertex(g.label(v));
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t c = 0; c < vertices.size(); ++c) {
      const RatFun& w = g.weight(vertices[a], vertices[c]);
      if (!w.is_zero()) b.set_edge(static_cast<int>(a), static_cast<int>(c), w);
    }
  return b.build();
}

std::vector<int> indices_of(const WeightedDigraph& g, const std::vector<std::string>& labels) {
  std::vector<int> out;
  std::set<int> seen;
  for (const auto& l : labels) {
    const int i = g.index_of(l);
    if (!seen.insert(i).second) throw Error(ErrorKind::DuplicateVertex, "vertex '" + l + "' listed twice");
    out.push_back(i);
  }
  return out;
}

std::vector<std::string> labels_of(const WeightedDigraph& g, const std::vector<int>& indices) {
  std::vector<std::string> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(g.label(i));
  return out;
}

std::vector<int> complement(const WeightedDigraph& g, const std::vector<int>& members) {
  std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
  for (int m : members) in[static_cast<std::size_t>(m)] = 1;
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i)
    if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

bool is_constant_weighted(const WeightedDigraph& g) {
  for (const auto& e : g.edges())
    if (!e.weight.is_constant()) return false;
  return true;
}

}  // namespace isored
