#include "isored/reduce.hpp"

#include <algorithm>
#include <set>

#include "isored/error.hpp"
#include "isored/structural.hpp"

namespace isored {

namespace {

std::vector<int> sorted_unique(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Depth-first walk from `source` through complement vertices; emits each
// branch that closes on an S vertex. Successor lists are ascending, so the
// emitted order is lexicographic in the interior sequence with the direct edge
// first.
void walk_branches(const WeightedDigraph& g, const std::vector<char>& in_s, int source, int only_target,
                   std::vector<Branch>& out) {
  std::vector<int> path{source};
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> stack{{source, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& succ = g.successors(f.v);
    if (f.next == succ.size()) {
      stack.pop_back();
      path.pop_back();
      continue;
    }
    const int w = succ[f.next++];
    if (in_s[static_cast<std::size_t>(w)]) {
      if (only_target < 0 || w == only_target) {
        path.push_back(w);
        out.push_back({path});
        path.pop_back();
      }
      continue;
    }
    // Loops on complement vertices are not branch edges; acyclicity of the
    // complement rules out revisiting any other interior vertex.
    if (w == f.v) continue;
    path.push_back(w);
    stack.push_back({w, 0});
  }
}

std::vector<char> membership(const WeightedDigraph& g, const std::vector<int>& s) {
  std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

bool interior_less(const Branch& a, const Branch& b) {
  return std::lexicographical_compare(a.vertices.begin() + 1, a.vertices.end() - 1, b.vertices.begin() + 1,
                                      b.vertices.end() - 1);
}

WeightedDigraph reduce_by_branches(const WeightedDigraph& g, const std::vector<int>& s) {
  GraphBuilder b;
  std::vector<int> pos(static_cast<std::size_t>(g.size()), -1);
  for (int v : s) pos[static_cast<std::size_t>(v)] = b.add_vertex(g.label(v));
  const auto in_s = membership(g, s);
  for (int i : s) {
    std::vector<Branch> branches;
    walk_branches(g, in_s, i, -1, branches);
    for (const auto& br : branches)
      b.add_to_edge(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(br.target())],
                    branch_product(g, br));
  }
  return b.build();
}

}  // namespace

std::vector<Branch> enumerate_branches(const WeightedDigraph& g, const std::vector<int>& s, int i, int j) {
  require_structural_set(g, s);
  const auto in_s = membership(g, s);
  if (!in_s[static_cast<std::size_t>(i)] || !in_s[static_cast<std::size_t>(j)])
    throw Error(ErrorKind::InvalidStructuralSet, "branch endpoints must lie in the structural set");
  std::vector<Branch> out;
  walk_branches(g, in_s, i, j, out);
  std::stable_sort(out.begin(), out.end(), interior_less);
  return out;
}

std::vector<Branch> enumerate_all_branches(const WeightedDigraph& g, const std::vector<int>& s) {
  require_structural_set(g, s);
  const auto sorted = sorted_unique(s);
  const auto in_s = membership(g, sorted);
  std::vector<Branch> out;
  for (int i : sorted) {
    std::vector<Branch> from_i;
    walk_branches(g, in_s, i, -1, from_i);
    std::stable_sort(from_i.begin(), from_i.end(), [](const Branch& a, const Branch& b) {
      if (a.target() != b.target()) return a.target() < b.target();
      return interior_less(a, b);
    });
    out.insert(out.end(), from_i.begin(), from_i.end());
  }
  return out;
}

RatFun branch_product(const WeightedDigraph& g, const Branch& b) {
  const auto& v = b.vertices;
  RatFun p = g.weight(v[0], v[1]);
  const RatFun lam = RatFun::lambda();
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    p *= g.weight(v[k], v[k + 1]);
    p /= lam - g.weight(v[k], v[k]);
  }
  return p;
}

std::vector<RatFun> weight_sequence(const WeightedDigraph& g, const Branch& b) {
  const auto& v = b.vertices;
  std::vector<RatFun> out;
  out.reserve(2 * v.size() - 1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out.push_back(g.weight(v[k - 1], v[k]));
    out.push_back(g.weight(v[k], v[k]));
  }
  return out;
}

WeightedDigraph remove_vertex(const WeightedDigraph& g, int v) {
  if (v < 0 || v >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  if (g.size() == 1) throw Error(ErrorKind::InvalidStructuralSet, "cannot remove the only vertex");
  const RatFun& loop = g.weight(v, v);
  const RatFun denom = RatFun::lambda() - loop;
  if (denom.is_zero())
    throw Error(ErrorKind::InvalidStructuralSet, "loop on " + g.label(v) + " has weight lambda");
  const RatFun inv = denom.inverse();
  GraphBuilder b;
  std::vector<int> pos(static_cast<std::size_t>(g.size()), -1);
  for (int u = 0; u < g.size(); ++u)
    if (u != v) pos[static_cast<std::size_t>(u)] = b.add_vertex(g.label(u));
  for (const auto& e : g.edges())
    if (e.from != v && e.to != v)
      b.set_edge(pos[static_cast<std::size_t>(e.from)], pos[static_cast<std::size_t>(e.to)], e.weight);
  for (int i : g.predecessors(v)) {
    if (i == v) continue;
    const RatFun left = g.weight(i, v) * inv;
    for (int j : g.successors(v)) {
      if (j == v) continue;
      b.add_to_edge(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)], left * g.weight(v, j));
    }
  }
  return b.build();
}

WeightedDigraph reduce(const WeightedDigraph& g, const std::vector<int>& s, ReduceMethod method) {
  const auto sorted = sorted_unique(s);
  require_structural_set(g, sorted);
  if (method == ReduceMethod::Branches) return reduce_by_branches(g, sorted);
  // Complement loops never change while eliminating complement vertices (an
  // acyclic complement has no 2-cycles), so every step stays valid.
  std::vector<std::string> drop = labels_of(g, complement(g, sorted));
  WeightedDigraph cur = g;
  for (const auto& l : drop) cur = remove_vertex(cur, cur.index_of(l));
  return cur;
}

Reduction sequential_reduce(const WeightedDigraph& g, const std::vector<std::vector<std::string>>& sets) {
  Reduction r{g, ForbiddenSet()};
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const std::string step = "step " + std::to_string(k + 1) + ": ";
    std::vector<int> s;
    try {
      s = indices_of(r.graph, sets[k]);
    } catch (const Error& e) {
      throw Error(e.kind(), step + e.what());
    }
    const auto check = check_structural_set(r.graph, s);
    if (!check.ok) throw Error(ErrorKind::InvalidStructuralSet, step + "not a structural set: " + check.diagnostic);
    r.forbidden.unite(forbidden_set(r.graph, s));
    r.graph = reduce(r.graph, s);
  }
  return r;
}

Reduction unique_reduce_to(const WeightedDigraph& g, const std::vector<std::string>& target,
                           const std::optional<std::vector<std::string>>& order) {
  require_g_pi(g);
  if (target.empty()) throw Error(ErrorKind::EmptyTarget, "target vertex set is empty");
  const auto keep = indices_of(g, target);
  std::vector<std::string> drop = labels_of(g, complement(g, keep));
  if (order) {
    std::vector<std::string> a = *order;
    std::vector<std::string> b = drop;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw Error(ErrorKind::InvalidStructuralSet, "removal order must list exactly the vertices outside the target");
    drop = *order;
  }
  Reduction r{g, ForbiddenSet()};
  for (const auto& l : drop) {
    const int v = r.graph.index_of(l);
    r.forbidden.unite(forbidden_set(r.graph, complement(r.graph, {v})));
    r.graph = remove_vertex(r.graph, v);
  }
  return r;
}

}  // namespace isored
