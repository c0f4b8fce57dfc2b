#include "isored/isoequiv.hpp"

#include <algorithm>

#include "isored/error.hpp"
#include "isored/structural.hpp"
#include "isored/weight_format.hpp"

namespace isored {

namespace {

// Invariant that an isomorphism must preserve for each vertex.
std::string signature(const WeightedDigraph& g, int v) {
  std::vector<std::string> out, in;
  for (int w : g.successors(v))
    if (w != v) out.push_back(format_weight(g.weight(v, w)));
  for (int w : g.predecessors(v))
    if (w != v) in.push_back(format_weight(g.weight(w, v)));
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  std::string s = "loop:" + format_weight(g.weight(v, v)) + "|out:";
  for (const auto& x : out) s += x + ";";
  s += "|in:";
  for (const auto& x : in) s += x + ";";
  return s;
}

}  // namespace

bool is_isomorphism(const WeightedDigraph& g, const WeightedDigraph& h, const std::vector<int>& perm) {
  if (g.size() != h.size() || static_cast<int>(perm.size()) != g.size()) return false;
  std::vector<char> hit(static_cast<std::size_t>(h.size()), 0);
  for (int p : perm) {
    if (p < 0 || p >= h.size() || hit[static_cast<std::size_t>(p)]) return false;
    hit[static_cast<std::size_t>(p)] = 1;
  }
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (!(g.weight(i, j) == h.weight(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])))
        return false;
  return true;
}

std::optional<std::vector<int>> isomorphic(const WeightedDigraph& g, const WeightedDigraph& h) {
  const int n = g.size();
  if (n != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<std::string> sg(static_cast<std::size_t>(n)), sh(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    sg[static_cast<std::size_t>(v)] = signature(g, v);
    sh[static_cast<std::size_t>(v)] = signature(h, v);
  }
  {
    auto a = sg, b = sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (sg[static_cast<std::size_t>(v)] == sh[static_cast<std::size_t>(w)]) cand[static_cast<std::size_t>(v)].push_back(w);
  // Most constrained vertices first.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cand[static_cast<std::size_t>(a)].size() < cand[static_cast<std::size_t>(b)].size();
  });
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> placed;

  auto consistent = [&](int v, int w) {
    for (int u : placed) {
      const int x = map[static_cast<std::size_t>(u)];
      if (!(g.weight(v, u) == h.weight(w, x)) || !(g.weight(u, v) == h.weight(x, w))) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    if (k == order.size()) return true;
    const int v = order[k];
    for (int w : cand[static_cast<std::size_t>(v)]) {
      if (used[static_cast<std::size_t>(w)] || !consistent(v, w)) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      placed.push_back(v);
      if (search(k + 1)) return true;
      placed.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return map;
}

std::optional<std::map<std::string, std::string>> isomorphism_labels(const WeightedDigraph& g,
                                                                     const WeightedDigraph& h) {
  auto perm = isomorphic(g, h);
  if (!perm) return std::nullopt;
  std::map<std::string, std::string> out;
  for (int v = 0; v < g.size(); ++v) out[g.label(v)] = h.label((*perm)[static_cast<std::size_t>(v)]);
  return out;
}

bool common_reduction(const WeightedDigraph& g, const std::vector<int>& s, const WeightedDigraph& h,
                      const std::vector<int>& t) {
  return isomorphic(reduce(g, s), reduce(h, t)).has_value();
}

bool bas_equivalent(const WeightedDigraph& g, const WeightedDigraph& h) {
  return common_reduction(g, basic_structural_set(g), h, basic_structural_set(h));
}

Reduction tau_reduce(const WeightedDigraph& g, const TauRule& rule) {
  require_g_pi(g);
  return unique_reduce_to(g, labels_of(g, rule(g)));
}

std::vector<int> min_out_degree_vertices(const WeightedDigraph& g) {
  std::vector<int> out;
  int best = -1;
  for (int v = 0; v < g.size(); ++v) {
    const int d = g.out_degree(v);
    if (best < 0 || d < best) {
      best = d;
      out.clear();
    }
    if (d == best) out.push_back(v);
  }
  return out;
}

Reduction tau_min_outdegree_reduce(const WeightedDigraph& g) {
  require_g_pi(g);
  Reduction r{g, ForbiddenSet()};
  for (;;) {
    const auto m = min_out_degree_vertices(r.graph);
    if (static_cast<int>(m.size()) == r.graph.size()) return r;
    Reduction step = unique_reduce_to(r.graph, labels_of(r.graph, complement(r.graph, m)));
    r.graph = std::move(step.graph);
    r.forbidden.unite(step.forbidden);
  }
}

bool tau_equivalent(const WeightedDigraph& g, const WeightedDigraph& h,
                    const std::function<Reduction(const WeightedDigraph&)>& reducer) {
  return isomorphic(reducer(g).graph, reducer(h).graph).has_value();
}

}  // namespace isored
