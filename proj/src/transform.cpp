#include "isored/transform.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "isored/error.hpp"
#include "isored/structural.hpp"

namespace isored {

namespace {

int compare_omega(const std::vector<RatFun>& a, const std::vector<RatFun>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (int c = compare(a[k], b[k]); c != 0) return c;
  return 0;
}

bool entry_less(const DecompositionEntry& a, const DecompositionEntry& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  return compare_omega(a.omega, b.omega) < 0;
}

bool entry_equal(const DecompositionEntry& a, const DecompositionEntry& b) {
  return a.source == b.source && a.target == b.target && compare_omega(a.omega, b.omega) == 0;
}

std::string fresh_label(const GraphBuilder& b, const std::string& base) {
  if (!b.find(base)) return base;
  for (int k = 2;; ++k) {
    std::string l = base + "~" + std::to_string(k);
    if (!b.find(l)) return l;
  }
}

}  // namespace

BranchDecomposition branch_decomposition(const WeightedDigraph& g, const std::vector<int>& s) {
  BranchDecomposition out;
  for (const auto& br : enumerate_all_branches(g, s))
    out.push_back({g.label(br.source()), g.label(br.target()), weight_sequence(g, br)});
  return out;
}

bool common_decomposition(const WeightedDigraph& g, const std::vector<int>& s, const WeightedDigraph& h,
                          const std::vector<int>& t, const std::map<std::string, std::string>& rho) {
  if (s.size() != t.size() || rho.size() != s.size()) return false;
  std::vector<std::string> image;
  for (int v : s) {
    auto it = rho.find(g.label(v));
    if (it == rho.end()) return false;
    image.push_back(it->second);
  }
  std::vector<std::string> t_labels = labels_of(h, t);
  std::sort(image.begin(), image.end());
  std::sort(t_labels.begin(), t_labels.end());
  if (image != t_labels || std::adjacent_find(image.begin(), image.end()) != image.end()) return false;

  BranchDecomposition dg = branch_decomposition(g, s);
  for (auto& e : dg) {
    e.source = rho.at(e.source);
    e.target = rho.at(e.target);
  }
  BranchDecomposition dh = branch_decomposition(h, t);
  if (dg.size() != dh.size()) return false;
  std::sort(dg.begin(), dg.end(), entry_less);
  std::sort(dh.begin(), dh.end(), entry_less);
  for (std::size_t k = 0; k < dg.size(); ++k)
    if (!entry_equal(dg[k], dh[k])) return false;
  return true;
}

WeightedDigraph expand(const WeightedDigraph& g, const std::vector<int>& s) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  const auto branches = enumerate_all_branches(g, sorted);
  GraphBuilder b;
  std::vector<int> pos(static_cast<std::size_t>(g.size()), -1);
  for (int v : sorted) {
    pos[static_cast<std::size_t>(v)] = b.add_vertex(g.label(v));
  }
  std::map<std::pair<int, int>, int> counter;
  for (const auto& br : branches) {
    const auto& v = br.vertices;
    if (v.size() == 2) {
      // Direct edge or S loop: at most one per ordered pair.
      b.set_edge(pos[static_cast<std::size_t>(v[0])], pos[static_cast<std::size_t>(v[1])], g.weight(v[0], v[1]));
      continue;
    }
    const int k = ++counter[{br.source(), br.target()}];
    const std::string prefix = g.label(br.source()) + "~" + g.label(br.target()) + "~" + std::to_string(k) + "~";
    int prev = pos[static_cast<std::size_t>(v[0])];
    for (std::size_t p = 1; p + 1 < v.size(); ++p) {
      const int fresh = b.add_vertex(fresh_label(b, prefix + std::to_string(p)));
      b.set_edge(prev, fresh, g.weight(v[p - 1], v[p]));
      b.set_edge(fresh, fresh, g.weight(v[p], v[p]));
      prev = fresh;
    }
    b.set_edge(prev, pos[static_cast<std::size_t>(v.back())], g.weight(v[v.size() - 2], v.back()));
  }
  return b.build();
}

WeightedDigraph loop_bisect(const WeightedDigraph& g, int i, int k, const RatFun& w_ij, const RatFun& w_jj,
                            const RatFun& w_jk, const std::optional<std::string>& new_label) {
  if (i < 0 || i >= g.size() || k < 0 || k >= g.size())
    throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  const RatFun denom = RatFun::lambda() - w_jj;
  if (denom.is_zero() || w_ij.is_zero() || w_jk.is_zero())
    throw Error(ErrorKind::FactorizationMismatch, "factorization needs nonzero edge weights and a loop other than lambda");
  const RatFun product = w_ij * w_jk / denom;
  if (!(product == g.weight(i, k)))
    throw Error(ErrorKind::FactorizationMismatch, "weight of " + g.label(i) + " -> " + g.label(k) + " is " +
                                                      g.weight(i, k).to_string() + ", but the factors give " +
                                                      product.to_string());
  GraphBuilder b(g);
  const std::string label = new_label ? *new_label : fresh_label(b, g.label(i) + "~" + g.label(k) + "~bisect");
  const int j = b.add_vertex(label);
  b.set_edge(i, k, RatFun());
  b.set_edge(i, j, w_ij);
  b.set_edge(j, j, w_jj);
  b.set_edge(j, k, w_jk);
  return b.build();
}

WeightedDigraph prune_off_branch(const WeightedDigraph& g, const std::vector<int>& s) {
  require_structural_set(g, s);
  const int n = g.size();
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (int v : s) in_s[static_cast<std::size_t>(v)] = 1;
  // fwd: complement vertices reachable from S through complement vertices;
  // bwd: complement vertices that reach S the same way.
  auto sweep = [&](bool forward) {
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    std::deque<int> queue;
    for (int v : s)
      for (int w : forward ? g.successors(v) : g.predecessors(v))
        if (!in_s[static_cast<std::size_t>(w)] && !mark[static_cast<std::size_t>(w)]) {
          mark[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : forward ? g.successors(v) : g.predecessors(v))
        if (!in_s[static_cast<std::size_t>(w)] && !mark[static_cast<std::size_t>(w)]) {
          mark[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
    }
    return mark;
  };
  const auto fwd = sweep(true);
  const auto bwd = sweep(false);
  auto kept = [&](int v) {
    return in_s[static_cast<std::size_t>(v)] || (fwd[static_cast<std::size_t>(v)] && bwd[static_cast<std::size_t>(v)]);
  };
  std::vector<int> keep_vertices;
  for (int v = 0; v < n; ++v)
    if (kept(v)) keep_vertices.push_back(v);
  GraphBuilder b;
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int v : keep_vertices) pos[static_cast<std::size_t>(v)] = b.add_vertex(g.label(v));
  for (const auto& e : g.edges()) {
    if (!kept(e.from) || !kept(e.to)) continue;
    // With both ends kept the edge extends backwards to S and forwards to S.
    b.set_edge(pos[static_cast<std::size_t>(e.from)], pos[static_cast<std::size_t>(e.to)], e.weight);
  }
  return b.build();
}

}  // namespace isored
