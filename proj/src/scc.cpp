#include "isored/scc.hpp"

#include <algorithm>
#include <map>

#include "isored/reduce.hpp"
#include "isored/structural.hpp"

namespace isored {

namespace {

// Tarjan's algorithm, iterative. Components come out in reverse topological
// order of the condensation.
std::vector<std::vector<int>> tarjan(const WeightedDigraph& g) {
  const int n = g.size();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  struct Frame {
    int v;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const int v = f.v;
      const auto& succ = g.successors(v);
      if (f.next < succ.size()) {
        const int w = succ[f.next++];
        if (index[static_cast<std::size_t>(w)] < 0) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          call.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().v;
        low[static_cast<std::size_t>(parent)] =
            std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
      }
    }
  }
  return comps;
}

}  // namespace

SccPartition scc_partition(const WeightedDigraph& g) {
  const auto comps = tarjan(g);
  const int n = g.size();
  const int m = static_cast<int>(comps.size());
  std::vector<int> comp_of(static_cast<std::size_t>(n));
  for (int c = 0; c < m; ++c)
    for (int v : comps[static_cast<std::size_t>(c)]) comp_of[static_cast<std::size_t>(v)] = c;
  // Canonical order: repeatedly emit, among components whose successors are
  // all emitted, the one with the least vertex.
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(m));
  std::vector<int> pending(static_cast<std::size_t>(m), 0);
  for (const auto& e : g.edges()) {
    const int a = comp_of[static_cast<std::size_t>(e.from)], b = comp_of[static_cast<std::size_t>(e.to)];
    if (a != b) succ[static_cast<std::size_t>(a)].push_back(b);
  }
  std::vector<std::vector<int>> pred(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    auto& s = succ[static_cast<std::size_t>(a)];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    pending[static_cast<std::size_t>(a)] = static_cast<int>(s.size());
    for (int b : s) pred[static_cast<std::size_t>(b)].push_back(a);
  }
  std::map<int, int> ready;  // least vertex -> component
  for (int c = 0; c < m; ++c)
    if (pending[static_cast<std::size_t>(c)] == 0) ready.emplace(comps[static_cast<std::size_t>(c)].front(), c);
  SccPartition p;
  p.component_of.assign(static_cast<std::size_t>(n), -1);
  while (!ready.empty()) {
    const int c = ready.begin()->second;
    ready.erase(ready.begin());
    const int pos = static_cast<int>(p.components.size());
    for (int v : comps[static_cast<std::size_t>(c)]) p.component_of[static_cast<std::size_t>(v)] = pos;
    p.components.push_back(comps[static_cast<std::size_t>(c)]);
    for (int a : pred[static_cast<std::size_t>(c)])
      if (--pending[static_cast<std::size_t>(a)] == 0) ready.emplace(comps[static_cast<std::size_t>(a)].front(), a);
  }
  return p;
}

WeightedDigraph scc_filter(const WeightedDigraph& g) {
  const auto p = scc_partition(g);
  return filter_edges(g, [&](int i, int j) {
    return p.component_of[static_cast<std::size_t>(i)] == p.component_of[static_cast<std::size_t>(j)];
  });
}

std::vector<int> block_order(const SccPartition& p) {
  std::vector<int> order;
  for (const auto& c : p.components) order.insert(order.end(), c.begin(), c.end());
  return order;
}

bool is_block_lower_triangular(const WeightedDigraph& g, const SccPartition& p) {
  // Sink components come first, so every edge must point to an earlier or the
  // same block: row block >= column block.
  for (const auto& e : g.edges())
    if (p.component_of[static_cast<std::size_t>(e.from)] < p.component_of[static_cast<std::size_t>(e.to)]) return false;
  return true;
}

SccCheck reduced_scc_check(const WeightedDigraph& g, const std::vector<int>& s) {
  SccCheck out;
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  const WeightedDigraph r = reduce(g, sorted);
  const auto pg = scc_partition(g);
  const auto pr = scc_partition(r);
  std::vector<char> in_s(static_cast<std::size_t>(g.size()), 0);
  for (int v : sorted) in_s[static_cast<std::size_t>(v)] = 1;

  std::size_t nonempty = 0;
  for (const auto& comp : pg.components) {
    std::vector<int> local;  // positions inside comp of its S vertices
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < comp.size(); ++k)
      if (in_s[static_cast<std::size_t>(comp[k])]) {
        local.push_back(static_cast<int>(k));
        labels.push_back(g.label(comp[k]));
      }
    if (local.empty()) continue;
    ++nonempty;
    const WeightedDigraph c = induced_subgraph(g, comp);
    const WeightedDigraph rc = reduce(c, local);
    // The matching component of R_S(G) is the one holding the first label.
    const int comp_r = pr.component_of[static_cast<std::size_t>(r.index_of(labels.front()))];
    const auto& members = pr.components[static_cast<std::size_t>(comp_r)];
    std::vector<std::string> member_labels = labels_of(r, members);
    std::vector<std::string> want = labels;
    std::sort(member_labels.begin(), member_labels.end());
    std::sort(want.begin(), want.end());
    if (member_labels != want) {
      out.report = "component of R_S(G) containing " + labels.front() + " does not match S within its component of G";
      return out;
    }
    if (!(induced_subgraph(r, members) == rc)) {
      out.report = "reduction of the component holding " + labels.front() + " differs from the component of R_S(G)";
      return out;
    }
  }
  if (nonempty != pr.components.size()) {
    out.report = "R_S(G) has " + std::to_string(pr.components.size()) + " components, expected " +
                 std::to_string(nonempty);
    return out;
  }
  out.ok = true;
  out.report = std::to_string(nonempty) + " component(s) reproduced";
  return out;
}

}  // namespace isored
