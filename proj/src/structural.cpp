#include "isored/structural.hpp"

#include <algorithm>
#include <functional>

#include "isored/error.hpp"

namespace isored {

namespace {

std::string describe_cycle(const WeightedDigraph& g, const std::vector<int>& cycle) {
  std::string s;
  for (int v : cycle) s += g.label(v) + " -> ";
  return s + g.label(cycle.front());
}

// Finds a cycle in the loop-free subgraph induced by `in`, by iterative DFS.
std::vector<int> find_cycle(const WeightedDigraph& g, const std::vector<char>& in) {
  const int n = g.size();
  std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (!in[static_cast<std::size_t>(root)] || color[static_cast<std::size_t>(root)]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& succ = g.successors(v);
      if (next == succ.size()) {
        color[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
        continue;
      }
      const int w = succ[next++];
      if (w == v || !in[static_cast<std::size_t>(w)]) continue;
      if (color[static_cast<std::size_t>(w)] == 1) {
        std::vector<int> cycle;
        for (int u = v; u != w; u = parent[static_cast<std::size_t>(u)]) cycle.push_back(u);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[static_cast<std::size_t>(w)] == 0) {
        color[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

}  // namespace

StructuralCheck check_structural_set(const WeightedDigraph& g, const std::vector<int>& s) {
  StructuralCheck out;
  for (int v : s)
    if (v < 0 || v >= g.size())
      throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  if (s.empty()) {
    out.diagnostic = "structural set must be nonempty";
    return out;
  }
  std::vector<char> in(static_cast<std::size_t>(g.size()), 1);
  for (int v : s) in[static_cast<std::size_t>(v)] = 0;
  const RatFun lam = RatFun::lambda();
  for (int v = 0; v < g.size(); ++v) {
    if (in[static_cast<std::size_t>(v)] && g.weight(v, v) == lam) {
      out.lambda_loop = v;
      out.diagnostic = "loop on " + g.label(v) + " outside the set has weight lambda";
      return out;
    }
  }
  out.cycle = find_cycle(g, in);
  if (!out.cycle.empty()) {
    out.diagnostic = "complement contains the cycle " + describe_cycle(g, out.cycle);
    return out;
  }
  out.ok = true;
  return out;
}

bool is_structural_set(const WeightedDigraph& g, const std::vector<int>& s) {
  return check_structural_set(g, s).ok;
}

void require_structural_set(const WeightedDigraph& g, const std::vector<int>& s) {
  auto c = check_structural_set(g, s);
  if (!c.ok) throw Error(ErrorKind::InvalidStructuralSet, "not a structural set: " + c.diagnostic);
}

ForbiddenSet forbidden_set(const WeightedDigraph& g, const std::vector<int>& s) {
  ForbiddenSet out;
  const Poly lam = Poly::x();
  for (int v : complement(g, s)) {
    const RatFun& w = g.weight(v, v);
    // q * (lambda q - p); both factors share no root with each other since gcd(p, q) = 1.
    Poly a = w.den() * (lam * w.den() - w.num());
    out.unite(ForbiddenSet::roots_of(a));
  }
  return out;
}

std::vector<int> high_out_degree_vertices(const WeightedDigraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (g.out_degree(v) >= 2) out.push_back(v);
  return out;
}

std::vector<int> basic_structural_set(const WeightedDigraph& g) {
  const int n = g.size();
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  for (int v : high_out_degree_vertices(g)) member[static_cast<std::size_t>(v)] = 1;
  // A cycle avoiding D_out runs through vertices of out-degree exactly one,
  // so it is a cycle of the partial function v -> unique successor.
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on current walk, 2 done
  for (int start = 0; start < n; ++start) {
    std::vector<int> walk;
    int v = start;
    while (v >= 0 && state[static_cast<std::size_t>(v)] == 0 && g.out_degree(v) == 1) {
      state[static_cast<std::size_t>(v)] = 1;
      walk.push_back(v);
      v = g.successors(v).front();
    }
    if (v >= 0 && state[static_cast<std::size_t>(v)] == 1) {
      for (auto it = std::find(walk.begin(), walk.end(), v); it != walk.end(); ++it)
        member[static_cast<std::size_t>(*it)] = 1;
    }
    for (int u : walk) state[static_cast<std::size_t>(u)] = 2;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (member[static_cast<std::size_t>(v)]) out.push_back(v);
  if (out.empty())
    throw Error(ErrorKind::EmptyBas, "basic structural set is empty: the graph has no cycle and no vertex of out-degree >= 2");
  return out;
}

bool is_g_pi(const WeightedDigraph& g) {
  for (const auto& e : g.edges())
    if (!(e.weight.pi() <= 0)) return false;
  return true;
}

void require_g_pi(const WeightedDigraph& g) {
  for (const auto& e : g.edges())
    if (!(e.weight.pi() <= 0))
      throw Error(ErrorKind::NotInGPi, "edge " + g.label(e.from) + " -> " + g.label(e.to) + " has weight " +
                                           e.weight.to_string() + " with pi = " + e.weight.pi().to_string() + " > 0");
}

std::vector<std::vector<int>> simple_cycles_bruteforce(const WeightedDigraph& g, const std::vector<int>& allowed) {
  std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
  for (int v : allowed) in[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> on(static_cast<std::size_t>(g.size()), 0);
  // Cycles are rooted at their smallest vertex to list each once.
  std::function<void(int, int)> dfs = [&](int root, int v) {
    for (int w : g.successors(v)) {
      if (w == v || !in[static_cast<std::size_t>(w)] || w < root) continue;
      if (w == root) {
        cycles.push_back(path);
      } else if (!on[static_cast<std::size_t>(w)]) {
        on[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        dfs(root, w);
        path.pop_back();
        on[static_cast<std::size_t>(w)] = 0;
      }
    }
  };
  for (int root : allowed) {
    path = {root};
    on[static_cast<std::size_t>(root)] = 1;
    dfs(root, root);
    on[static_cast<std::size_t>(root)] = 0;
  }
  return cycles;
}

}  // namespace isored
