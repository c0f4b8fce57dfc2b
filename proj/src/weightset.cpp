#include "isored/weightset.hpp"

#include <algorithm>

#include "isored/error.hpp"
#include "isored/isoequiv.hpp"
#include "isored/reduce.hpp"
#include "isored/structural.hpp"
#include "isored/weight_format.hpp"

namespace isored {

namespace {

bool integer_part(const mpq_class& q) { return q.get_den() == 1; }

struct IncomingBranches {
  std::vector<int> bas;
  // incoming[k]: all branches ending at bas[k]
  std::vector<std::vector<Branch>> incoming;
  // gamma[k]: index into incoming[k] of the chosen longest branch, -1 if none
  std::vector<int> gamma;
  std::vector<int> longest;
};

int length(const Branch& b) { return static_cast<int>(b.vertices.size()) - 1; }

IncomingBranches collect(const WeightedDigraph& g) {
  IncomingBranches out;
  out.bas = basic_structural_set(g);
  const std::size_t m = out.bas.size();
  out.incoming.resize(m);
  out.gamma.assign(m, -1);
  out.longest.assign(m, 1);
  std::vector<int> pos(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t k = 0; k < m; ++k) pos[static_cast<std::size_t>(out.bas[k])] = static_cast<int>(k);
  for (const auto& br : enumerate_all_branches(g, out.bas))
    out.incoming[static_cast<std::size_t>(pos[static_cast<std::size_t>(br.target())])].push_back(br);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& in = out.incoming[k];
    for (std::size_t b = 0; b < in.size(); ++b) {
      const int g_idx = out.gamma[k];
      if (g_idx < 0) {
        out.gamma[k] = static_cast<int>(b);
        continue;
      }
      const Branch& cur = in[static_cast<std::size_t>(g_idx)];
      // Longest first; among equals the lexicographically least vertex sequence.
      if (length(in[b]) > length(cur) || (length(in[b]) == length(cur) && in[b].vertices < cur.vertices))
        out.gamma[k] = static_cast<int>(b);
    }
    if (out.gamma[k] >= 0) out.longest[k] = length(in[static_cast<std::size_t>(out.gamma[k])]);
  }
  return out;
}

RatFun edge_product(const WeightedDigraph& g, const Branch& b) {
  RatFun p(1);
  for (std::size_t k = 0; k + 1 < b.vertices.size(); ++k) p *= g.weight(b.vertices[k], b.vertices[k + 1]);
  return p;
}

}  // namespace

SubringTest subring_test(Subring s) {
  switch (s) {
    case Subring::Integers:
      return [](const RatFun& w) {
        return w.is_constant() && w.constant_value().is_real() && integer_part(w.constant_value().re());
      };
    case Subring::GaussianIntegers:
      return [](const RatFun& w) { return w.is_constant() && w.constant_value().is_gaussian_integer(); };
    case Subring::Constants:
      return [](const RatFun& w) { return w.is_constant(); };
    case Subring::Unit:
      return [](const RatFun& w) {
        if (!w.is_constant() || !w.constant_value().is_real()) return false;
        const mpq_class q = w.constant_value().re();
        return integer_part(q) && sgn(q) >= 0;
      };
  }
  return {};
}

Subring parse_subring(const std::string& name) {
  if (name == "int") return Subring::Integers;
  if (name == "gauss-int") return Subring::GaussianIntegers;
  if (name == "const") return Subring::Constants;
  if (name == "unit") return Subring::Unit;
  throw ParseError(0, "unknown subring '" + name + "' (expected int, gauss-int, const or unit)");
}

int weightset_vertex_count(const WeightedDigraph& g) {
  const auto c = collect(g);
  int n = static_cast<int>(c.bas.size());
  for (int l : c.longest) n += l - 1;
  return n;
}

WeightsetResult weightset_construct(const WeightedDigraph& g, const SubringTest& in_subring) {
  for (const auto& e : g.edges())
    if (!in_subring(e.weight))
      throw Error(ErrorKind::OutsideSubring, "weight " + format_weight(e.weight) + " of " + g.label(e.from) + " -> " +
                                                 g.label(e.to) + " is outside the subring");
  if (!in_subring(RatFun(1))) throw Error(ErrorKind::OutsideSubring, "the subring must contain 1");
  const auto c = collect(g);
  const std::size_t m = c.bas.size();

  WeightsetResult out;
  out.bas = c.bas;
  out.longest = c.longest;
  GraphBuilder b;
  std::vector<int> pos(static_cast<std::size_t>(g.size()), -1);
  for (int v : c.bas) pos[static_cast<std::size_t>(v)] = b.add_vertex(g.label(v));
  // chain[k][p] is the builder index of gamma^k(p), p = 0..l_k.
  std::vector<std::vector<int>> chain(m);
  for (std::size_t k = 0; k < m; ++k) {
    const int target = pos[static_cast<std::size_t>(c.bas[k])];
    if (c.gamma[k] < 0) {
      chain[k] = {-1, target};
      continue;
    }
    const Branch& gam = c.incoming[k][static_cast<std::size_t>(c.gamma[k])];
    const int l = length(gam);
    chain[k].assign(static_cast<std::size_t>(l) + 1, -1);
    chain[k][0] = pos[static_cast<std::size_t>(gam.source())];
    chain[k][static_cast<std::size_t>(l)] = target;
    for (int p = 1; p < l; ++p)
      chain[k][static_cast<std::size_t>(p)] = b.add_vertex(g.label(c.bas[k]) + "~gamma~" + std::to_string(p));
    for (int p = 0; p < l; ++p)
      b.set_edge(chain[k][static_cast<std::size_t>(p)], chain[k][static_cast<std::size_t>(p) + 1],
                 p == 0 ? edge_product(g, gam) : RatFun(1));
  }
  for (std::size_t k = 0; k < m; ++k) {
    const int l = c.gamma[k] < 0 ? 1 : length(c.incoming[k][static_cast<std::size_t>(c.gamma[k])]);
    for (std::size_t bi = 0; bi < c.incoming[k].size(); ++bi) {
      if (static_cast<int>(bi) == c.gamma[k]) continue;
      const Branch& br = c.incoming[k][bi];
      const int from = pos[static_cast<std::size_t>(br.source())];
      const int to = chain[k][static_cast<std::size_t>(l + 1 - length(br))];
      if (!b.weight(from, to).is_zero())
        out.merged.push_back(g.label(br.source()) + " -> " + b.label(to));
      b.add_to_edge(from, to, edge_product(g, br));
    }
  }
  out.graph = b.build();
  out.expected_vertices = static_cast<int>(m);
  for (int l : c.longest) out.expected_vertices += l - 1;
  return out;
}

WeightedDigraph weightset_reduce(const WeightedDigraph& g, const SubringTest& in_subring) {
  return weightset_construct(g, in_subring).graph;
}

WeightsetCheck verify_weightset(const WeightedDigraph& g, const WeightedDigraph& reduced, const SubringTest& in_subring) {
  WeightsetCheck out;
  out.expected_vertices = weightset_vertex_count(g);
  out.actual_vertices = reduced.size();
  out.count_ok = out.expected_vertices == out.actual_vertices;
  out.subring_ok = true;
  std::string bad;
  for (const auto& e : reduced.edges())
    if (!in_subring(e.weight)) {
      out.subring_ok = false;
      if (bad.empty()) bad = reduced.label(e.from) + " -> " + reduced.label(e.to) + " = " + format_weight(e.weight);
    }
  try {
    out.equivalent = bas_equivalent(g, reduced);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyBas) throw;
    out.equivalent = false;
  }
  // The construction matches branches of g over bas(g) with branches of
  // `reduced` over the same labels, whatever bas(reduced) turns out to be.
  std::vector<int> bas_g;
  try {
    bas_g = basic_structural_set(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyBas) throw;
  }
  if (!bas_g.empty()) {
    std::vector<int> image;
    for (int v : bas_g)
      if (const auto w = reduced.find(g.label(v))) image.push_back(*w);
    std::sort(image.begin(), image.end());
    out.branch_equivalent = image.size() == bas_g.size() && is_structural_set(reduced, image) &&
                            common_reduction(g, bas_g, reduced, image);
  }
  out.ok = out.count_ok && out.subring_ok && out.equivalent;
  out.report = "vertex count " + std::to_string(out.actual_vertices) + " (expected " +
               std::to_string(out.expected_vertices) + "): " + (out.count_ok ? "ok" : "mismatch") +
               "; weights in subring: " + (out.subring_ok ? "ok" : "no, e.g. " + bad) +
               "; common reduction over basic structural sets: " + (out.equivalent ? "ok" : "no") +
               "; common reduction over bas(G) and its image: " + (out.branch_equivalent ? "ok" : "no");
  return out;
}

}  // namespace isored
