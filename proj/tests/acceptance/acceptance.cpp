// Acceptance checks: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance [--criterion N] [--seed K] [--data DIR]

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "isored/graph.hpp"
#include "isored/json_io.hpp"
#include "isored/laplacian.hpp"
#include "isored/proptest.hpp"
#include "isored/reduce.hpp"
#include "isored/spectrum.hpp"
#include "isored/structural.hpp"
#include "isored/transform.hpp"
#include "isored/weight_format.hpp"
#include "isored/weightset.hpp"

using namespace isored;
using C = std::complex<double>;

namespace {

struct Report {
  bool ok = true;
  std::vector<std::string> lines;

  void check(bool cond, const std::string& what) {
    lines.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    ok = ok && cond;
  }
  void note(const std::string& what) { lines.push_back("     " + what); }
};

struct Context {
  std::string data;
  std::uint64_t seed = 20260101;
  WeightedDigraph load(const std::string& name) const { return read_graph_file(data + "/" + name); }
};

std::vector<int> sorted_indices(const WeightedDigraph& g, const std::vector<std::string>& labels) {
  auto v = indices_of(g, labels);
  std::sort(v.begin(), v.end());
  return v;
}

std::string show(const SpectralList& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& z : s.flatten()) {
    out += (first ? "" : ", ") + format_complex(z);
    first = false;
  }
  return out + "}";
}

bool spectrum_is(const SpectralList& s, const std::vector<C>& expected, double tol = 1e-9) {
  return match_points(s.flatten(), expected, tol).equal;
}

WeightedDigraph complete(int n) {
  std::vector<std::string> vs;
  std::vector<UndirectedEdge> es;
  for (int k = 1; k <= n; ++k) vs.push_back("v" + std::to_string(k));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) es.push_back({vs[a], vs[b], {}});
  return from_undirected(vs, es);
}

void property_line(Report& r, const Context& ctx, const std::string& name, int cases, double budget) {
  const auto res = run_property(property(name), cases, ctx.seed);
  r.check(res.ok(), format_result(res).substr(5));
  if (res.seconds >= budget) r.check(false, name + " exceeded " + std::to_string(budget) + " s");
}

Report criterion1(const Context& ctx) {
  Report r;
  const auto start = std::chrono::steady_clock::now();
  const auto g = ctx.load("hub6.json");
  const auto h = ctx.load("hub4.json");
  const auto s = sorted_indices(g, {"w2", "w5"});
  const auto t = sorted_indices(h, {"v1", "v4"});
  const auto rg = reduce(g, s);
  const auto rh = reduce(h, t);
  r.check(spectrum_is(spectrum(g), {2, -1, 1, 1, 0, 0}), "sigma(G) = " + show(spectrum(g)));
  r.check(spectrum_is(spectrum(h), {2, -1, 1, 0}), "sigma(H) = " + show(spectrum(h)));
  r.check(spectrum_is(spectrum(rg), {2, -1}), "sigma(R_S(G)) = " + show(spectrum(rg)));
  r.check(spectrum_is(spectrum(rh), {2, -1}), "sigma(R_T(H)) = " + show(spectrum(rh)));
  const auto n = forbidden_set(g, s);
  r.check(n == ForbiddenSet::roots_of(parse_weight("l*(l-1)").num()), "N(G;S) annihilator " + format_poly(n.annihilator()));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.check(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return r;
}

Report criterion2(const Context& ctx) {
  Report r;
  const auto k23 = ctx.load("k23.json");
  const auto m = reduce(k23, sorted_indices(k23, {"a1", "a2"}));
  r.check(m.size() == 2 && m.edge_count() == 4, "complete digraph with loops on 2 vertices");
  bool all = true;
  for (const auto& e : m.edges()) all = all && e.weight == parse_weight("3/l");
  r.check(all, "every weight is exactly 3/l");
  return r;
}

Report criterion3(const Context&) {
  Report r;
  const RatFun target = parse_weight("1+1/l");
  bool all_entries = true, off_ok = true, spectra_ok = true;
  std::string diagonal;
  for (int n = 3; n <= 6; ++n) {
    const auto kn = complete(n);
    for (int k = 0; k < n; ++k) {
      const auto m = reduce(kn, complement(kn, {k}));
      for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) {
          const bool eq = m.weight(i, j) == target;
          all_entries = all_entries && eq;
          if (i != j) off_ok = off_ok && eq;
          if (i == j && diagonal.empty()) diagonal = format_weight(m.weight(i, j));
        }
      spectra_ok = spectra_ok && char_det(m).num().monic() == char_det(kn).num().monic();
    }
  }
  r.check(all_entries, "all entries of R_{V-v_k}(K_n) equal 1+1/l for n = 3..6");
  r.check(off_ok, "off-diagonal entries equal 1+1/l");
  r.note("diagonal entries are " + diagonal + " (the single branch v_i v_k v_i)");
  r.check(spectra_ok, "sigma(R) = sigma(K_n) = {n-1, -1, ..., -1} exactly");
  return r;
}

Report criterion4(const Context& ctx) {
  Report r;
  const auto l = combinatorial_laplacian_graph(ctx.load("k3.json"));
  const auto s = sorted_indices(l, {"v1", "v2"});
  const auto m = reduce(l, s);
  const RatFun loop = parse_weight("(2*l-1)/(l-2)");
  const RatFun cross = parse_weight("-(l+3)/(l-2)");
  const bool loops_ok = m.weight(0, 0) == loop && m.weight(1, 1) == loop;
  const bool cross_ok = m.weight(0, 1) == cross && m.weight(1, 0) == cross;
  r.check(loops_ok, "loops equal (2l-1)/(l-2); computed " + format_weight(m.weight(0, 0)));
  r.check(cross_ok, "cross edges equal -(l+3)/(l-2); computed " + format_weight(m.weight(0, 1)));
  r.check(forbidden_set(l, s) == ForbiddenSet::roots_of(parse_weight("l-2").num()), "N(L(K3);S) = {2}");
  const auto cmp = spectra_equal_up_to(spectrum(l), spectrum(m), ForbiddenSet(), 1e-9);
  r.check(cmp.equal && char_det(m).num().monic() == char_det(l).num().monic(),
          "sigma(R_S(L)) = sigma(L) = " + show(spectrum(l)) + " exactly");
  return r;
}

Report criterion5(const Context& ctx) {
  Report r;
  const auto g = ctx.load("fork6.json");
  const double r2 = std::sqrt(2.0);
  const auto w = weightset_construct(g, subring_test(Subring::Unit));
  r.check(w.graph.size() == 4, "output has " + std::to_string(w.graph.size()) + " vertices");
  r.check(spectrum_is(spectrum(g), {r2, -r2, 0, 0, 0, 0}), "sigma(G) = " + show(spectrum(g)));
  r.check(spectrum_is(spectrum(w.graph), {r2, -r2, 0, 0}), "sigma(output) = " + show(spectrum(w.graph)));
  r.check(w.expected_vertices == w.graph.size(), "m + sum(l_i - 1) = " + std::to_string(w.expected_vertices));
  const auto check = verify_weightset(g, w.graph, subring_test(Subring::Unit));
  r.check(check.ok, check.report);
  return r;
}

Report criterion6(const Context& ctx) {
  Report r;
  property_line(r, ctx, "reduce.spectrum_outside_forbidden", 1000, 60);
  return r;
}

Report criterion7(const Context& ctx) {
  Report r;
  property_line(r, ctx, "reduce.unique_in_gpi", 300, 60);
  property_line(r, ctx, "reduce.elimination_orders", 300, 60);
  return r;
}

Report criterion8(const Context& ctx) {
  Report r;
  property_line(r, ctx, "scc.reduce_commutes", 300, 60);
  property_line(r, ctx, "scc.spectrum_preserved", 300, 60);
  return r;
}

Report criterion9(const Context& ctx) {
  Report r;
  property_line(r, ctx, "reduce.expand_then_reduce", 300, 60);
  property_line(r, ctx, "reduce.bisect_contract", 300, 60);
  const auto g = ctx.load("hub6.json");
  const auto h = ctx.load("hub4.json");
  r.check(common_decomposition(g, sorted_indices(g, {"w2", "w5"}), h, sorted_indices(h, {"v1", "v4"}),
                               {{"w2", "v1"}, {"w5", "v4"}}),
          "D_S(G) = D_T(H) under w2 -> v1, w5 -> v4");
  return r;
}

Report criterion10(const Context& ctx) {
  Report r;
  property_line(r, ctx, "oracles.det_leibniz", 500, 60);
  property_line(r, ctx, "spectrum.vs_dense", 500, 60);
  property_line(r, ctx, "oracles.branches_vs_paths", 500, 60);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isored acceptance criteria"};
  int only = 0;
  Context ctx;
  ctx.data = ISORED_TEST_DATA_DIR;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--seed", ctx.seed, "seed for the randomized suites");
  app.add_option("--data", ctx.data, "fixture directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Report(const Context&)>>> criteria{
      {"worked example spectra and forbidden set", criterion1},
      {"complete bipartite reduction weights", criterion2},
      {"complete graph reduction entries", criterion3},
      {"Laplacian of K3 reduction", criterion4},
      {"weight-set construction on the unit-weight example", criterion5},
      {"spectrum preserved outside N (1000 random cases)", criterion6},
      {"order independence of reductions", criterion7},
      {"strongly connected components and reduction", criterion8},
      {"expansion, bisection and branch decompositions", criterion9},
      {"agreement with brute-force oracles", criterion10},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only && static_cast<int>(k) + 1 != only) continue;
    Report rep;
    try {
      rep = criteria[k].second(ctx);
    } catch (const std::exception& e) {
      rep.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (rep.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << "\n";
    for (const auto& line : rep.lines) std::cout << "     " << line << "\n";
    all = all && rep.ok;
  }
  return all ? 0 : 1;
}
