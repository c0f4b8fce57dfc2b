#include "isored/random.hpp"

#include "isored/graph.hpp"
#include "isored/structural.hpp"

namespace isored {

namespace {

mpq_class small_rational(Rng& rng, int max_abs) {
  const long num = rng.uniform(-max_abs, max_abs);
  const long den = rng.chance(0.3) ? rng.uniform(2, 4) : 1;
  return mpq_class(num, den);
}

long nonzero_int(Rng& rng, int lo, int hi) {
  long v = 0;
  while (v == 0) v = rng.uniform(lo, hi);
  return v;
}

std::vector<std::string> vertex_labels(int n) {
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back("v" + std::to_string(k));
  return out;
}

}  // namespace

GaussRat random_gauss_rat(Rng& rng, int max_abs, double complex_p) {
  mpq_class re = small_rational(rng, max_abs);
  mpq_class im = rng.chance(complex_p) ? small_rational(rng, max_abs) : mpq_class(0);
  return GaussRat(re, im);
}

Poly random_poly(Rng& rng, int max_degree, double complex_p) {
  const int d = static_cast<int>(rng.uniform(0, max_degree));
  std::vector<GaussRat> c;
  for (int k = 0; k <= d; ++k) c.push_back(rng.chance(0.25) ? GaussRat() : random_gauss_rat(rng, 3, complex_p));
  return Poly(std::move(c));
}

RatFun random_ratfun(Rng& rng, int max_degree, double complex_p) {
  Poly num = random_poly(rng, max_degree, complex_p);
  Poly den;
  while (den.is_zero()) den = random_poly(rng, max_degree, complex_p);
  return RatFun::from_parts(std::move(num), std::move(den));
}

RatFun random_ratfun_pi_nonpos(Rng& rng, int max_degree) {
  const int dd = static_cast<int>(rng.uniform(0, max_degree));
  const int dn = static_cast<int>(rng.uniform(0, dd));
  auto with_degree = [&](int d) {
    std::vector<GaussRat> c;
    for (int k = 0; k < d; ++k) c.push_back(GaussRat(rng.uniform(-3, 3)));
    c.push_back(GaussRat(nonzero_int(rng, -3, 3)));
    return Poly(std::move(c));
  };
  return RatFun::from_parts(with_degree(dn), with_degree(dd));
}

WeightedDigraph random_graph(Rng& rng, const RandomGraphOptions& opt) {
  const int n = static_cast<int>(rng.uniform(opt.min_vertices, opt.max_vertices));
  GraphBuilder b;
  for (const auto& l : vertex_labels(n)) b.add_vertex(l);
  auto weight = [&]() {
    return RatFun(opt.positive_only ? rng.uniform(1, opt.weight_abs) : nonzero_int(rng, -opt.weight_abs, opt.weight_abs));
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (!rng.chance(opt.loop_p)) continue;
        b.set_edge(i, i, opt.ratfun_loops && rng.chance(0.6) ? random_ratfun_pi_nonpos(rng, 2) : weight());
      } else if (rng.chance(opt.edge_p)) {
        b.set_edge(i, j, weight());
      }
    }
  return b.build();
}

WeightedDigraph random_gpi_graph(Rng& rng, int min_vertices, int max_vertices, double ratfun_p) {
  const int n = static_cast<int>(rng.uniform(min_vertices, max_vertices));
  GraphBuilder b;
  for (const auto& l : vertex_labels(n)) b.add_vertex(l);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!rng.chance(i == j ? 0.3 : 0.4)) continue;
      RatFun w;
      if (rng.chance(ratfun_p)) {
        w = random_ratfun_pi_nonpos(rng, 2);
      } else if (rng.chance(0.15)) {
        w = RatFun(GaussRat(mpq_class(rng.uniform(-2, 2)), mpq_class(nonzero_int(rng, -2, 2))));
      } else {
        w = RatFun(nonzero_int(rng, -3, 3));
      }
      b.set_edge(i, j, w);
    }
  return b.build();
}

WeightedDigraph random_simple_graph(Rng& rng, int min_vertices, int max_vertices, double edge_p) {
  const int n = static_cast<int>(rng.uniform(min_vertices, max_vertices));
  std::vector<UndirectedEdge> edges;
  const auto labels = vertex_labels(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(edge_p)) edges.push_back({labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)], std::nullopt});
  return from_undirected(labels, edges);
}

std::vector<int> random_structural_set(Rng& rng, const WeightedDigraph& g, double keep_p) {
  std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
  for (int v = 0; v < g.size(); ++v) in[static_cast<std::size_t>(v)] = rng.chance(keep_p);
  auto members = [&] {
    std::vector<int> s;
    for (int v = 0; v < g.size(); ++v)
      if (in[static_cast<std::size_t>(v)]) s.push_back(v);
    return s;
  };
  for (;;) {
    auto s = members();
    if (s.empty()) {
      in[static_cast<std::size_t>(rng.uniform(0, g.size() - 1))] = 1;
      continue;
    }
    const auto check = check_structural_set(g, s);
    if (check.ok) return s;
    if (check.lambda_loop) {
      in[static_cast<std::size_t>(*check.lambda_loop)] = 1;
    } else {
      const auto& c = check.cycle;
      in[static_cast<std::size_t>(c[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(c.size()) - 1))])] = 1;
    }
  }
}

}  // namespace isored
