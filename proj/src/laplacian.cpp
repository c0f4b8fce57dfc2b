#include "isored/laplacian.hpp"


#include "isored/error.hpp"

namespace isored {

namespace {

void require_simple(const WeightedDigraph& g) {
  if (!is_simple_graph(g))
    throw Error(ErrorKind::NotSimple, "expected a simple graph (symmetric, unit weights, no loops)");
}

WeightedDigraph empty_like(const WeightedDigraph& g) { return filter_edges(g, [](int, int) { return false; }); }

}  // namespace

bool is_simple_graph(const WeightedDigraph& g) {
  for (const auto& e : g.edges()) {
    if (e.from == e.to || !e.weight.is_one()) return false;
    if (!g.weight(e.to, e.from).is_one()) return false;
  }
  return true;
}

WeightedDigraph combinatorial_laplacian_graph(const WeightedDigraph& g) {
  require_simple(g);
  GraphBuilder b(empty_like(g));
  for (int v = 0; v < g.size(); ++v) {
    b.set_edge(v, v, RatFun(static_cast<long>(g.out_degree(v))));
    for (int w : g.successors(v)) b.set_edge(v, w, RatFun(-1));
  }
  return b.build();
}

mpq_class inverse_sqrt_approximant(unsigned long n, double tol) {
  if (n == 0) throw Error(ErrorKind::DivisionByZero, "1/sqrt(0) is undefined");
  mpz_class root;
  mpz_class nz(n);
  mpz_sqrt(root.get_mpz_t(), nz.get_mpz_t());
  if (root * root == nz) return mpq_class(1, root);
  // Continued fraction of sqrt(n): a_0 = floor(sqrt n), then the periodic
  // recurrence in integers. Convergents h/k approach sqrt(n) with error below
  // 1/(k k'), so k/h approaches 1/sqrt(n) with error below 1/(k k' n).
  const mpz_class a0 = root;
  mpz_class m = 0, d = 1, a = a0;
  mpz_class h_prev = 1, h = a0;
  mpz_class k_prev = 0, k = 1;
  for (;;) {
    m = d * a - m;
    d = (nz - m * m) / d;
    a = (a0 + m) / d;
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    const double bound = 1.0 / (k.get_d() * k_next.get_d() * static_cast<double>(n));
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (bound < tol) break;
  }
  return mpq_class(k, h);
}

WeightedDigraph normalized_laplacian_graph(const WeightedDigraph& g, NormalizedMode mode) {
  require_simple(g);
  GraphBuilder b(empty_like(g));
  for (int v = 0; v < g.size(); ++v) {
    const long dv = g.out_degree(v);
    if (dv == 0) continue;
    b.set_edge(v, v, RatFun(1));
    for (int w : g.successors(v)) {
      const long dw = g.out_degree(w);
      if (mode == NormalizedMode::ExactSimilar) {
        b.set_edge(v, w, RatFun(GaussRat(mpq_class(-1, dv))));
      } else {
        b.set_edge(v, w, RatFun(GaussRat(-inverse_sqrt_approximant(static_cast<unsigned long>(dv * dw)))));
      }
    }
  }
  return b.build();
}

WeightedDigraph generalized_laplacian_graph(const WeightedDigraph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.has_loop(v)) throw Error(ErrorKind::HasLoops, "vertex " + g.label(v) + " has a loop");
  GraphBuilder b(empty_like(g));
  for (int v = 0; v < g.size(); ++v) {
    RatFun row_sum;
    for (int w : g.successors(v)) {
      row_sum += g.weight(v, w);
      b.set_edge(v, w, -g.weight(v, w));
    }
    b.set_edge(v, v, row_sum);
  }
  return b.build();
}

}  // namespace isored
