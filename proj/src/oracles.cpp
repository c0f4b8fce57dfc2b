#include "isored/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "isored/error.hpp"
#include "isored/roots.hpp"

namespace isored {

RatFun det_leibniz(const RatMatrix& m) {
  const int n = m.size();
  if (n > 6) throw Error(ErrorKind::Size, "det_leibniz is limited to 6x6 matrices");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  RatFun total;
  do {
    RatFun term(1);
    for (int i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    if (term.is_zero()) continue;
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    if (inversions % 2) {
      total -= term;
    } else {
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<int>> all_paths(const WeightedDigraph& g, int i, int j,
                                        const std::vector<int>& forbidden_interiors) {
  const int n = g.size();
  if (n > 10) throw Error(ErrorKind::Size, "all_paths is limited to 10 vertices");
  std::vector<char> banned(static_cast<std::size_t>(n), 0);
  for (int v : forbidden_interiors) banned[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<int>> out;
  if (g.has_edge(i, j)) out.push_back({i, j});
  std::vector<int> path{i};
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  on[static_cast<std::size_t>(i)] = 1;
  // Extend by every vertex (not only successors) and test adjacency, so the
  // search does not lean on the adjacency lists used elsewhere.
  std::function<void()> extend = [&]() {
    const int last = path.back();
    for (int w = 0; w < n; ++w) {
      if (!g.has_edge(last, w) || w == last) continue;
      if (path.size() > 1 && w == j) out.push_back([&] { auto p = path; p.push_back(j); return p; }());
      if (w == j || w == i || on[static_cast<std::size_t>(w)] || banned[static_cast<std::size_t>(w)]) continue;
      on[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      on[static_cast<std::size_t>(w)] = 0;
    }
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

SpectralList eig_dense(const WeightedDigraph& g) {
  const int n = g.size();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& e : g.edges()) {
    if (!e.weight.is_constant())
      throw Error(ErrorKind::NonconstantWeight, "eig_dense needs constant weights; " + g.label(e.from) + " -> " +
                                                    g.label(e.to) + " is not constant");
    a(e.from, e.to) = e.weight.constant_value().to_complex();
  }
  SpectralList out;
  if (n == 0) return out;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, false);
  std::vector<std::complex<double>> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end(), complex_less);
  std::vector<char> used(values.size(), 0);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (used[k]) continue;
    std::complex<double> sum = values[k];
    int count = 1;
    used[k] = 1;
    for (std::size_t q = k + 1; q < values.size(); ++q)
      if (!used[q] && std::abs(values[q] - values[k]) < 1e-6) {
        used[q] = 1;
        sum += values[q];
        ++count;
      }
    out.entries.push_back({sum / static_cast<double>(count), count, Poly()});
  }
  return out;
}

}  // namespace isored
