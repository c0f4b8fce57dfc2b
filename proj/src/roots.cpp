#include "isored/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace isored {

namespace {

std::complex<double> newton_polish(const Poly& p, const Poly& dp, std::complex<double> z) {
  std::complex<double> best = z;
  double best_res = std::abs(p.eval(z));
  for (int it = 0; it < 50 && best_res > 0; ++it) {
    const std::complex<double> d = dp.eval(z);
    if (std::abs(d) == 0) break;
    z -= p.eval(z) / d;
    const double res = std::abs(p.eval(z));
    if (!(res < best_res)) break;
    best = z;
    best_res = res;
  }
  return best;
}

}  // namespace

bool complex_less(std::complex<double> a, std::complex<double> b) {
  constexpr double eps = 1e-12;
  if (std::abs(a.real() - b.real()) > eps) return a.real() < b.real();
  if (std::abs(a.imag() - b.imag()) > eps) return a.imag() < b.imag();
  return false;
}

std::vector<std::complex<double>> poly_roots(const Poly& p) {
  std::vector<std::complex<double>> roots;
  if (p.is_constant()) return roots;
  const Poly m = p.monic();
  const int n = m.degree();
  if (n == 1) {
    roots.push_back((-m.coeff(0)).to_complex());
    return roots;
  }
  // Companion matrix of the monic polynomial.
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -m.coeff(i).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  const Poly dm = m.derivative();
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = newton_polish(m, dm, solver.eigenvalues()[i]);
    // Snap negligible parts so real roots print as real.
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) < 1e-14 * scale) z = {z.real(), 0.0};
    if (std::abs(z.real()) < 1e-14 * scale) z = {0.0, z.imag()};
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), complex_less);
  return roots;
}

}  // namespace isored
