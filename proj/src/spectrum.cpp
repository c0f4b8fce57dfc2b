#include "isored/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "isored/roots.hpp"

namespace isored {

namespace {

int weight_size(const RatFun& f) { return f.num().degree() + f.den().degree(); }

bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

RatFun determinant(const RatMatrix& m) {
  const int n = m.size();
  RatMatrix a = m;
  RatFun det(1);
  std::vector<int> col(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) col[static_cast<std::size_t>(k)] = k;
  bool negate = false;
  for (int k = 0; k < n; ++k) {
    int pr = -1, pc = -1, best = std::numeric_limits<int>::max();
    for (int r = k; r < n; ++r)
      for (int c = k; c < n; ++c) {
        const RatFun& f = a(r, col[static_cast<std::size_t>(c)]);
        if (f.is_zero()) continue;
        const int sz = weight_size(f);
        if (sz < best) {
          best = sz;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) return RatFun();
    if (pr != k) {
      for (int c = 0; c < n; ++c) std::swap(a(pr, c), a(k, c));
      negate = !negate;
    }
    if (pc != k) {
      std::swap(col[static_cast<std::size_t>(pc)], col[static_cast<std::size_t>(k)]);
      negate = !negate;
    }
    const int kc = col[static_cast<std::size_t>(k)];
    const RatFun pivot = a(k, kc);
    det *= pivot;
    const RatFun inv = pivot.inverse();
    for (int r = k + 1; r < n; ++r) {
      if (a(r, kc).is_zero()) continue;
      const RatFun factor = a(r, kc) * inv;
      for (int c = k + 1; c < n; ++c) {
        const int cc = col[static_cast<std::size_t>(c)];
        if (!a(k, cc).is_zero()) a(r, cc) -= factor * a(k, cc);
      }
      a(r, kc) = RatFun();
    }
  }
  return negate ? -det : det;
}

RatFun char_det(const WeightedDigraph& g) { return determinant(adjacency_matrix(g).minus_lambda_identity()); }

int SpectralList::total() const {
  int t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

std::vector<std::complex<double>> SpectralList::flatten() const {
  std::vector<std::complex<double>> out;
  for (const auto& e : entries)
    for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.root);
  return out;
}

SpectralList roots_with_multiplicity(const Poly& p) {
  SpectralList out;
  if (p.is_zero()) return out;
  for (const auto& f : squarefree_decompose(p))
    for (const auto& z : poly_roots(f.factor)) out.entries.push_back({z, f.multiplicity, f.factor});
  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const SpectralEntry& a, const SpectralEntry& b) { return complex_less(a.root, b.root); });
  return out;
}

SpectralList spectrum(const WeightedDigraph& g) { return roots_with_multiplicity(char_det(g).num()); }

SpectralList spectrum_minus(const SpectralList& sigma, const ForbiddenSet& n, double tol) {
  SpectralList out;
  for (const auto& e : sigma.entries)
    if (!n.contains_root_of(e.witness, e.root, tol)) out.entries.push_back(e);
  return out;
}

SpectrumComparison match_points(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                                double tol) {
  SpectrumComparison cmp;
  const std::size_t na = a.size(), nb = b.size();
  std::vector<int> match_a(na, -1), match_b(nb, -1);
  for (std::size_t i = 0; i < na; ++i) {
    int best = -1;
    double best_d = 0;
    for (std::size_t j = 0; j < nb; ++j) {
      if (match_b[j] >= 0 || !close(a[i], b[j], tol)) continue;
      const double d = std::abs(a[i] - b[j]);
      if (best < 0 || d < best_d) {
        best = static_cast<int>(j);
        best_d = d;
      }
    }
    if (best >= 0) {
      match_a[i] = best;
      match_b[static_cast<std::size_t>(best)] = static_cast<int>(i);
    }
  }
  const bool greedy_complete = std::count(match_a.begin(), match_a.end(), -1) == 0 &&
                               std::count(match_b.begin(), match_b.end(), -1) == 0;
  if (!greedy_complete) {
    // Kuhn's augmenting paths, seeded with the greedy matching.
    std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
      for (std::size_t j = 0; j < nb; ++j) {
        if (seen[j] || !close(a[i], b[j], tol)) continue;
        seen[j] = 1;
        if (match_b[j] < 0 || augment(static_cast<std::size_t>(match_b[j]), seen)) {
          match_a[i] = static_cast<int>(j);
          match_b[j] = static_cast<int>(i);
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = 0; i < na; ++i) {
      if (match_a[i] >= 0) continue;
      std::vector<char> seen(nb, 0);
      augment(i, seen);
    }
  }
  for (std::size_t i = 0; i < na; ++i)
    if (match_a[i] < 0) cmp.unmatched_first.push_back(a[i]);
  for (std::size_t j = 0; j < nb; ++j)
    if (match_b[j] < 0) cmp.unmatched_second.push_back(b[j]);
  cmp.equal = cmp.unmatched_first.empty() && cmp.unmatched_second.empty();
  return cmp;
}

SpectrumComparison spectra_equal_up_to(const SpectralList& sigma1, const SpectralList& sigma2, const ForbiddenSet& n,
                                       double tol) {
  return match_points(spectrum_minus(sigma1, n, tol).flatten(), spectrum_minus(sigma2, n, tol).flatten(), tol);
}

std::string SpectrumComparison::report() const {
  if (equal) return "spectra agree";
  auto list = [](const std::vector<std::complex<double>>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + format_complex(v[k]);
    return s + "}";
  };
  return "unmatched in first: " + list(unmatched_first) + "; unmatched in second: " + list(unmatched_second);
}

std::string format_complex(std::complex<double> z) {
  const double scale = std::max(1.0, std::abs(z));
  const bool re0 = std::abs(z.real()) < 1e-13 * scale;
  const bool im0 = std::abs(z.imag()) < 1e-13 * scale;
  if (im0) return format_real(re0 ? 0.0 : z.real());
  const std::string im = format_real(std::abs(z.imag())) + "i";
  if (re0) return (z.imag() < 0 ? "-" : "") + im;
  return format_real(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

}  // namespace isored
