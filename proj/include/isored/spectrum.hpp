#pragma once

#include <complex>
#include <string>
#include <vector>

#include "isored/forbidden_set.hpp"
#include "isored/graph.hpp"

namespace isored {

/// Determinant over the weight field by Gaussian elimination, pivoting on the
/// nonzero entry of least total degree. The empty matrix has determinant 1.
RatFun determinant(const RatMatrix& m);

/// det(M(G) - lambda I) in canonical form.
RatFun char_det(const WeightedDigraph& g);

struct SpectralEntry {
  std::complex<double> root;
  int multiplicity;
  /// Monic square-free factor of the characteristic numerator having root as
  /// a zero; all roots of one factor share its multiplicity.
  Poly witness;
};

/// sigma(G): the roots of the numerator of det(M(G) - lambda I), each with
/// its exact multiplicity.
struct SpectralList {
  std::vector<SpectralEntry> entries;
  /// Sum of multiplicities.
  int total() const;
  /// Every root repeated by multiplicity, in entry order.
  std::vector<std::complex<double>> flatten() const;
};

/// Roots of p with multiplicities from its square-free decomposition.
SpectralList roots_with_multiplicity(const Poly& p);
SpectralList spectrum(const WeightedDigraph& g);

/// Drops every entry whose root lies in n (removal by value, so all copies go).
SpectralList spectrum_minus(const SpectralList& sigma, const ForbiddenSet& n, double tol = 1e-9);

struct SpectrumComparison {
  bool equal = false;
  /// Roots, by multiplicity, left without a partner on either side.
  std::vector<std::complex<double>> unmatched_first;
  std::vector<std::complex<double>> unmatched_second;
  std::string report() const;
};

/// Multiset comparison of sigma1 \ n and sigma2 \ n, pairing roots within
/// tol * max(1, |z|): greedy nearest neighbour first, maximum bipartite
/// matching when the greedy pass leaves anything unmatched.
SpectrumComparison spectra_equal_up_to(const SpectralList& sigma1, const SpectralList& sigma2, const ForbiddenSet& n,
                                       double tol = 1e-9);

/// Same pairing rule on plain lists of points.
SpectrumComparison match_points(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                                double tol);

/// Renders a complex number with 12 significant digits, e.g. "1.41421356237"
/// or "0.5-2i".
std::string format_complex(std::complex<double> z);

}  // namespace isored
