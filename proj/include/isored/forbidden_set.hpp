#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "isored/poly.hpp"

namespace isored {

/// Finite set of complex numbers held exactly as the roots of a monic
/// square-free annihilator, with numeric copies of the points for reporting.
class ForbiddenSet {
 public:
  /// The empty set (annihilator 1).
  ForbiddenSet();
  /// Roots of p, which must be nonzero; repeated roots collapse.
  static ForbiddenSet roots_of(const Poly& p);

  const Poly& annihilator() const { return annihilator_; }
  const std::vector<std::complex<double>>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

  /// Set union (lcm of annihilators).
  ForbiddenSet& unite(const ForbiddenSet& o);
  friend ForbiddenSet operator|(ForbiddenSet a, const ForbiddenSet& b) { return a.unite(b); }
  friend bool operator==(const ForbiddenSet& a, const ForbiddenSet& b) { return a.annihilator_ == b.annihilator_; }

  /// Whether the root z of the exact polynomial `witness` is in the set. The
  /// exact test (a common factor with the annihilator containing z) runs
  /// first; without a common factor the numeric distance to the stored points
  /// decides, with tolerance tol.
  bool contains_root_of(const Poly& witness, std::complex<double> z, double tol) const;
  /// Numeric membership only.
  bool contains(std::complex<double> z, double tol) const;
  /// Exact subset test.
  bool subset_of(const ForbiddenSet& o) const;

 private:
  explicit ForbiddenSet(Poly squarefree_monic);
  Poly annihilator_;
  std::vector<std::complex<double>> points_;
};

}  // namespace isored
