#include "isored/forbidden_set.hpp"

#include "isored/error.hpp"
#include "isored/roots.hpp"

namespace isored {

ForbiddenSet::ForbiddenSet() : annihilator_(GaussRat(1)) {}

ForbiddenSet::ForbiddenSet(Poly squarefree_monic)
    : annihilator_(std::move(squarefree_monic)), points_(poly_roots(annihilator_)) {}

ForbiddenSet ForbiddenSet::roots_of(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::DivisionByZero, "every complex number is a root of the zero polynomial");
  return ForbiddenSet(squarefree_part(p));
}

ForbiddenSet& ForbiddenSet::unite(const ForbiddenSet& o) {
  if (o.empty()) return *this;
  if (empty()) return *this = o;
  const Poly g = gcd(annihilator_, o.annihilator_);
  if (g == o.annihilator_) return *this;
  return *this = ForbiddenSet(annihilator_ * o.annihilator_.exact_div(g));
}

bool ForbiddenSet::contains(std::complex<double> z, double tol) const {
  for (const auto& p : points_)
    if (std::abs(p - z) <= tol * std::max(1.0, std::abs(z))) return true;
  return false;
}

bool ForbiddenSet::contains_root_of(const Poly& witness, std::complex<double> z, double tol) const {
  if (empty()) return false;
  const Poly g = gcd(witness, annihilator_);
  if (!g.is_constant()) {
    // Exact: z is forbidden iff it is a root of the shared factor. Pick the
    // nearest root of g and compare against the nearest root of the witness.
    const auto shared = poly_roots(g);
    double nearest = std::abs(shared.front() - z);
    for (const auto& r : shared) nearest = std::min(nearest, std::abs(r - z));
    if (nearest <= std::max(tol, 1e-6) * std::max(1.0, std::abs(z))) return true;
  }
  return contains(z, tol);
}

bool ForbiddenSet::subset_of(const ForbiddenSet& o) const {
  if (empty()) return true;
  return gcd(annihilator_, o.annihilator_) == annihilator_;
}

}  // namespace isored
