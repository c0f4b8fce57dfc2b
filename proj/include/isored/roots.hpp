#pragma once

#include <complex>
#include <vector>

#include "isored/poly.hpp"

namespace isored {

/// Numeric roots of a nonconstant polynomial, one per root counted with
/// multiplicity. Intended for square-free input, where each root is polished
/// by Newton iteration against the exact coefficients. Sorted by real part,
/// then imaginary part. Returns an empty list for constants.
std::vector<std::complex<double>> poly_roots(const Poly& p);

/// Deterministic ordering for complex points: by real part, then imaginary
/// part, treating differences below 1e-12 as ties.
bool complex_less(std::complex<double> a, std::complex<double> b);

}  // namespace isored
