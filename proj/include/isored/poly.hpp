#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "isored/gauss_rat.hpp"

namespace isored {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = -1;

/// Dense univariate polynomial in lambda over Q(i), coefficients in
/// ascending degree. The coefficient vector is always trimmed, so the zero
/// polynomial is the empty vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(GaussRat constant);
  explicit Poly(std::vector<GaussRat> ascending);

  /// The polynomial lambda.
  static Poly x();
  static Poly monomial(GaussRat coeff, int degree);
  /// lambda - root
  static Poly linear_root(const GaussRat& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  const std::vector<GaussRat>& coeffs() const { return c_; }
  /// Coefficient of lambda^k, zero past the degree.
  GaussRat coeff(int k) const;
  const GaussRat& leading() const { return c_.back(); }

  Poly monic() const;
  Poly derivative() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussRat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRat& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /// Quotient of a division known to be exact.
  Poly exact_div(const Poly& divisor) const;

  GaussRat eval(const GaussRat& z) const;
  std::complex<double> eval(std::complex<double> z) const;
  /// Sum of |c_k| |z|^k; the scale against which eval(z) is judged small.
  double eval_scale(std::complex<double> z) const;
  std::vector<std::complex<double>> to_complex() const;

  /// Lexicographic total order (degree first), used for deterministic sorting.
  friend int compare(const Poly& a, const Poly& b);

  /// Debug rendering with rational coefficients.
  std::string to_string() const;

 private:
  void trim();
  std::vector<GaussRat> c_;
};

/// Monic greatest common divisor; gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

/// Product of the distinct irreducible factors of p, made monic.
Poly squarefree_part(const Poly& p);

struct SquarefreeFactor {
  Poly factor;  // monic, square-free
  int multiplicity;
};

/// Yun's algorithm: p = c * prod f_i^{m_i} with pairwise coprime square-free
/// monic f_i, ordered by ascending multiplicity. Constants give an empty list.
/// Throws DivisionByZero for the zero polynomial.
std::vector<SquarefreeFactor> squarefree_decompose(const Poly& p);

}  // namespace isored
