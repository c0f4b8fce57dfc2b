#pragma once

#include <complex>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "isored/poly.hpp"

namespace isored {

/// deg(num) - deg(den), with a distinguished negative infinity for the zero
/// function so that "pi <= 0" holds vacuously for absent edges.
class PiDegree {
 public:
  static PiDegree neg_inf() { return PiDegree(); }
  static PiDegree of(int value) { return PiDegree(value); }

  bool is_neg_inf() const { return neg_inf_; }
  /// Only meaningful when !is_neg_inf().
  int value() const { return value_; }

  friend PiDegree operator+(PiDegree a, PiDegree b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_inf();
    return of(a.value_ + b.value_);
  }
  friend bool operator==(PiDegree a, PiDegree b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(PiDegree a, PiDegree b) {
    if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
    return a.value_ <=> b.value_;
  }
  friend bool operator<=(PiDegree a, int b) { return a.neg_inf_ || a.value_ <= b; }
  friend bool operator<(PiDegree a, int b) { return a.neg_inf_ || a.value_ < b; }

  std::string to_string() const { return neg_inf_ ? "-inf" : std::to_string(value_); }

 private:
  PiDegree() = default;
  explicit PiDegree(int v) : neg_inf_(false), value_(v) {}
  bool neg_inf_ = true;
  int value_ = 0;
};

/// Element of the field of rational functions in lambda over Q(i).
///
/// Always canonical: gcd(num, den) = 1, den monic, zero is 0/1. Structural
/// equality therefore coincides with field equality.
class RatFun {
 public:
  RatFun() : den_(GaussRat(1)) {}
  RatFun(GaussRat constant) : num_(std::move(constant)), den_(GaussRat(1)) {}  // NOLINT
  RatFun(long constant) : RatFun(GaussRat(constant)) {}                        // NOLINT
  explicit RatFun(Poly p) : num_(std::move(p)), den_(GaussRat(1)) {}

  /// num/den reduced to canonical form; throws DivisionByZero when den = 0.
  static RatFun from_parts(Poly num, Poly den);
  /// The identity function lambda.
  static RatFun lambda() { return RatFun(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// The constant value; only valid when is_constant().
  GaussRat constant_value() const { return num_.is_zero() ? GaussRat() : num_.coeffs()[0]; }

  PiDegree pi() const {
    if (num_.is_zero()) return PiDegree::neg_inf();
    return PiDegree::of(num_.degree() - den_.degree());
  }

  /// Value at z, or nullopt at (numerical) poles.
  std::optional<std::complex<double>> eval(std::complex<double> z) const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Multiplicative inverse; throws DivisionByZero for zero.
  RatFun inverse() const;

  /// Deterministic total order used for sorting weight sequences.
  friend int compare(const RatFun& a, const RatFun& b) {
    if (int c = compare(a.num_, b.num_); c != 0) return c;
    return compare(a.den_, b.den_);
  }

  /// Normalized "num/den" string in the weight grammar (see weight_format.hpp).
  std::string to_string() const;
  /// Parses the weight grammar; throws ParseError.
  static RatFun parse(std::string_view text);

 private:
  RatFun(Poly num, Poly den, int /*already canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

}  // namespace isored
