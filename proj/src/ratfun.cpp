#include "isored/ratfun.hpp"

#include "isored/error.hpp"

namespace isored {

RatFun RatFun::from_parts(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return RatFun();
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  if (!den.is_monic()) {
    GaussRat inv = GaussRat(1) / den.leading();
    num *= inv;
    den *= inv;
  }
  return RatFun(std::move(num), std::move(den), 0);
}

std::optional<std::complex<double>> RatFun::eval(std::complex<double> z) const {
  const std::complex<double> d = den_.eval(z);
  if (std::abs(d) <= 1e-12 * den_.eval_scale(z)) return std::nullopt;
  return num_.eval(z) / d;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, 0); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    return *this = from_parts(num_ + o.num_, den_);
  }
  // Henrici: with g = gcd(q, s), only g can share factors with the new numerator.
  const Poly g = gcd(den_, o.den_);
  if (g.is_one()) {
    Poly n = num_ * o.den_ + o.num_ * den_;
    if (n.is_zero()) return *this = RatFun();
    Poly d = den_ * o.den_;
    return *this = RatFun(std::move(n), std::move(d), 0);
  }
  const Poly q_g = den_.exact_div(g);
  const Poly s_g = o.den_.exact_div(g);
  Poly t = num_ * s_g + o.num_ * q_g;
  if (t.is_zero()) return *this = RatFun();
  const Poly h = gcd(t, g);
  Poly n = t.exact_div(h);
  Poly d = q_g * o.den_.exact_div(h);
  return *this = from_parts(std::move(n), std::move(d));
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel: gcd(p, s) and gcd(r, q) remove every common factor.
  const Poly g1 = gcd(num_, o.den_);
  const Poly g2 = gcd(o.num_, den_);
  Poly n = num_.exact_div(g1) * o.num_.exact_div(g2);
  Poly d = den_.exact_div(g2) * o.den_.exact_div(g1);
  return *this = from_parts(std::move(n), std::move(d));
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero rational function");
  return from_parts(den_, num_);
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

}  // namespace isored
