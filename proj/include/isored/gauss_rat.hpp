#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace isored {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return im_ == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }
  /// True when both parts have denominator 1.
  bool is_gaussian_integer() const {
    return re_.get_den() == 1 && im_.get_den() == 1;
  }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  /// Caller guarantees `o` is nonzero.
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_real()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    mpq_class n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order: real part first, then imaginary part.
  friend int compare(const GaussRat& a, const GaussRat& b) {
    if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(a.im_, b.im_); c != 0) return c < 0 ? -1 : 1;
    return 0;
  }

  /// Debug rendering, e.g. "3/2", "-i", "(1/2+3i)".
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

}  // namespace isored
