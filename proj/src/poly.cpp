#include "isored/poly.hpp"

#include <algorithm>
#include <sstream>

#include "isored/error.hpp"

namespace isored {

std::string GaussRat::to_string() const {
  if (is_real()) return re_.get_str();
  std::string im_str;
  if (im_ == 1) {
    im_str = "i";
  } else if (im_ == -1) {
    im_str = "-i";
  } else {
    im_str = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return im_str;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + im_str + ")";
}

Poly::Poly(GaussRat constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<GaussRat> ascending) : c_(std::move(ascending)) { trim(); }

Poly Poly::x() { return Poly(std::vector<GaussRat>{0, 1}); }

Poly Poly::monomial(GaussRat coeff, int degree) {
  if (coeff.is_zero()) return {};
  std::vector<GaussRat> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return Poly(std::move(c));
}

Poly Poly::linear_root(const GaussRat& root) { return Poly(std::vector<GaussRat>{-root, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::monic() const {
  if (c_.empty() || leading().is_one()) return *this;
  GaussRat inv = GaussRat(1) / leading();
  Poly out = *this;
  for (auto& c : out.c_) c *= inv;
  return out;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussRat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * GaussRat(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.c_.size() == 1) return b * a.c_[0];
  if (b.c_.size() == 1) return a * b.c_[0];
  std::vector<GaussRat> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const GaussRat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly(), *this};
  const int dd = divisor.degree();
  std::vector<GaussRat> rem = c_;
  std::vector<GaussRat> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const GaussRat inv_lead = GaussRat(1) / divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    const GaussRat& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussRat q = top * inv_lead;
    const int shift = k - dd;
    for (int j = 0; j <= dd; ++j) {
      const auto& dc = divisor.c_[static_cast<std::size_t>(j)];
      if (!dc.is_zero()) rem[static_cast<std::size_t>(shift + j)] -= q * dc;
    }
    quot[static_cast<std::size_t>(shift)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& divisor) const {
  if (divisor.is_one()) return *this;
  return divmod(divisor).first;
}

GaussRat Poly::eval(const GaussRat& z) const {
  GaussRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

double Poly::eval_scale(std::complex<double> z) const {
  double acc = 0;
  const double r = std::abs(z);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + std::abs(it->to_complex());
  return acc;
}

std::vector<std::complex<double>> Poly::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_complex());
  return out;
}

int compare(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
  for (std::size_t k = a.c_.size(); k-- > 0;) {
    if (int c = compare(a.c_[k], b.c_[k]); c != 0) return c;
  }
  return 0;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].to_string();
    if (k >= 1) os << "*l";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return Poly(GaussRat(1));
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_constant()) return p.is_zero() ? p : Poly(GaussRat(1));
  return p.exact_div(gcd(p, p.derivative())).monic();
}

std::vector<SquarefreeFactor> squarefree_decompose(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::DivisionByZero, "square-free decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  const Poly f = p.monic();
  const Poly df = f.derivative();
  const Poly a0 = gcd(f, df);
  Poly b = f.exact_div(a0);
  Poly c = df.exact_div(a0);
  Poly d = c - b.derivative();
  int mult = 1;
  while (!b.is_constant()) {
    Poly a = gcd(b, d);
    if (!a.is_constant()) out.push_back({a, mult});
    b = b.exact_div(a);
    c = d.exact_div(a);
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

}  // namespace isored
