#include "isored/weight_format.hpp"

#include <cctype>

#include "isored/error.hpp"

namespace isored {

namespace {

class WeightParser {
 public:
  explicit WeightParser(std::string_view text) : s_(text) {}

  RatFun run() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty expression");
    RatFun value = expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    return value;
  }

 private:
  static constexpr unsigned kMaxExponent = 4096;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  RatFun expr() {
    RatFun acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFun term() {
    RatFun acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        RatFun d = factor();
        if (d.is_zero()) throw ParseError(at, "division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFun factor() {
    const bool negate = accept('-');
    RatFun a = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const mpz_class k = uint_literal();
      if (k > kMaxExponent) throw ParseError(at, "exponent too large");
      RatFun base = a;
      a = RatFun(1);
      for (unsigned long e = k.get_ui(); e > 0; --e) a *= base;
    }
    return negate ? -a : a;
  }

  RatFun atom() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "unexpected end of expression");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      GaussRat value = number();
      if (peek() == 'i') {
        ++pos_;
        value *= GaussRat::i();
      }
      return RatFun(value);
    }
    if (c == 'i') {
      ++pos_;
      return RatFun(GaussRat::i());
    }
    if (s_.substr(pos_, 6) == "lambda") {
      pos_ += 6;
      return RatFun::lambda();
    }
    if (c == 'l') {
      ++pos_;
      return RatFun::lambda();
    }
    if (s_.substr(pos_, 2) == "\xCE\xBB") {  // λ in UTF-8
      pos_ += 2;
      return RatFun::lambda();
    }
    if (c == '(') {
      ++pos_;
      RatFun inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  mpz_class uint_literal() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(pos_, "expected unsigned integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  GaussRat number() {
    const std::size_t start = pos_;
    mpz_class whole = 0;
    if (peek() != '.') whole = uint_literal();
    if (peek() == '.') {
      ++pos_;
      const std::size_t frac_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::size_t digits = pos_ - frac_start;
      if (digits == 0 && pos_ - start == 1) throw ParseError(start, "malformed decimal literal");
      mpz_class frac = digits ? mpz_class(std::string(s_.substr(frac_start, digits))) : mpz_class(0);
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
      return GaussRat(mpq_class(whole * scale + frac, scale));
    }
    // Greedy "a/b" literal: only when a digit follows the slash directly.
    if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      const std::size_t den_at = pos_;
      mpz_class den = uint_literal();
      if (den == 0) throw ParseError(den_at, "division by zero");
      return GaussRat(mpq_class(whole, den));
    }
    return GaussRat(mpq_class(whole));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string magnitude(const mpq_class& q) { return mpq_class(abs(q)).get_str(); }

// Returns the unsigned body of a coefficient and whether it carries a minus sign.
std::pair<std::string, bool> coefficient_text(const GaussRat& c) {
  if (c.is_real()) return {magnitude(c.re()), sgn(c.re()) < 0};
  if (sgn(c.re()) == 0) {
    const std::string m = abs(c.im()) == 1 ? "" : magnitude(c.im());
    return {m + "i", sgn(c.im()) < 0};
  }
  const std::string im = abs(c.im()) == 1 ? "" : magnitude(c.im());
  return {"(" + c.re().get_str() + (sgn(c.im()) > 0 ? "+" : "-") + im + "i)", false};
}

int term_count(const Poly& p) {
  int n = 0;
  for (const auto& c : p.coeffs()) n += c.is_zero() ? 0 : 1;
  return n;
}

}  // namespace

RatFun parse_weight(std::string_view text) { return WeightParser(text).run(); }

RatFun RatFun::parse(std::string_view text) { return parse_weight(text); }

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    auto [mag, negative] = coefficient_text(c[k]);
    std::string var = k == 0 ? "" : (k == 1 ? "l" : "l^" + std::to_string(k));
    std::string body;
    if (var.empty()) {
      body = mag;
    } else if (mag == "1") {
      body = var;
    } else {
      body = mag + "*" + var;
    }
    if (first) {
      out += (negative ? "-" : "") + body;
    } else {
      out += (negative ? "-" : "+") + body;
    }
    first = false;
  }
  return out;
}

std::string format_weight(const RatFun& w) {
  if (w.is_zero()) return "0";
  // Clear denominators jointly, then strip the integer content.
  mpz_class lcm_den = 1;
  auto absorb_den = [&](const Poly& p) {
    for (const auto& c : p.coeffs()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().get_den_mpz_t());
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.im().get_den_mpz_t());
    }
  };
  absorb_den(w.num());
  absorb_den(w.den());
  Poly num = w.num() * GaussRat(mpq_class(lcm_den));
  Poly den = w.den() * GaussRat(mpq_class(lcm_den));
  mpz_class content = 0;
  auto absorb_content = [&](const Poly& p) {
    for (const auto& c : p.coeffs()) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.re().get_num_mpz_t());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.im().get_num_mpz_t());
    }
  };
  absorb_content(num);
  absorb_content(den);
  if (content > 1) {
    const GaussRat inv(mpq_class(1, content));
    num *= inv;
    den *= inv;
  }

  if (den.is_one()) return format_poly(num);

  std::string den_text = format_poly(den);
  const bool den_atomic = term_count(den) == 1 && (den.is_constant() || den.leading().is_one());
  if (!den_atomic) den_text = "(" + den_text + ")";

  std::string num_text;
  if (term_count(num) == 1) {
    num_text = format_poly(num);
  } else if (num.leading().is_real() && sgn(num.leading().re()) < 0) {
    num_text = "-(" + format_poly(-num) + ")";
  } else {
    num_text = "(" + format_poly(num) + ")";
  }
  return num_text + "/" + den_text;
}

std::string RatFun::to_string() const { return format_weight(*this); }

}  // namespace isored
