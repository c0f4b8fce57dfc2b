#include <doctest.h>

#include "isored/error.hpp"
#include "isored/poly.hpp"
#include "isored/ratfun.hpp"
#include "isored/weight_format.hpp"
#include "test_util.hpp"

using namespace isored;
using isored::test::rf;

TEST_CASE("addition cancels to canonical form") {
  CHECK(rf("1/l") + rf("(l-1)/l") == RatFun(1));
  CHECK((rf("1/l") + rf("(l-1)/l")).is_one());
  CHECK(rf("1/(l-1)") + RatFun() == rf("1/(l-1)"));
  const RatFun kn = RatFun(1) + rf("1/l");
  CHECK(kn.num() == Poly(std::vector<GaussRat>{1, 1}));
  CHECK(kn.den() == Poly::x());
  CHECK(kn.to_string() == "(l+1)/l");
}

TEST_CASE("multiplication and division") {
  CHECK((rf("(l+1)/l") * rf("l/(l+1)")).is_one());
  CHECK(rf("(l^2-1)/(l-2)") * rf("1/(l+1)") == rf("(l-1)/(l-2)"));
  CHECK((rf("3/l") * rf("3/l")).to_string() == "9/l^2");
  CHECK(RatFun(1) / rf("l-1") == rf("1/(l-1)"));
  CHECK((rf("(l+1)/l") / rf("(l+1)/l")).is_one());
  CHECK(rf("l^2-1") / rf("l-1") == rf("l+1"));
  CHECK((rf("l^2-1") / rf("l-1")).is_polynomial());
  CHECK_THROWS_AS(RatFun(1) / RatFun(), Error);
  CHECK_THROWS_AS(RatFun().inverse(), Error);
}

TEST_CASE("canonical representation") {
  const RatFun a = RatFun::from_parts(Poly(std::vector<GaussRat>{-2, 2}), Poly(std::vector<GaussRat>{0, 0, 4}));
  CHECK(a.den().is_monic());
  CHECK(a == rf("(l-1)/(2*l^2)"));
  CHECK(RatFun::from_parts(Poly(), Poly::x()).den().is_one());
  CHECK_THROWS_AS(RatFun::from_parts(Poly::x(), Poly()), Error);
}

TEST_CASE("evaluation") {
  CHECK(std::abs(*rf("1/l").eval(2.0) - 0.5) < 1e-15);
  CHECK_FALSE(rf("1/l").eval(0.0).has_value());
  CHECK(std::abs(*rf("(l+1)/l").eval(1.0) - 2.0) < 1e-15);
  CHECK(std::abs(*rf("i*l").eval({0, 1}) - std::complex<double>(-1, 0)) < 1e-15);
}

TEST_CASE("pi degree") {
  CHECK(rf("(l+1)/l").pi() == PiDegree::of(0));
  CHECK(rf("1/(l-1)").pi() == PiDegree::of(-1));
  CHECK(rf("l^2+1").pi() == PiDegree::of(2));
  CHECK(RatFun().pi().is_neg_inf());
  CHECK(RatFun().pi() <= 0);
  CHECK(RatFun().pi() < rf("1/l^5").pi());
}

TEST_CASE("square-free decomposition") {
  SUBCASE("l^2 (l-1)") {
    const auto d = squarefree_decompose(parse_weight("l^2*(l-1)").num());
    REQUIRE(d.size() == 2);
    CHECK(d[0].factor == parse_weight("l-1").num());
    CHECK(d[0].multiplicity == 1);
    CHECK(d[1].factor == Poly::x());
    CHECK(d[1].multiplicity == 2);
  }
  SUBCASE("l^3 - 1 is square-free") {
    const auto d = squarefree_decompose(parse_weight("l^3-1").num());
    REQUIRE(d.size() == 1);
    CHECK(d[0].multiplicity == 1);
    CHECK(d[0].factor.degree() == 3);
  }
  SUBCASE("(l-2)^2") {
    const auto d = squarefree_decompose(parse_weight("(l-2)^2").num());
    REQUIRE(d.size() == 1);
    CHECK(d[0].factor == parse_weight("l-2").num());
    CHECK(d[0].multiplicity == 2);
  }
  CHECK(squarefree_part(parse_weight("3*(l-2)^2*(l+i)").num()) == parse_weight("(l-2)*(l+i)").num());
}

TEST_CASE("gcd over Q(i)") {
  const Poly a = parse_weight("(l-i)*(l+2)").num();
  const Poly b = parse_weight("(l-i)*(l-5)").num();
  CHECK(gcd(a, b) == parse_weight("l-i").num());
  CHECK(gcd(a, Poly(GaussRat(7))).is_one());
}

TEST_CASE("weight parsing") {
  const RatFun a = rf("(l+1)/l");
  CHECK(a.num() == Poly(std::vector<GaussRat>{1, 1}));
  CHECK(a.den() == Poly::x());

  const RatFun b = rf("-(l+3)/(l-2)");
  CHECK(b.num() == Poly(std::vector<GaussRat>{-3, -1}));
  CHECK(b.den() == Poly(std::vector<GaussRat>{-2, 1}));

  const RatFun c = rf("3/2 + 1i/2");
  REQUIRE(c.is_constant());
  CHECK(c.constant_value() == GaussRat(mpq_class(3, 2), mpq_class(1, 2)));

  CHECK(rf("lambda") == RatFun::lambda());
  CHECK(rf("\xCE\xBB^2") == rf("l*l"));
  CHECK(rf("1/2i") == RatFun(GaussRat(0, mpq_class(1, 2))));
  CHECK(rf("2/3^2") == RatFun(GaussRat(mpq_class(4, 9))));
  CHECK(rf("0.25") == RatFun(GaussRat(mpq_class(1, 4))));
  CHECK(rf(" 2 * ( l - 1 ) ") == rf("2*l-2"));
}

TEST_CASE("weight parse errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_weight(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("l+") == 2);
  CHECK(position_of("1/0") == 2);
  CHECK(position_of("1/(l-l)") == 2);
  CHECK(position_of("(l+1") == 4);
  CHECK(position_of("l $") == 2);
  CHECK(position_of("l^99999") == 2);
}

TEST_CASE("weight formatting round-trips") {
  for (const char* text : {"0", "1", "-1", "l", "-l", "1/l", "(l+1)/l", "-(l+3)/(l-2)", "(2*l-1)/(l-2)", "3i",
                           "(1+2i)*l^2-l", "1/(2*l)", "(l-1)/(3*l^2+1)", "1/(l^2-i)"}) {
    CAPTURE(text);
    const RatFun w = rf(text);
    CHECK(format_weight(w) == text);
    CHECK(parse_weight(format_weight(w)) == w);
  }
  CHECK(format_weight(rf("3/2")) == "3/2");
  CHECK(format_weight(rf("l/2+1/3")) == "(3*l+2)/6");
}
