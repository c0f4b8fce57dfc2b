#include <doctest.h>

#include <cmath>

#include "isored/reduce.hpp"
#include "isored/spectrum.hpp"
#include "isored/structural.hpp"
#include "test_util.hpp"

using namespace isored;
using isored::test::idx;
using isored::test::load;
using isored::test::rf;
using isored::test::spectrum_is;
using C = std::complex<double>;

TEST_CASE("characteristic determinants") {
  CHECK(char_det(merge_parallel({"a"}, {{"a", "a", 5}})) == rf("5-l"));
  CHECK(char_det(load("cycle3.json")) == rf("1-l^3"));
  CHECK(determinant(RatMatrix(0)).is_one());

  const auto k23 = load("k23.json");
  const auto r = reduce(k23, idx(k23, {"a1", "a2"}));
  CHECK(char_det(r) == rf("l^2-6"));
  CHECK(spectrum_is(spectrum(r), {std::sqrt(6.0), -std::sqrt(6.0)}));
  CHECK(spectrum_is(spectrum(k23), {std::sqrt(6.0), -std::sqrt(6.0), 0, 0, 0}));
}

TEST_CASE("worked example spectra") {
  const auto g = load("hub6.json");
  const auto h = load("hub4.json");
  CHECK(spectrum_is(spectrum(g), {2, -1, 1, 1, 0, 0}));
  CHECK(spectrum_is(spectrum(h), {2, -1, 1, 0}));
  const auto rg = reduce(g, idx(g, {"w2", "w5"}));
  const auto rh = reduce(h, idx(h, {"v1", "v4"}));
  CHECK(spectrum_is(spectrum(rg), {2, -1}));
  CHECK(spectrum_is(spectrum(rh), {2, -1}));

  const auto s = spectrum(g);
  REQUIRE(s.entries.size() == 4);
  CHECK(s.total() == 6);
  int mult_at_one = 0;
  for (const auto& e : s.entries)
    if (std::abs(e.root - C(1)) < 1e-12) mult_at_one = e.multiplicity;
  CHECK(mult_at_one == 2);
}

TEST_CASE("empty and complex spectra") {
  CHECK(spectrum(WeightedDigraph()).entries.empty());
  const auto rot = merge_parallel({"a", "b"}, {{"a", "b", 1}, {"b", "a", -1}});
  CHECK(spectrum_is(spectrum(rot), {C(0, 1), C(0, -1)}));
  const auto gauss = merge_parallel({"a"}, {{"a", "a", rf("2+3i")}});
  CHECK(spectrum_is(spectrum(gauss), {C(2, 3)}));
}

TEST_CASE("spectrum minus a forbidden set") {
  const auto g = load("hub6.json");
  const auto n = ForbiddenSet::roots_of(rf("l*(l-1)").num());
  CHECK(spectrum_is(spectrum_minus(spectrum(g), n), {2, -1}));
  CHECK(spectrum_is(spectrum_minus(spectrum(g), ForbiddenSet()), {2, -1, 1, 1, 0, 0}));
  const auto zeros = merge_parallel({"a", "b"}, {});
  CHECK(spectrum_minus(spectrum(zeros), ForbiddenSet::roots_of(Poly::x())).entries.empty());
}

TEST_CASE("spectra comparison") {
  const auto g = load("hub6.json");
  const auto s = idx(g, {"w2", "w5"});
  CHECK(spectra_equal_up_to(spectrum(g), spectrum(reduce(g, s)), forbidden_set(g, s), 1e-9).equal);
  CHECK(spectra_equal_up_to(spectrum(g), spectrum(g), ForbiddenSet(), 1e-9).equal);
  CHECK_FALSE(spectra_equal_up_to(spectrum(g), spectrum(reduce(g, s)), ForbiddenSet(), 1e-9).equal);

  const auto two = merge_parallel({"a"}, {{"a", "a", 2}});
  const auto three = merge_parallel({"a"}, {{"a", "a", 3}});
  const auto cmp = spectra_equal_up_to(spectrum(two), spectrum(three), ForbiddenSet(), 1e-9);
  CHECK_FALSE(cmp.equal);
  REQUIRE(cmp.unmatched_first.size() == 1);
  CHECK(std::abs(cmp.unmatched_first[0] - C(2)) < 1e-12);
  CHECK(cmp.report().find('3') != std::string::npos);
}

TEST_CASE("point matching falls back from greedy pairing") {
  // Greedy pairing takes 1.0 with 0.9 first and strands 0.5 against 1.4;
  // the matching 0.5-0.9, 1.0-1.4 stays within 0.45.
  const std::vector<C> a{0.5, 1.0};
  const std::vector<C> b{0.9, 1.4};
  CHECK(match_points(a, b, 0.45).equal);
  CHECK_FALSE(match_points(a, b, 0.3).equal);
}

TEST_CASE("complex formatting") {
  CHECK(format_complex(2.0) == "2");
  CHECK(format_complex(C(0, -1)) == "-1i");
  CHECK(format_complex(std::sqrt(2.0)) == "1.41421356237");
}
