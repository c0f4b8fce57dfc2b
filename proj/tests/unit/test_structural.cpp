#include <doctest.h>

#include "isored/error.hpp"
#include "isored/laplacian.hpp"
#include "isored/reduce.hpp"
#include "isored/structural.hpp"
#include "test_util.hpp"

using namespace isored;
using isored::test::idx;
using isored::test::load;
using isored::test::rf;

namespace {

WeightedDigraph directed_cycle(int n) {
  GraphBuilder b;
  for (int k = 1; k <= n; ++k) b.add_vertex("c" + std::to_string(k));
  for (int k = 0; k < n; ++k) b.set_edge(k, (k + 1) % n, 1);
  return b.build();
}

}  // namespace

TEST_CASE("structural sets") {
  const auto g = load("hub6.json");
  CHECK(is_structural_set(g, idx(g, {"w2", "w5"})));
  CHECK(is_structural_set(g, complement(g, {})));

  const auto k3 = load("k3.json");
  const auto check = check_structural_set(k3, idx(k3, {"v1"}));
  CHECK_FALSE(check.ok);
  CHECK(check.cycle.size() == 2);
  CHECK(check.diagnostic.find("v2") != std::string::npos);
  CHECK(check.diagnostic.find("v3") != std::string::npos);
  CHECK_THROWS_AS(require_structural_set(k3, idx(k3, {"v1"})), Error);
  CHECK_FALSE(is_structural_set(k3, {}));

  SUBCASE("a loop equal to lambda is rejected") {
    const auto lam = merge_parallel({"a", "b"}, {{"a", "b", 1}, {"b", "b", rf("l")}});
    const auto c = check_structural_set(lam, {0});
    CHECK_FALSE(c.ok);
    REQUIRE(c.lambda_loop.has_value());
    CHECK(*c.lambda_loop == 1);
  }
  SUBCASE("a loop in the complement is allowed") {
    const auto looped = merge_parallel({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}, {"b", "b", 3}});
    CHECK(is_structural_set(looped, {0}));
  }
}

TEST_CASE("forbidden sets") {
  const auto g = load("hub6.json");
  const auto n = forbidden_set(g, idx(g, {"w2", "w5"}));
  CHECK(n == ForbiddenSet::roots_of(rf("l*(l-1)").num()));
  CHECK(n.size() == 2);
  CHECK(n.contains(0.0, 1e-12));
  CHECK(n.contains(1.0, 1e-12));
  CHECK(forbidden_set(g, complement(g, {})).empty());

  const auto lk3 = combinatorial_laplacian_graph(load("k3.json"));
  CHECK(forbidden_set(lk3, idx(lk3, {"v1", "v2"})) == ForbiddenSet::roots_of(rf("l-2").num()));

  SUBCASE("rational loops contribute the roots of q(lambda q - p)") {
    const auto h = merge_parallel({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}, {"b", "b", rf("1/(l-3)")}});
    const auto nb = forbidden_set(h, {0});
    CHECK(nb == ForbiddenSet::roots_of(rf("(l-3)*(l*(l-3)-1)").num()));
  }
  SUBCASE("union and subset") {
    const auto a = ForbiddenSet::roots_of(rf("l*(l-1)").num());
    const auto b = ForbiddenSet::roots_of(rf("(l-1)^2*(l+i)").num());
    const auto u = a | b;
    CHECK(u.size() == 3);
    CHECK(a.subset_of(u));
    CHECK_FALSE(u.subset_of(a));
    CHECK(u.contains({0, -1}, 1e-12));
  }
}

TEST_CASE("basic structural set") {
  const auto k23 = load("k23.json");
  CHECK(basic_structural_set(k23).size() == 5);

  const auto single = merge_parallel({"x"}, {{"x", "x", 1}});
  CHECK(basic_structural_set(single) == std::vector<int>{0});

  const auto cyc = directed_cycle(5);
  CHECK(basic_structural_set(cyc).size() == 5);
  CHECK(high_out_degree_vertices(cyc).empty());

  const auto g = load("hub6.json");
  CHECK(labels_of(g, basic_structural_set(g)) == std::vector<std::string>{"w1", "w2", "w3", "w5"});

  SUBCASE("no cycles and no branching") {
    const auto path = merge_parallel({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}});
    try {
      basic_structural_set(path);
      FAIL("expected EmptyBas");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyBas);
    }
  }
  SUBCASE("a cycle through a branching vertex is not simple") {
    const auto lasso = merge_parallel({"a", "b", "c"}, {{"a", "b", 1}, {"b", "a", 1}, {"b", "c", 1}});
    CHECK(labels_of(lasso, basic_structural_set(lasso)) == std::vector<std::string>{"b"});
  }
}

TEST_CASE("G_pi membership") {
  CHECK(is_g_pi(load("hub6.json")));
  CHECK(is_g_pi(merge_parallel({"a"}, {{"a", "a", rf("2+3i")}})));
  CHECK_FALSE(is_g_pi(merge_parallel({"a", "b"}, {{"a", "b", rf("l+1")}})));
  const auto g = load("hub6.json");
  CHECK(is_g_pi(reduce(g, idx(g, {"w2", "w5"}))));
  CHECK_THROWS_AS(require_g_pi(merge_parallel({"a"}, {{"a", "a", rf("l^2/(l+1)")}})), Error);
}

TEST_CASE("brute-force cycle listing") {
  const auto k3 = load("k3.json");
  // Three 2-cycles and two orientations of the triangle.
  CHECK(simple_cycles_bruteforce(k3, complement(k3, {})).size() == 5);
  CHECK(simple_cycles_bruteforce(k3, {0}).empty());
  CHECK(simple_cycles_bruteforce(directed_cycle(4), complement(directed_cycle(4), {})).size() == 1);
}
