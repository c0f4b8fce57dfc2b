#include <doctest.h>

#include "isored/reduce.hpp"
#include "isored/scc.hpp"
#include "isored/spectrum.hpp"
#include "test_util.hpp"

using namespace isored;
using isored::test::idx;
using isored::test::load;
using isored::test::rf;

namespace {

// Two directed unit 3-cycles a1a2a3 and b1b2b3 joined by a1 -> b1.
WeightedDigraph two_cycles(bool joined) {
  std::vector<RawEdge> es{{"a1", "a2", 1}, {"a2", "a3", 1}, {"a3", "a1", 1},
                          {"b1", "b2", 1}, {"b2", "b3", 1}, {"b3", "b1", 1}};
  if (joined) es.push_back({"a1", "b1", 5});
  return merge_parallel({"a1", "a2", "a3", "b1", "b2", "b3"}, es);
}

}  // namespace

TEST_CASE("component partition") {
  const auto g = load("hub6.json");
  CHECK(scc_partition(g).components.size() == 1);
  CHECK(scc_filter(g) == g);

  const auto dag = merge_parallel({"a", "b", "c", "d"}, {{"a", "b", 1}, {"b", "c", 1}, {"a", "d", 1}, {"d", "c", 1}});
  const auto p = scc_partition(dag);
  CHECK(p.components.size() == 4);
  CHECK(scc_filter(dag).edge_count() == 0);

  const auto single = merge_parallel({"a", "b"}, {{"a", "b", 1}});
  CHECK(scc_filter(single).edge_count() == 0);
  CHECK(scc_filter(single).size() == 2);
}

TEST_CASE("canonical component order") {
  const auto g = two_cycles(true);
  const auto p = scc_partition(g);
  REQUIRE(p.components.size() == 2);
  // The sink component b comes first, so every edge points to an earlier block.
  CHECK(labels_of(g, p.components[0]) == std::vector<std::string>{"b1", "b2", "b3"});
  CHECK(labels_of(g, p.components[1]) == std::vector<std::string>{"a1", "a2", "a3"});
  CHECK(is_block_lower_triangular(g, p));
  CHECK(labels_of(g, block_order(p)) == std::vector<std::string>{"b1", "b2", "b3", "a1", "a2", "a3"});
  CHECK(scc_filter(g) == two_cycles(false));
}

TEST_CASE("filtering keeps the spectrum") {
  const auto g = two_cycles(true);
  CHECK(char_det(scc_filter(g)) == char_det(g));
}

TEST_CASE("reduction of components") {
  const auto g = two_cycles(false);
  const auto s = idx(g, {"a1", "b1"});
  const auto r = reduce(g, s);
  CHECK(r.edge_count() == 2);
  CHECK(r.weight(0, 0) == rf("1/l^2"));
  CHECK(r.weight(1, 1) == rf("1/l^2"));
  CHECK(scc_partition(r).components.size() == 2);
  CHECK(reduced_scc_check(g, s).ok);

  const auto joined = two_cycles(true);
  CHECK(reduced_scc_check(joined, s).ok);
  CHECK(reduce(scc_filter(joined), s) == scc_filter(reduce(joined, s)));

  const auto h = load("hub6.json");
  CHECK(reduced_scc_check(h, idx(h, {"w2", "w5"})).ok);
}

TEST_CASE("branch sums that cancel break the commutation") {
  // i -> x -> j and i -> y -> j carry 2/l and -2/l, so R_S(G) has no edge i -> j
  // although G is strongly connected through j -> i.
  const auto g = merge_parallel({"i", "j", "x", "y"},
                                {{"i", "x", 2}, {"x", "j", 1}, {"i", "y", -2}, {"y", "j", 1}, {"j", "i", 1}});
  const auto s = idx(g, {"i", "j"});
  CHECK(scc_partition(g).components.size() == 1);
  const auto r = reduce(g, s);
  CHECK_FALSE(r.has_edge(0, 1));
  CHECK(r.has_edge(1, 0));
  CHECK(reduce(scc_filter(g), s) != scc_filter(r));
  const auto check = reduced_scc_check(g, s);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.report.empty());
  // The spectra still agree outside N.
  CHECK(spectra_equal_up_to(spectrum(g), spectrum(r), ForbiddenSet::roots_of(Poly::x()), 1e-9).equal);
}
