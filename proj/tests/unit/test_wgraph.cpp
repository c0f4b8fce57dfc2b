#include <doctest.h>

#include "isored/error.hpp"
#include "isored/graph.hpp"
#include "isored/json_io.hpp"
#include "isored/reduce.hpp"
#include "test_util.hpp"

using namespace isored;
using isored::test::load;
using isored::test::rf;

TEST_CASE("from_undirected") {
  SUBCASE("K3 gives six unit edges") {
    const auto g = from_undirected({"v1", "v2", "v3"}, {{"v1", "v2", {}}, {"v1", "v3", {}}, {"v2", "v3", {}}});
    CHECK(g.edge_count() == 6);
    for (int v = 0; v < 3; ++v) CHECK_FALSE(g.has_loop(v));
    for (const auto& e : g.edges()) CHECK(e.weight.is_one());
  }
  SUBCASE("weighted edge in both directions") {
    const auto g = from_undirected({"a", "b"}, {{"a", "b", rf("1/l")}});
    CHECK(g.weight(0, 1) == rf("1/l"));
    CHECK(g.weight(1, 0) == rf("1/l"));
  }
  SUBCASE("K23 from file") {
    const auto g = load("k23.json");
    CHECK(g.size() == 5);
    CHECK(g.edge_count() == 12);
    CHECK(g.has_edge(g.index_of("b2"), g.index_of("a1")));
    CHECK_FALSE(g.has_edge(g.index_of("b2"), g.index_of("b1")));
  }
  CHECK_THROWS_AS(from_undirected({"a", "b"}, {{"a", "b", {}}, {"b", "a", {}}}), Error);
}

TEST_CASE("merge_parallel") {
  CHECK(merge_parallel({"a", "b"}, {{"a", "b", 1}, {"a", "b", 1}}).weight(0, 1) == RatFun(2));
  CHECK(merge_parallel({"a", "b"}, {{"a", "b", rf("1/l")}, {"a", "b", rf("-1/l")}}).edge_count() == 0);
  const auto loop = merge_parallel({"a"}, {{"a", "a", rf("1/(l-1)")}});
  CHECK(loop.weight(0, 0) == rf("1/(l-1)"));
}

TEST_CASE("adjacency matrix") {
  const auto one = merge_parallel({"x"}, {{"x", "x", 5}});
  CHECK(adjacency_matrix(one)(0, 0) == RatFun(5));

  const auto two = merge_parallel({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}});
  const auto m = adjacency_matrix(two);
  CHECK(m(0, 0).is_zero());
  CHECK(m(0, 1).is_one());
  CHECK(m(1, 0).is_one());
  CHECK(m(1, 1).is_zero());

  const auto k23 = load("k23.json");
  const auto r = adjacency_matrix(reduce(k23, isored::test::idx(k23, {"a1", "a2"})));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(r(i, j) == rf("3/l"));

  CHECK(from_matrix({"a", "b"}, m) == two);
}

TEST_CASE("loopless and transpose") {
  const auto only_loops = merge_parallel({"a", "b"}, {{"a", "a", 1}, {"b", "b", rf("l")}});
  CHECK(loopless(only_loops).edge_count() == 0);
  CHECK(loopless(only_loops).size() == 2);
  const auto h = load("fork4.json");
  CHECK(loopless(h) == h);

  const auto k3 = load("k3.json");
  CHECK(transpose(k3) == k3);
  const auto single = merge_parallel({"a", "b"}, {{"a", "b", rf("2/l")}});
  const auto t = transpose(single);
  CHECK(t.edge_count() == 1);
  CHECK(t.weight(1, 0) == rf("2/l"));
  const auto g = load("hub6.json");
  CHECK(transpose(transpose(g)) == g);
}

TEST_CASE("builder") {
  GraphBuilder b;
  const int x = b.add_vertex("x");
  const int y = b.add_vertex("y");
  CHECK_THROWS_AS(b.add_vertex("x"), Error);
  b.add_to_edge(x, y, rf("1/l"));
  b.add_to_edge(x, y, rf("-1/l"));
  CHECK(b.build().edge_count() == 0);
  b.set_edge(y, y, 3);
  const auto g = b.build();
  CHECK(g.has_loop(y));
  CHECK(g.out_degree(y) == 1);
  CHECK(g.in_degree(y) == 1);
  CHECK_THROWS_AS(g.index_of("z"), Error);
  CHECK_THROWS_AS(indices_of(g, {"x", "x"}), Error);
  CHECK(complement(g, {y}) == std::vector<int>{x});
}

TEST_CASE("graph JSON") {
  SUBCASE("round trip is exact and stable") {
    for (const char* name : {"hub6.json", "hub4.json", "fork6.json", "k23.json", "cycle3.json"}) {
      CAPTURE(name);
      const auto g = load(name);
      const std::string text = write_graph_json(g);
      const auto back = parse_graph_json(text);
      CHECK(back == g);
      CHECK(back.labels() == g.labels());
      CHECK(write_graph_json(back) == text);
    }
  }
  SUBCASE("weights in any accepted form") {
    const auto g = parse_graph_json(R"J({"vertices":["a","b"],"edges":[
      {"from":"a","to":"b","weight":"(λ+1)/λ"},{"from":"b","to":"a","weight":2},{"from":"b","to":"b","weight":"1/2i"}]})J");
    CHECK(g.weight(0, 1) == rf("(l+1)/l"));
    CHECK(g.weight(1, 0) == RatFun(2));
    CHECK(g.weight(1, 1) == rf("i/2"));
    CHECK(write_graph_json(g).find("\"(l+1)/l\"") != std::string::npos);
  }
  SUBCASE("errors") {
    auto kind_of = [](const char* text) {
      try {
        parse_graph_json(text);
      } catch (const Error& e) {
        return e.kind();
      }
      FAIL("no error");
      return ErrorKind::Parse;
    };
    const char* unknown = R"J({"vertices":["a"],"edges":[{"from":"a","to":"q","weight":"1"}]})J";
    const char* dup_vertex = R"J({"vertices":["a","a"],"edges":[]})J";
    const char* dup_edge =
        R"J({"vertices":["a"],"edges":[{"from":"a","to":"a","weight":"1"},{"from":"a","to":"a","weight":"2"}]})J";
    const char* bad_weight = R"J({"vertices":["a"],"edges":[{"from":"a","to":"a","weight":"1/(l-l)"}]})J";
    const char* no_weight = R"J({"vertices":["a"],"edges":[{"from":"a","to":"a"}]})J";
    CHECK(kind_of("{") == ErrorKind::Parse);
    CHECK(kind_of(unknown) == ErrorKind::UnknownVertex);
    CHECK(kind_of(dup_vertex) == ErrorKind::DuplicateVertex);
    CHECK(kind_of(dup_edge) == ErrorKind::DuplicateEdge);
    CHECK(kind_of(bad_weight) == ErrorKind::Parse);
    CHECK(kind_of(no_weight) == ErrorKind::Parse);
  }
  SUBCASE("merge_parallel flag sums duplicates") {
    const auto g = parse_graph_json(R"J({"vertices":["a"],"merge_parallel":true,
      "edges":[{"from":"a","to":"a","weight":"1"},{"from":"a","to":"a","weight":"2"}]})J");
    CHECK(g.weight(0, 0) == RatFun(3));
  }
}

TEST_CASE("set sequence JSON") {
  const auto seq = parse_set_sequence_json(R"J([["w2","w5"],["w2"]])J");
  REQUIRE(seq.size() == 2);
  CHECK(seq[1] == std::vector<std::string>{"w2"});
  const char* flat = R"J(["w2"])J";
  CHECK_THROWS_AS(parse_set_sequence_json(flat), Error);
}
