#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "seidelab/graph.hpp"

using namespace seidelab;

TEST_CASE("graph construction and edges") {
  Graph g(4);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 0);
  g.set_edge(0, 3);
  CHECK(g.adjacent(0, 3));
  CHECK(g.adjacent(3, 0));
  CHECK(g.degree(0) == 1);
  g.toggle_edge(0, 3);
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK_THROWS_AS(g.set_edge(1, 1), std::invalid_argument);
  CHECK_THROWS(Graph(0));
  CHECK_THROWS(Graph(65));
  CHECK(Graph::complete(6).edge_count() == 15);
  CHECK(Graph(64).order() == 64);
}

TEST_CASE("induced subgraph and relabelling") {
  const Graph p = oracle::path(4);
  const Graph sub = p.induced(vertex_bit(1) | vertex_bit(2) | vertex_bit(3));
  CHECK(sub == oracle::path(3));
  const Graph q = p.permuted({3, 2, 1, 0});
  CHECK(q == p);
  const Graph r = p.permuted({1, 0, 2, 3});
  CHECK(r.adjacent(1, 0));
  CHECK(r.adjacent(0, 2));
  CHECK(oracle::isomorphic(p, r));
}

TEST_CASE("graph6 decoding") {
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3 == Graph::complete(3));

  const Graph p = parse_graph6("Bg");
  CHECK(p.adjacent(0, 1));
  CHECK_FALSE(p.adjacent(0, 2));
  CHECK(p.adjacent(1, 2));

  const Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);
}

TEST_CASE("graph6 encoding") {
  CHECK(encode_graph6(Graph::complete(3)) == "Bw");
  CHECK(encode_graph6(Graph(3)) == "B?");
  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(encode_graph6(oracle::cycle(5)) == "Dhc");
  CHECK_THROWS_AS(encode_graph6(Graph(63)), std::out_of_range);
}

TEST_CASE("graph6 errors carry the byte offset") {
  auto offset_of = [](std::string_view s) -> long {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("?") == 0);          // n = 0
  CHECK(offset_of("B") == 1);          // missing edge byte
  CHECK(offset_of("Bww") == 2);        // trailing byte
  CHECK(offset_of("B\x7f") == 1);      // byte above 126
  CHECK(offset_of("B ") == 1);         // byte below 63
  CHECK(offset_of("Bx") == 1);         // padding bit set
  CHECK(offset_of("~??") == 0);        // multi-byte header unsupported
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    const Graph g = oracle::random_graph(n, rng);
    const std::string s = encode_graph6(g);
    CHECK(s.size() == 1 + (graph6_bit_count(n) + 5) / 6);
    CHECK(parse_graph6(s) == g);
  }
}

TEST_CASE("graph6 strings of order 4 are all distinct") {
  std::set<std::string> seen;
  for (unsigned mask = 0; mask < 64; ++mask) {
    Graph g(4);
    int bit = 0;
    for (int j = 1; j < 4; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if ((mask >> bit) & 1U) g.set_edge(i, j);
    seen.insert(encode_graph6(g));
  }
  CHECK(seen.size() == 64);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(3)) == Graph(3));
  const Graph c5 = oracle::cycle(5);
  CHECK(complement(complement(c5)) == c5);
  CHECK(complement(c5).edge_count() == 5);
  CHECK(oracle::isomorphic(complement(c5), c5));
  CHECK_FALSE(oracle::isomorphic(complement(oracle::path(4)), oracle::cycle(4)));
}

TEST_CASE("Seidel matrix entries") {
  const SeidelMatrix k2 = seidel_matrix(Graph::complete(2));
  CHECK(k2(0, 1) == -1);
  CHECK(k2(1, 0) == -1);
  CHECK(k2(0, 0) == 0);

  const SeidelMatrix e2 = seidel_matrix(Graph(2));
  CHECK(e2(0, 1) == 1);

  const SeidelMatrix p = seidel_matrix(oracle::path(3));
  const std::vector<std::int8_t> expected = {0, -1, 1, -1, 0, -1, 1, -1, 0};
  CHECK(p.entries() == expected);
}

TEST_CASE("Seidel matrix validation") {
  CHECK_THROWS(SeidelMatrix(2, {1, 1, 1, 0}));
  CHECK_THROWS(SeidelMatrix(2, {0, 1, -1, 0}));
  CHECK_THROWS(SeidelMatrix(2, {0, 2, 2, 0}));
  CHECK_THROWS(SeidelMatrix(2, {0, 1, 1}));
  CHECK_NOTHROW(SeidelMatrix(2, {0, -1, -1, 0}));
}
