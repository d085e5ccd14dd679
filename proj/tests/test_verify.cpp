#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "seidelab/search.hpp"
#include "seidelab/verify.hpp"

using namespace seidelab;

TEST_CASE("check names round trip") {
  for (CheckKind k : kAllChecks) CHECK(parse_check(check_name(k)) == k);
  CHECK_FALSE(parse_check("theorem3").has_value());
  CHECK(check_name(CheckKind::SkOddPairs) == "sk-oddpairs");
  CHECK(check_min_order(CheckKind::OddPairLower) == 4);
}

TEST_CASE("format_real uses 12 significant digits") {
  CHECK(format_real(4 * std::sqrt(5.0)) == "8.94427191");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(2.0) == "2");
}

TEST_CASE("basic S_k bound") {
  const auto k3 = verify_sk_basic(Graph::complete(3));
  REQUIRE(k3.size() == 3);
  CHECK(k3[0].lhs == "6");
  CHECK(k3[0].rhs == "6");
  CHECK(k3[0].margin == "0");
  CHECK(k3[0].pass);
  CHECK(k3[0].exact);
  CHECK(k3[1].lhs == "9");
  CHECK(k3[1].rhs == "6");
  CHECK(k3[1].k == 2);

  const auto c5 = verify_sk_basic(oracle::cycle(5));
  CHECK(c5[1].lhs == "150");
  CHECK(c5[1].rhs == "60");
  CHECK(c5[1].margin_value == 90.0);
  // k = n: bound n(n-1) C(n-2, n-1) = 0, and S_5 = det(A)^2 = 0 for C5.
  CHECK(c5[4].lhs == "0");
  CHECK(c5[4].rhs == "0");
  CHECK(c5[4].pass);

  CHECK_THROWS_AS(verify_sk_basic(Graph(1)), std::domain_error);
}

TEST_CASE("odd-pair refined S_k bound") {
  const auto c5 = verify_sk_oddpairs(oracle::cycle(5));
  REQUIRE(c5.size() == 5);
  CHECK(c5[1].rhs == "140");
  CHECK(c5[1].odd_pairs == 20u);
  CHECK(c5[1].pass);

  const auto edge = verify_sk_oddpairs(Graph::from_edges(4, {{0, 1}}));
  CHECK(edge[1].rhs == "40");
  CHECK(edge[1].pass);

  const auto k6 = verify_sk_oddpairs(Graph::complete(6));
  const auto basic = verify_sk_basic(Graph::complete(6));
  for (std::size_t i = 0; i < k6.size(); ++i) CHECK(k6[i].rhs == basic[i].rhs);

  CHECK_THROWS_AS(verify_sk_oddpairs(Graph(3)), std::domain_error);
}

TEST_CASE("odd-pair lower bound") {
  const auto k7 = verify_oddpair_lower(Graph::complete(7));
  CHECK(k7.pass);
  CHECK(k7.lhs == "0");
  CHECK(k7.branch == "equality");
  const auto c5 = verify_oddpair_lower(oracle::cycle(5));
  CHECK(c5.pass);
  CHECK(c5.lhs == "20");
  CHECK(c5.rhs == "8");
  const auto edge = verify_oddpair_lower(Graph::from_edges(4, {{0, 1}}));
  CHECK(edge.pass);
  CHECK(edge.lhs == "4");
  CHECK(edge.rhs == "2");
  CHECK_THROWS_AS(verify_oddpair_lower(Graph(3)), std::domain_error);
}

TEST_CASE("theorem 1") {
  const auto c5 = verify_theorem1(oracle::cycle(5), 1.0);
  CHECK(c5.pass);
  CHECK(c5.rhs == "7");
  CHECK(c5.margin_value == doctest::Approx(4 * std::sqrt(5.0) - 7));
  const auto k3 = verify_theorem1(Graph::complete(3), 1.0);
  CHECK(k3.pass);
  CHECK(k3.margin_value == doctest::Approx(1.0));
  for (int n = 2; n <= 20; ++n)
    CHECK(verify_theorem1(Graph::complete(n), 1.0).margin_value ==
          doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS(verify_theorem1(Graph::complete(3), 2.0));
  CHECK_THROWS(verify_theorem1(Graph::complete(3), 0.0));
  CHECK_THROWS(verify_theorem1(Graph(1), 1.0));
}

TEST_CASE("theorem 1 over a p grid on a random corpus") {
  std::mt19937_64 rng(131);
  std::vector<GraphAnalysis> corpus;
  for (int i = 0; i < 50; ++i)
    corpus.emplace_back(oracle::random_graph(2 + static_cast<int>(rng() % 11), rng));
  for (int i = 0; i < 100; ++i) {
    const double p = 0.05 + 1.9 * i / 99.0;
    for (auto& g : corpus) {
      const auto r = verify_theorem1(g, p);
      CHECK_MESSAGE(r.pass, r.graph6 << " p=" << p << " margin=" << r.margin);
    }
  }
}

TEST_CASE("theorem 2") {
  for (int n = 1; n <= 12; ++n) {
    const auto r = verify_theorem2(Graph::complete(n));
    CHECK(r.pass);
    CHECK(r.branch == "equality");
    CHECK(std::abs(r.margin_value) <= 1e-9);
  }
  const auto p3 = verify_theorem2(oracle::path(3));
  CHECK(p3.pass);
  CHECK(p3.branch == "equality");
  CHECK(p3.lhs == "4");
  const auto c5 = verify_theorem2(oracle::cycle(5));
  CHECK(c5.pass);
  CHECK(c5.branch == "strict");
  CHECK(c5.lhs == "8.94427191");
  CHECK(c5.rhs == "8");
}

TEST_CASE("theorem 2 strictness threshold is honoured") {
  Tolerances tight;
  tight.strict_margin = 1.0;
  CHECK_FALSE(verify_theorem2(oracle::cycle(5), tight).pass);
  tight.strict_margin = 0.9;
  CHECK(verify_theorem2(oracle::cycle(5), tight).pass);
}

TEST_CASE("all checkers pass exhaustively for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    auto src = enumerate_all_graphs(n);
    while (auto g = src.next()) {
      GraphAnalysis a(*g);
      if (n >= 2) {
        for (const auto& r : verify_sk_basic(a)) CHECK(r.pass);
        CHECK(verify_theorem1(a, 0.5).pass);
      }
      if (n >= 4) {
        for (const auto& r : verify_sk_oddpairs(a)) CHECK(r.pass);
        CHECK(verify_oddpair_lower(a).pass);
      }
      CHECK(verify_theorem2(a).pass);
    }
  }
}

TEST_CASE("analysis cache agrees with direct computation") {
  std::mt19937_64 rng(137);
  const Graph g = oracle::random_graph(9, rng);
  GraphAnalysis a(g);
  CHECK(a.graph6() == encode_graph6(g));
  CHECK(a.odd_pairs() == oracle::odd_pairs_brute(g));
  CHECK(a.sk() == elementary_symmetric_A2(seidel_matrix(g)));
  CHECK(a.energy(1.0) == p_energy(eigenvalues(seidel_matrix(g)), 1.0));
}
