#include <doctest.h>

#include <random>

#include "npd/edge_list.hpp"
#include "npd/graph.hpp"
#include "npd/shortest_paths.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace npd;

namespace {

std::vector<double> row(std::initializer_list<double> v) { return v; }

}  // namespace

TEST_CASE("parse_edge_list maps labels in first-appearance order") {
  auto parsed = parse_edge_list("a b\nb c\n");
  const Graph& g = parsed.graph;
  CHECK(g.n_nodes() == 3);
  REQUIRE(g.n_edges() == 2);
  CHECK(g.edges()[0] == Edge{0, 1, 1.0});
  CHECK(g.edges()[1] == Edge{1, 2, 1.0});
  CHECK(g.label(2) == "c");
  CHECK(g.find_node("b") == NodeId{1});
  CHECK_FALSE(g.find_node("z").has_value());
}

TEST_CASE("parse_edge_list drops self-loops") {
  auto parsed = parse_edge_list("a a\na b\n");
  CHECK(parsed.graph.n_nodes() == 2);
  CHECK(parsed.graph.n_edges() == 1);
  CHECK(parsed.self_loops_dropped == 1);
}

TEST_CASE("parse_edge_list reads weights") {
  auto parsed = parse_edge_list("a b 1.5\nb c 2.0\n", {.weighted = true});
  const Graph& g = parsed.graph;
  CHECK(g.weighted());
  REQUIRE(g.n_edges() == 2);
  CHECK(g.edges()[0].weight == 1.5);
  CHECK(g.edges()[1].weight == 2.0);
}

TEST_CASE("parse_edge_list separators and comments") {
  auto parsed = parse_edge_list("# header comment\n\n  x,y\ny ,  z\n\tz\t\tx   \r\n   # indented\n");
  CHECK(parsed.graph.n_nodes() == 3);
  CHECK(parsed.graph.n_edges() == 3);

  CHECK_THROWS_AS(parse_edge_list("a,,b\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(",a b\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b,\n"), ParseError);
}

TEST_CASE("parse_edge_list collapses duplicates") {
  SUBCASE("undirected pairs are unordered") {
    auto parsed = parse_edge_list("a b\nb a\na b\n");
    CHECK(parsed.graph.n_edges() == 1);
    CHECK(parsed.duplicates_collapsed == 2);
  }
  SUBCASE("directed pairs are ordered") {
    auto parsed = parse_edge_list("a b\nb a\na b\n", {.directed = true});
    CHECK(parsed.graph.n_edges() == 2);
    CHECK(parsed.duplicates_collapsed == 1);
  }
  SUBCASE("weights are summed") {
    auto parsed = parse_edge_list("a b 1.5\nb a 2\n", {.weighted = true});
    REQUIRE(parsed.graph.n_edges() == 1);
    CHECK(parsed.graph.edges()[0].weight == 3.5);
  }
}

TEST_CASE("parse_edge_list errors carry line numbers") {
  try {
    parse_edge_list("a b\nb c d e\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.kind() == ParseError::Kind::malformed);
  }
  try {
    parse_edge_list("a b 1\nb c 0\n", {.weighted = true});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.kind() == ParseError::Kind::bad_weight);
  }
  CHECK_THROWS_AS(parse_edge_list("a b -1\n", {.weighted = true}), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b x\n", {.weighted = true}), ParseError);
  try {
    parse_edge_list("a b 1\nb c\n", {.weighted = true});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.kind() == ParseError::Kind::weight_columns);
  }
  try {
    parse_edge_list("a b 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::weight_columns);
  }
}

TEST_CASE("Graph rejects invariant violations") {
  CHECK_THROWS_AS(Graph(2, {{0, 0, 1.0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}), GraphError);
  CHECK_NOTHROW(Graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}, true));
  CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 0.0}}, false, true), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 2.0}}, false, false), GraphError);
}

TEST_CASE("connected_components") {
  CHECK(connected_components(fixtures::path(3)).sizes == std::vector<std::size_t>{3});
  CHECK(connected_components(Graph(3, {{0, 1, 1.0}})).sizes == std::vector<std::size_t>{2, 1});
  CHECK(connected_components(Graph(4, {})).sizes == std::vector<std::size_t>{1, 1, 1, 1});
  // Weak connectivity for directed graphs.
  CHECK(connected_components(Graph(3, {{1, 0, 1.0}, {1, 2, 1.0}}, true)).sizes ==
        std::vector<std::size_t>{3});
}

TEST_CASE("sssp_unweighted") {
  CHECK(sssp_unweighted(fixtures::path(3), 0).dist == row({0, 1, 2}));
  CHECK(sssp_unweighted(Graph(3, {{0, 1, 1.0}}), 0).dist == row({0, 1, kUnreachable}));
  for (NodeId s = 0; s < 3; ++s) {
    auto d = sssp_unweighted(fixtures::complete(3), s).dist;
    std::sort(d.begin(), d.end());
    CHECK(d == row({0, 1, 1}));
  }
  CHECK_THROWS_AS(sssp_unweighted(fixtures::path(3), 3), std::out_of_range);

  const Graph directed(3, {{0, 1, 1.0}, {1, 2, 1.0}}, true);
  CHECK(sssp_unweighted(directed, 0).dist == row({0, 1, 2}));
  CHECK(sssp_unweighted(directed, 2).dist == row({kUnreachable, kUnreachable, 0}));
}

TEST_CASE("sssp_weighted") {
  const Graph p3 = fixtures::with_weights(fixtures::path(3), {1.0, 2.0});
  CHECK(sssp_weighted(p3, 0, WeightTransform::identity).dist == row({0, 1, 3}));
  // 1/1 + 1/2 along the only path.
  CHECK(sssp_weighted(p3, 0, WeightTransform::reciprocal).dist == row({0, 1, 1.5}));

  // A strong two-hop route beats a weak direct edge under the reciprocal cost.
  const Graph tri(3, {{0, 1, 4.0}, {1, 2, 4.0}, {0, 2, 1.0}}, false, true);
  CHECK(sssp_weighted(tri, 0, WeightTransform::reciprocal).dist == row({0, 0.25, 0.5}));
  CHECK(sssp_weighted(tri, 0, WeightTransform::identity).dist == row({0, 4, 1}));
}

TEST_CASE("unit-weight Dijkstra equals BFS on 100 random graphs") {
  const auto pool = fixtures::random_pool(100, 40, 7);
  for (const Graph& g : pool) {
    const Graph w = fixtures::unit_weighted(g);
    for (NodeId s = 0; s < g.n_nodes(); ++s) {
      const auto bfs = sssp_unweighted(g, s).dist;
      CHECK(sssp_weighted(w, s, WeightTransform::reciprocal).dist == bfs);
      CHECK(sssp_weighted(w, s, WeightTransform::identity).dist == bfs);
    }
  }
}

TEST_CASE("distances are symmetric and match Floyd-Warshall") {
  const auto pool = fixtures::random_pool(60, 50, 11);
  for (const Graph& g : pool) {
    const auto fw = oracle::floyd_warshall(g);
    for (NodeId s = 0; s < g.n_nodes(); ++s) {
      const auto d = sssp_unweighted(g, s).dist;
      REQUIRE(d == fw[s]);
      for (NodeId t = 0; t < g.n_nodes(); ++t) CHECK(fw[s][t] == fw[t][s]);
    }
  }
}

TEST_CASE("weighted Dijkstra matches Floyd-Warshall on random weights") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> weight(0.1, 5.0);
  for (const Graph& base : fixtures::random_pool(40, 30, 13)) {
    std::vector<double> w(base.n_edges());
    for (auto& x : w) x = weight(rng);
    const Graph g = fixtures::with_weights(base, w);
    for (bool reciprocal : {false, true}) {
      const auto fw = oracle::floyd_warshall(g, true, reciprocal);
      const auto t = reciprocal ? WeightTransform::reciprocal : WeightTransform::identity;
      for (NodeId s = 0; s < g.n_nodes(); ++s) {
        const auto d = sssp_weighted(g, s, t).dist;
        for (NodeId v = 0; v < g.n_nodes(); ++v) {
          if (fw[s][v] == oracle::kInf) {
            CHECK(d[v] == kUnreachable);
          } else {
            CHECK(d[v] == doctest::Approx(fw[s][v]).epsilon(1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("components equal the partition induced by finite distances") {
  for (const Graph& g : fixtures::random_pool(50, 40, 17)) {
    const auto summary = connected_components(g);
    std::uint64_t total = 0;
    for (auto s : summary.sizes) total += s;
    CHECK(total == g.n_nodes());
    CHECK(summary.sum_of_squares() == oracle::reachable_pairs(g));
    // Component size of node v equals its count of finite distances.
    std::vector<std::size_t> reach(g.n_nodes());
    for (NodeId v = 0; v < g.n_nodes(); ++v) {
      const auto d = sssp_unweighted(g, v).dist;
      reach[v] = static_cast<std::size_t>(std::count_if(d.begin(), d.end(),
                                                        [](double x) { return x != kUnreachable; }));
    }
    std::vector<std::size_t> from_reach;
    std::vector<bool> seen(g.n_nodes(), false);
    for (NodeId v = 0; v < g.n_nodes(); ++v) {
      if (seen[v]) continue;
      const auto d = sssp_unweighted(g, v).dist;
      for (NodeId u = 0; u < g.n_nodes(); ++u) {
        if (d[u] != kUnreachable) {
          seen[u] = true;
          CHECK(reach[u] == reach[v]);
        }
      }
      from_reach.push_back(reach[v]);
    }
    CHECK(from_reach == summary.sizes);
  }
}

TEST_CASE("relabeled graph keeps structure") {
  std::mt19937_64 rng(3);
  const Graph g = fixtures::path(5);
  const auto perm = fixtures::random_permutation(5, rng);
  const Graph h = g.relabeled(perm);
  for (const Edge& e : g.edges()) CHECK(h.has_edge(perm[e.u], perm[e.v]));
  CHECK(h.n_edges() == g.n_edges());
}
