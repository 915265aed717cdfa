#include <doctest.h>

#include "gridramsey/quasirand.hpp"
#include "gridramsey/reference.hpp"
#include "gridramsey/splitmix.hpp"
#include "oracles.hpp"

using namespace gridramsey;

namespace {

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph random_graph(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Graph g(n);
  const auto den = 1 + rng.below(5);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.below(den + 1) < den) g.add_edge(u, v);
  return g;
}

std::uint64_t sum_squared_codegrees(const Graph& g) {
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) total += codegree(g, x, y) * codegree(g, x, y);
  return total;
}

PartitionedGraph with_classes(Graph g, std::vector<std::size_t> labels, std::size_t k) {
  return PartitionedGraph(std::move(g), std::move(labels), k);
}

// Random k-partite instance with uneven class sizes and eps <= 1.
PartitionedGraph uneven_kpartite(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t k = 2 + rng.below(5);
  while (true) {
    std::vector<std::size_t> sizes(k);
    std::size_t n = 0;
    for (auto& s : sizes) n += s = 1 + rng.below(24 / k);
    std::size_t largest = *std::max_element(sizes.begin(), sizes.end());
    if (k * largest > 2 * n) continue;
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < k; ++i) labels.insert(labels.end(), sizes[i], i);
    Graph g(n);
    const auto num = rng.below(6);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (labels[u] != labels[v] && rng.below(5) < num) g.add_edge(u, v);
    return PartitionedGraph(std::move(g), std::move(labels), k);
  }
}

}  // namespace

TEST_CASE("codegree") {
  const auto k2 = complete(2);
  CHECK(codegree(k2, 0, 0) == 1);
  CHECK(codegree(k2, 0, 1) == 0);
  const auto k4 = complete(4);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) CHECK(codegree(k4, x, y) == (x == y ? 3 : 2));
  CHECK_THROWS_AS(codegree(k4, 0, 4), std::out_of_range);
}

TEST_CASE("hom_c4 on named graphs") {
  CHECK(hom_c4(Graph(5)) == 0);
  CHECK(hom_c4(complete(2)) == 2);
  CHECK(hom_c4(cycle(4)) == 32);
  CHECK(hom_c4(complete(4)) == 84);
  const auto k33 = complete_multipartite({3, 3}).graph();
  CHECK(hom_c4(k33) == 162);
  CHECK(oracle::closed_4_walks(k33) == 162);
  CHECK(hom_c4(complete_multipartite({2, 2, 2}).graph()) == 288);
  for (std::int64_t n = 1; n <= 20; ++n) {
    const auto g = complete(n);
    CHECK(static_cast<std::int64_t>(hom_c4(g)) == (n - 1) * (n - 1) * (n - 1) * (n - 1) + (n - 1));
    CHECK(oracle::trace_a4(g) == (n - 1) * (n - 1) * (n - 1) * (n - 1) + (n - 1));
  }
}

TEST_CASE("hom_c4 agrees with trace(A^4), 4-walk enumeration and the dense reference") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_graph(1 + seed % 8, seed);
    const auto h = static_cast<std::int64_t>(hom_c4(g));
    CHECK(h == oracle::trace_a4(g));
    CHECK(h == oracle::closed_4_walks(g));
    CHECK(hom_c4(g) == reference::hom_c4(g));
    CHECK(hom_c4(g) == sum_squared_codegrees(g));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_graph(9 + seed, 1000 + seed);
    CHECK(static_cast<std::int64_t>(hom_c4(g)) == oracle::trace_a4(g));
  }
  // Crosses the 64-bit word boundary of the adjacency bitsets.
  const auto big = random_graph(130, 99);
  CHECK(static_cast<std::int64_t>(hom_c4(big)) == oracle::trace_a4(big));
}

TEST_CASE("density") {
  CHECK(density(Graph(4)) == 0);
  CHECK(density(complete(4)) == Rational(3, 4));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(density(complete_multipartite({n, n}).graph()) == Rational(1, 2));
  CHECK_THROWS_AS(density(Graph(0)), std::invalid_argument);
}

TEST_CASE("is_kpartite") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(is_kpartite(complete_multipartite({n, n})));
  const auto bad = is_kpartite(with_classes(complete(3), {0, 0, 1}, 2));
  CHECK_FALSE(bad);
  REQUIRE(bad.violation);
  CHECK(*bad.violation == Edge{0, 1});
}

TEST_CASE("partition_imbalance") {
  CHECK(partition_imbalance(with_classes(Graph(6), {0, 0, 0, 1, 1, 1}, 2)) == 0);
  CHECK(partition_imbalance(with_classes(Graph(6), {0, 0, 0, 0, 1, 1}, 2)) == Rational(1, 3));
  CHECK(partition_imbalance(with_classes(Graph(6), {0, 0, 0, 0, 0, 1}, 2)) == Rational(2, 3));
}

TEST_CASE("PartitionedGraph validation") {
  CHECK_THROWS_AS(with_classes(Graph(3), {0, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(with_classes(Graph(2), {0, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(with_classes(Graph(2), {0, 0}, 0), std::invalid_argument);
  const auto pg = with_classes(Graph(3), {2, 0, 2}, 4).without_empty_classes();
  CHECK(pg.class_count() == 2);
  CHECK(pg.classes()[0] == std::vector<Vertex>{1});
  CHECK(pg.classes()[1] == std::vector<Vertex>{0, 2});
  CHECK_THROWS_AS(Graph(2).add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2).add_edge(0, 2), std::out_of_range);
}

TEST_CASE("lemma_lower_bound") {
  SUBCASE("K_{n,n} meets the bound with equality") {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto pg = complete_multipartite({n, n});
      const Rational expected = 2 * n * n * n * n;
      CHECK(lemma_lower_bound(pg) == expected);
      CHECK(hom_c4(pg.graph()) == 2 * n * n * n * n);
    }
  }
  SUBCASE("octahedron") {
    const auto pg = complete_multipartite({2, 2, 2});
    CHECK(lemma_lower_bound(pg) == 288);
  }
  SUBCASE("edgeless") { CHECK(lemma_lower_bound(with_classes(Graph(6), {0, 1, 2, 0, 1, 2}, 3)) == 0); }
  SUBCASE("errors") {
    CHECK_THROWS_AS(lemma_lower_bound(with_classes(Graph(3), {0, 0, 0}, 1)), std::domain_error);
    CHECK_THROWS_AS(lemma_lower_bound(with_classes(complete(3), {0, 0, 1}, 2)), std::domain_error);
    // classes {8, 1, 1}: eps = 7/5
    CHECK_THROWS_AS(lemma_lower_bound(with_classes(Graph(10), {0, 0, 0, 0, 0, 0, 0, 0, 1, 2}, 3)), std::domain_error);
  }
  SUBCASE("empty classes are dropped before eps and k are computed") {
    const auto pg = complete_multipartite({2, 2});
    const auto padded = with_classes(pg.graph(), pg.labels(), 4);
    CHECK(lemma_lower_bound(padded) == lemma_lower_bound(pg));
  }
  SUBCASE("tightness on complete balanced multipartite graphs") {
    for (std::size_t k = 2; k <= 5; ++k)
      for (std::size_t size = 1; size <= 4; ++size) {
        const auto pg = complete_multipartite(std::vector<std::size_t>(k, size));
        const Rational hom = hom_c4(pg.graph());
        if (k <= 4 && size <= 3)
          CHECK(hom == lemma_lower_bound(pg));
        else
          CHECK(hom >= lemma_lower_bound(pg));
      }
  }
  SUBCASE("the inequality on seeded random instances") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto pg = seed % 2 ? uneven_kpartite(seed)
                               : random_kpartite(2 + seed % 5, 1 + seed % 4, seed % 7, 6, seed);
      CHECK(Rational(hom_c4(pg.graph())) >= lemma_lower_bound(pg));
    }
  }
  SUBCASE("adding an isolated vertex to the largest class never raises a non-negative bound") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto pg = uneven_kpartite(seed);
      const auto before = lemma_lower_bound(pg);
      if (before < 0) continue;
      std::size_t largest = 0;
      for (std::size_t i = 1; i < pg.class_count(); ++i)
        if (pg.classes()[i].size() > pg.classes()[largest].size()) largest = i;
      Graph g(pg.graph().order() + 1);
      for (const auto& e : pg.graph().edges()) g.add_edge(e.u, e.v);
      auto labels = pg.labels();
      labels.push_back(largest);
      const PartitionedGraph grown(std::move(g), std::move(labels), pg.class_count());
      if (partition_imbalance(grown) > 1) continue;
      CHECK(lemma_lower_bound(grown) <= before);
    }
  }
}

TEST_CASE("lemma_diagnostics") {
  SUBCASE("K_{n,n}: S = T = 2n^2 and the chain is tight") {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto d = lemma_diagnostics(complete_multipartite({n, n}));
      CHECK(d.s == Rational(2 * n * n));
      REQUIRE(d.t_exact);
      CHECK(*d.t_exact == Rational(2 * n * n));
      CHECK(d.hom == 2 * n * n * n * n);
      const auto chain = check_chain(d);
      CHECK(chain.all());
      CHECK(chain.s_vs_t_tight);
      CHECK(chain.hom_vs_s_t_tight);
      CHECK(chain.t_vs_density_tight);
    }
  }
  SUBCASE("edgeless") {
    const auto d = lemma_diagnostics(with_classes(Graph(4), {0, 1, 0, 1}, 2));
    CHECK(d.s == 0);
    CHECK(d.hom == 0);
    CHECK(d.t == 0);
  }
  SUBCASE("class degrees and codegree mass") {
    const auto d = lemma_diagnostics(complete_multipartite({2, 3}));
    CHECK(d.class_degree[0] == std::vector<std::size_t>{0, 3});
    CHECK(d.class_degree[4] == std::vector<std::size_t>{2, 0});
    // Within the 2-side every codegree is 3; across it is 0.
    CHECK(d.codegree_mass[0][0] == 12);
    CHECK(d.codegree_mass[0][1] == 0);
    CHECK(d.codegree_mass[1][1] == 18);
    CHECK_FALSE(d.t_exact);  // |V_0||V_1| = 6
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(lemma_diagnostics(with_classes(Graph(4), {0, 0, 2, 2}, 3)), std::domain_error);
    CHECK_THROWS_AS(lemma_diagnostics(with_classes(Graph(4), {0, 0, 0, 0}, 1)), std::domain_error);
  }
  SUBCASE("200 random 3-partite graphs on 12 vertices") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto d = lemma_diagnostics(random_kpartite(3, 4, 1 + seed % 4, 5, seed));
      CHECK(check_chain(d).all());
    }
  }
  SUBCASE("uneven classes force the floating T path") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto pg = uneven_kpartite(seed);
      const auto d = lemma_diagnostics(pg);
      CHECK(check_chain(d).all());
      CHECK(d.bound == lemma_lower_bound(pg));
    }
  }
}

TEST_CASE("random_kpartite") {
  CHECK(random_kpartite(3, 4, 0, 1, 5).graph().edge_count() == 0);
  const auto full = random_kpartite(3, 4, 1, 1, 5);
  CHECK(full.graph() == complete_multipartite({4, 4, 4}).graph());
  CHECK(random_kpartite(3, 4, 1, 2, 7).graph() == random_kpartite(3, 4, 1, 2, 7).graph());
  CHECK(is_kpartite(random_kpartite(4, 3, 1, 2, 11)));

  // Independent replay of the pair stream.
  const auto g = random_kpartite(2, 3, 1, 2, 42).graph();
  SplitMix64 rng(42);
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = u + 1; v < 6; ++v)
      if (u / 3 != v / 3) CHECK(g.adjacent(u, v) == (rng.next() % 2 < 1));
}

TEST_CASE("GRAPH files") {
  const auto file = parse_graph("GRAPH 1\n# square\n4 2\n1 2 1 2\n1 2\n2 3\n3 4\n4 1\n");
  CHECK(file.graph == cycle(4));
  REQUIRE(file.partition);
  CHECK(file.partition->classes()[0] == std::vector<Vertex>{0, 2});
  CHECK(is_kpartite(*file.partition));

  const auto plain = parse_graph("GRAPH 1\n3 0\n1 3\n");
  CHECK_FALSE(plain.partition);
  CHECK(plain.graph.adjacent(0, 2));
  CHECK(serialize_graph(plain.graph) == "GRAPH 1\n3 0\n1 3\n");
  CHECK(parse_graph(serialize_graph(*file.partition)).graph == file.graph);

  CHECK_THROWS_AS(parse_graph("GRAPH 2\n3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("GRAPH 1\n3 0\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("GRAPH 1\n3 0\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("GRAPH 1\n3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("GRAPH 1\n3 2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("GRAPH 1\n3 0\n1\n"), ParseError);
}
