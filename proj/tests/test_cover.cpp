#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "icode/cover.hpp"

using namespace icode;
using Parts = std::vector<std::vector<std::size_t>>;

namespace {

DerivedGraph paper6_graph() {
  return build_cross_neighbor_graph(split_groupcast(icode::test::paper6()));
}

DerivedGraph complete_graph(std::size_t k) {
  DerivedGraph g(k);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q)
      g.add_edge(p, q);
  return g;
}

}  // namespace

TEST_CASE("exact cover of the six-receiver example") {
  const auto cover = exact_min_cover(paper6_graph());
  CHECK(cover.parts == Parts{{0, 2, 3}, {1, 4}, {5}});
}

TEST_CASE("exact cover of an edgeless graph is all singletons") {
  CHECK(exact_min_cover(DerivedGraph(5)).parts == Parts{{0}, {1}, {2}, {3}, {4}});
  CHECK(exact_min_cover(DerivedGraph(0)).parts.empty());
}

TEST_CASE("exact cover of the five-cycle needs three cliques") {
  const auto g = build_cross_neighbor_graph(split_groupcast(icode::test::cycle5()));
  REQUIRE(g.edge_count() == 5);
  // Set-partition enumeration gives 3 as well.
  CHECK(icode::test::brute_force_min_cover(g) == 3);
  const auto cover = exact_min_cover(g);
  CHECK(cover.size() == 3);
  CHECK_FALSE(verify_cover(g, cover).has_value());
}

TEST_CASE("exact cover respects the cap") {
  CHECK_THROWS_AS(exact_min_cover(DerivedGraph(41)), CapExceeded);
  CHECK_THROWS_AS(exact_min_cover(DerivedGraph(6), 5), CapExceeded);
  CHECK(exact_min_cover(DerivedGraph(45), 45).size() == 45);
}

TEST_CASE("greedy cover trace on the six-receiver example") {
  CHECK(greedy_cover(paper6_graph()).parts == Parts{{0, 2, 3}, {1, 4}, {5}});
}

TEST_CASE("greedy cover extremes") {
  CHECK(greedy_cover(DerivedGraph(4)).size() == 4);
  CHECK(greedy_cover(complete_graph(6)).parts == Parts{{0, 1, 2, 3, 4, 5}});
}

TEST_CASE("greedy can be beaten by the exact solver") {
  // Path 2-0-1-3: first-fit pairs 0 with 1 and strands 2 and 3.
  const auto g = DerivedGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}});
  CHECK(greedy_cover(g).parts == Parts{{0, 1}, {2}, {3}});
  CHECK(exact_min_cover(g).parts == Parts{{0, 2}, {1, 3}});
}

TEST_CASE("verify_cover") {
  const auto g = paper6_graph();
  CHECK_FALSE(verify_cover(g, {{{0, 2, 3}, {1, 4}, {5}}}).has_value());

  const auto not_clique = verify_cover(g, {{{0, 1}, {2, 3}, {4, 5}}});
  REQUIRE(not_clique.has_value());
  CHECK(not_clique->kind == CoverViolation::Kind::not_clique);
  CHECK(not_clique->part == 0u);
  CHECK(not_clique->p == 0u);
  CHECK(not_clique->q == 1u);

  const auto missing = verify_cover(g, {{{0, 2, 3}, {1, 4}}});
  REQUIRE(missing.has_value());
  CHECK(missing->kind == CoverViolation::Kind::not_partition);
  CHECK(missing->p == 5u);

  const auto twice = verify_cover(g, {{{0, 2, 3}, {1, 4}, {5, 0}}});
  REQUIRE(twice.has_value());
  CHECK(twice->kind == CoverViolation::Kind::not_partition);

  CHECK(verify_cover(g, {{{0, 2, 3}, {1, 4}, {5}, {}}}).has_value());
  CHECK(verify_cover(g, {{{0, 2, 3}, {1, 4}, {5, 9}}}).has_value());
}

TEST_CASE("exact colouring matches known chromatic numbers") {
  CHECK(exact_colouring(DerivedGraph(0)).colours == 0);
  CHECK(exact_colouring(DerivedGraph(3)).colours == 1);
  CHECK(exact_colouring(complete_graph(5)).colours == 5);
  // Odd cycle.
  CHECK(exact_colouring(DerivedGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}))
            .colours == 3);
  // Petersen graph.
  const auto petersen = DerivedGraph::from_edges(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
           {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const auto c = exact_colouring(petersen);
  CHECK(c.colours == 3);
  for (auto [p, q] : petersen.edges())
    CHECK(c.colour_of[p] != c.colour_of[q]);
  // Classes are numbered by first member.
  CHECK(c.colour_of[0] == 0);
}

TEST_CASE("property: covers are valid, sandwiched and optimal on small graphs") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 150; ++round) {
    const auto n = static_cast<std::size_t>(1 + rng() % 8);
    const double density = 0.15 * static_cast<double>(1 + rng() % 6);
    const auto g = icode::test::random_graph(n, density, rng);
    CAPTURE(round);
    const auto exact = exact_min_cover(g);
    const auto greedy = greedy_cover(g);
    CHECK_FALSE(verify_cover(g, exact).has_value());
    CHECK_FALSE(verify_cover(g, greedy).has_value());
    CHECK(exact.size() <= greedy.size());
    CHECK(greedy.size() <= n);
    CHECK(exact.size() == icode::test::brute_force_min_cover(g));
    for (std::size_t i = 1; i < exact.parts.size(); ++i)
      CHECK(exact.parts[i - 1].front() < exact.parts[i].front());
  }
}

TEST_CASE("property: component additivity and determinism on larger graphs") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 30; ++round) {
    const auto n = static_cast<std::size_t>(10 + rng() % 15);
    const auto g = icode::test::random_graph(n, 0.15, rng);
    const auto whole = exact_min_cover(g);
    std::size_t sum = 0;
    for (const auto &component : connected_components(g))
      sum += exact_min_cover(g.induced(component)).size();
    CAPTURE(round);
    CHECK(whole.size() == sum);
    CHECK(exact_min_cover(g) == whole);
    CHECK_FALSE(verify_cover(g, whole).has_value());
  }
}
