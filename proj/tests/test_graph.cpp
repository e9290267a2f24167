#include <doctest.h>

#include "posmat/classes.hpp"
#include "posmat/gk.hpp"
#include "posmat/graph.hpp"
#include "support.hpp"

using namespace posmat;

namespace {

IndexSet one(std::size_t u, std::initializer_list<std::size_t> m) { return IndexSet::from_one_based(u, m); }

// Graph number `code` over the n(n-1)/2 vertex pairs, plus loops from `loops`.
Graph from_code(std::size_t n, std::uint64_t code, std::uint64_t loops = 0) {
  Graph g(n);
  std::size_t b = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++b)
      if (code >> b & 1) g.add_edge(u, v);
  for (std::size_t v = 0; v < n; ++v)
    if (loops >> v & 1) g.add_edge(v, v);
  return g;
}

Graph random_graph(Rng& rng, std::size_t n) {
  Rational d(rng.between(1, 9), 10);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v)
      if (rng.chance(d)) g.add_edge(u, v);
  return g;
}

bool disconnects(const Graph& g, const IndexSet& cut) {
  return !oracle::connected_without(support::grid(adjacency_matrix(g)), cut.mask());
}

bool complete_without_loops(const Graph& g) {
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("adjacency matrices") {
  PatternMatrix k3 = adjacency_matrix(Graph::complete(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k3.get(i, j) == (i != j));
  CHECK(adjacency_matrix(Graph(4)) == PatternMatrix(4, 4));
  CHECK(adjacency_matrix(Graph::path(3)) == support::pat({"0*0", "*0*", "0*0"}));
  Graph loop(2);
  loop.add_edge(1, 1);
  CHECK(adjacency_matrix(loop).get(1, 1));
  CHECK_FALSE(adjacency_matrix(loop).get(0, 0));
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    PatternMatrix a = adjacency_matrix(random_graph(rng, 1 + rng.below(9)));
    CHECK(a == a.transpose());
  }
  CHECK_THROWS_AS(Graph(3).add_edge(0, 3), Error);
}

TEST_CASE("connectivity of named graphs") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK(connectivity_bruteforce(Graph::complete(n)).kappa == static_cast<int>(n) - 1);
  CHECK(connectivity_bruteforce(Graph(1)).kappa == 0);
  ConnectivityReport c5 = connectivity_bruteforce(Graph::cycle(5));
  CHECK(c5.kappa == 2);
  REQUIRE(c5.min_cut);
  CHECK(c5.min_cut->size() == 2);
  CHECK(disconnects(Graph::cycle(5), *c5.min_cut));
  ConnectivityReport pet = connectivity_bruteforce(Graph::petersen());
  CHECK(pet.kappa == 3);
  CHECK(disconnects(Graph::petersen(), *pet.min_cut));
  CHECK(connectivity_bruteforce(Graph::path(4)).kappa == 1);
  ConnectivityReport apart = connectivity_bruteforce(Graph(3));
  CHECK(apart.kappa == 0);
  REQUIRE(apart.min_cut);
  CHECK(apart.min_cut->empty());
  // loops do not change completeness
  Graph k4 = Graph::complete(4);
  k4.add_edge(2, 2);
  ConnectivityReport r = connectivity_bruteforce(k4);
  CHECK(r.complete_after_loop_removal);
  CHECK(r.kappa == 3);
  CHECK_FALSE(r.min_cut.has_value());
  CHECK_THROWS_AS(connectivity_bruteforce(Graph::complete(17)), Error);
}

TEST_CASE("k-connectivity through g_k") {
  CHECK(is_k_connected_via_gk(Graph::complete(4), 3));
  CHECK(is_k_connected_via_gk(Graph::cycle(5), 2));
  CHECK_FALSE(is_k_connected_via_gk(Graph::cycle(5), 3));
  CHECK(is_k_connected_via_gk(Graph::petersen(), 3));
  CHECK_FALSE(is_k_connected_via_gk(Graph::petersen(), 4));
  CHECK_THROWS_AS(is_k_connected_via_gk(Graph::complete(4), 4), Error);
  CHECK_THROWS_AS(is_k_connected_via_gk(Graph::complete(4), 0), Error);
  Rng rng(25);
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(rng, 2 + rng.below(8));
    CHECK(is_k_connected_via_gk(g, 1) == is_irreducible(adjacency_matrix(g)));
  }
}

TEST_CASE("vertex deficiency") {
  Graph k5 = Graph::complete(5);
  for (std::uint64_t y = 1; y < 31; ++y) {
    IndexSet ys = IndexSet::from_mask(5, y);
    CHECK(vertex_deficiency(k5, ys) == ys.complement());
    CHECK(vertex_deficiency(Graph(5), ys).empty());
  }
  CHECK(vertex_deficiency(Graph::path(3), one(3, {1})) == one(3, {2}));
  CHECK(vertex_deficiency(Graph::path(3), one(3, {2})) == one(3, {1, 3}));
  CHECK_THROWS_AS(vertex_deficiency(k5, IndexSet(5)), Error);
  CHECK_THROWS_AS(vertex_deficiency(k5, IndexSet::full(5)), Error);
}

TEST_CASE("four-way agreement on every graph with at most five vertices") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      Graph g = from_code(n, code, code % 3 == 0 ? code : 0);
      auto adj = support::grid(adjacency_matrix(g));
      const int kappa = oracle::kappa(adj);
      ConnectivityReport c = connectivity_bruteforce(g);
      CHECK(c.kappa == kappa);
      CHECK(c.complete_after_loop_removal == complete_without_loops(g));
      CHECK(c.min_cut.has_value() == !complete_without_loops(g));
      if (c.min_cut) CHECK(disconnects(g, *c.min_cut));
      CHECK((kappa >= 1) == oracle::connected_without(adj, 0));
      for (int k = 1; k <= static_cast<int>(n) - 1; ++k) {
        AuditReport a = equivalence_audit(g, k);
        CHECK(a.agree());
        CHECK(a.by_cuts == (kappa >= k));
        CHECK(a.by_gk == oracle::gk(adj, k));
        if (k > 1 && a.by_gk) CHECK(equivalence_audit(g, k - 1).by_gk);
      }
    }
  }
}

TEST_CASE("g_k agrees with the cut oracle on random graphs") {
  Rng rng(310);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + rng.below(9);
    Graph g = random_graph(rng, n);
    const int kappa = oracle::kappa(support::grid(adjacency_matrix(g)));
    CHECK(connectivity_bruteforce(g).kappa == kappa);
    CHECK(kappa <= static_cast<int>(n) - 1);
    for (int k = 1; k <= static_cast<int>(n) - 1; ++k) {
      CHECK(is_k_connected_via_gk(g, k) == (kappa >= k));
      CHECK(equivalence_audit(g, k).agree());
    }
  }
}

TEST_CASE("Petersen audit") {
  AuditReport three = equivalence_audit(Graph::petersen(), 3);
  CHECK(three.by_cuts);
  CHECK(three.by_gk);
  CHECK(three.by_neighbour_sets);
  CHECK(three.by_deficiency);
  AuditReport four = equivalence_audit(Graph::petersen(), 4);
  CHECK_FALSE(four.by_cuts);
  CHECK_FALSE(four.by_gk);
  CHECK_FALSE(four.by_neighbour_sets);
  CHECK_FALSE(four.by_deficiency);
  CHECK_THROWS_AS(equivalence_audit(Graph(1), 1), Error);
}
