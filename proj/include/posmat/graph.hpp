#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "posmat/error.hpp"
#include "posmat/matrix.hpp"

namespace posmat {

// Undirected graph on vertices 0..n-1; loops allowed, no multi-edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  static Graph petersen();

  std::size_t order() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // u <= v, sorted
  // Neighbours of v other than v itself; n <= 64.
  std::uint64_t neighbours(std::size_t v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<bool>> adj_;
};

PatternMatrix adjacency_matrix(const Graph& g);

struct ConnectivityReport {
  int kappa = 0;
  std::optional<IndexSet> min_cut;
  bool complete_after_loop_removal = false;
};

// Smallest vertex cut by enumeration; n-1 for graphs that are complete once
// loops are removed.
ConnectivityReport connectivity_bruteforce(const Graph& g, const Caps& caps = {});
bool is_k_connected_via_gk(const Graph& g, int k, const Caps& caps = {});
// Vertices outside Y adjacent to some vertex of Y.
IndexSet vertex_deficiency(const Graph& g, const IndexSet& y);

struct AuditReport {
  int k = 0;
  bool by_cuts = false;          // kappa >= k
  bool by_gk = false;            // adjacency matrix is g_k
  bool by_neighbour_sets = false;  // every Y has an X in Y^c, |X| >= min(k,|Y^c|), X inside N(Y)
  bool by_deficiency = false;    // |D_Y| >= min(k, |Y^c|) for every Y
  bool agree() const {
    return by_cuts == by_gk && by_gk == by_neighbour_sets && by_neighbour_sets == by_deficiency;
  }
};

AuditReport equivalence_audit(const Graph& g, int k, const Caps& caps = {});

}  // namespace posmat
