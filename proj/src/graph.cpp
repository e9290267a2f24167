#include "posmat/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "posmat/gk.hpp"

namespace posmat {

Graph::Graph(std::size_t n) : n_(n), adj_(n, std::vector<bool>(n, false)) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "graph needs at least one vertex");
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_)
    throw Error(ErrorCode::out_of_range, "edge endpoint outside 1.." + std::to_string(n_));
  adj_[u][v] = adj_[v][u] = true;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const { return adj_[u][v]; }

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u; v < n_; ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

std::uint64_t Graph::neighbours(std::size_t v) const {
  if (n_ > 64) throw Error(ErrorCode::cap_exceeded, "neighbour masks need n <= 64");
  std::uint64_t m = 0;
  for (std::size_t u = 0; u < n_; ++u)
    if (u != v && adj_[v][u]) m |= std::uint64_t{1} << u;
  return m;
}

PatternMatrix adjacency_matrix(const Graph& g) {
  PatternMatrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) {
    a.set(u, v);
    a.set(v, u);
  }
  return a;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Vertices outside `removed` form at least two components.
bool disconnected_without(const Graph& g, std::uint64_t removed) {
  const std::size_t n = g.order();
  UnionFind uf(n);
  for (auto [u, v] : g.edges()) {
    if (u == v) continue;
    if ((removed >> u) & 1u || (removed >> v) & 1u) continue;
    uf.unite(u, v);
  }
  std::size_t root = n;
  for (std::size_t v = 0; v < n; ++v) {
    if ((removed >> v) & 1u) continue;
    if (root == n)
      root = uf.find(v);
    else if (uf.find(v) != root)
      return true;
  }
  return false;
}

void require_graph_cap(const Graph& g, const Caps& caps) {
  require_within_cap(static_cast<long>(g.order()), std::min(caps.graph, Caps::mask_limit), "vertex cut enumeration");
}

void require_k(const Graph& g, int k) {
  const int n = static_cast<int>(g.order());
  if (n < 2) throw Error(ErrorCode::out_of_range, "connectivity tests need n >= 2");
  if (k < 1 || k > n - 1)
    throw Error(ErrorCode::out_of_range, "k = " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
}

}  // namespace

ConnectivityReport connectivity_bruteforce(const Graph& g, const Caps& caps) {
  require_graph_cap(g, caps);
  const int n = static_cast<int>(g.order());
  ConnectivityReport r;
  bool complete = true;
  for (int u = 0; u < n && complete; ++u)
    for (int v = u + 1; v < n && complete; ++v) complete = g.has_edge(u, v);
  if (complete) {
    r.complete_after_loop_removal = true;
    r.kappa = n - 1;
    return r;
  }
  // cuts leave at least two vertices, so sizes run 0..n-2
  for (int size = 0; size <= n - 2; ++size) {
    // all subsets of the given size, in increasing mask order (Gosper's hack)
    std::uint64_t s = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (disconnected_without(g, s)) {
        r.kappa = size;
        r.min_cut = IndexSet::from_mask(g.order(), s);
        return r;
      }
      if (s == 0) break;
      std::uint64_t c = s & (~s + 1), nx = s + c;
      s = (((nx ^ s) >> 2) / c) | nx;
    }
  }
  throw Error(ErrorCode::internal, "non-complete graph without a vertex cut");
}

bool is_k_connected_via_gk(const Graph& g, int k, const Caps& caps) {
  require_k(g, k);
  return is_gk(adjacency_matrix(g), k, caps).is_gk;
}

IndexSet vertex_deficiency(const Graph& g, const IndexSet& y) {
  if (y.universe() != g.order()) throw Error(ErrorCode::out_of_range, "vertex set does not match the graph");
  if (y.empty() || y.is_full()) throw Error(ErrorCode::invalid_argument, "Y must be a nonempty proper subset");
  IndexSet d(g.order());
  for (auto v : y.complement().members())
    for (auto w : y.members())
      if (g.has_edge(v, w)) {
        d.insert(v);
        break;
      }
  return d;
}

AuditReport equivalence_audit(const Graph& g, int k, const Caps& caps) {
  require_k(g, k);
  require_graph_cap(g, caps);
  const int n = static_cast<int>(g.order());
  AuditReport r;
  r.k = k;
  r.by_cuts = connectivity_bruteforce(g, caps).kappa >= k;
  r.by_gk = is_k_connected_via_gk(g, k, caps);

  std::vector<std::uint64_t> nb(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) nb[v] = g.neighbours(v);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  r.by_neighbour_sets = true;
  r.by_deficiency = true;
  for (std::uint64_t y = 1; y < full; ++y) {
    const std::uint64_t yc = full & ~y;
    const int need = std::min(k, std::popcount(yc));
    // X ranges over subsets of Y^c; each member of X needs a neighbour in Y
    bool found = false;
    for (std::uint64_t x = yc; !found; x = (x - 1) & yc) {
      if (std::popcount(x) >= need) {
        bool all_adjacent = true;
        for (std::uint64_t t = x; t && all_adjacent; t &= t - 1)
          all_adjacent = (nb[static_cast<std::size_t>(std::countr_zero(t))] & y) != 0;
        found = all_adjacent;
      }
      if (x == 0) break;
    }
    if (!found) r.by_neighbour_sets = false;

    int d = 0;
    for (std::uint64_t t = yc; t; t &= t - 1)
      if (nb[static_cast<std::size_t>(std::countr_zero(t))] & y) ++d;
    if (d < need) r.by_deficiency = false;
    if (!r.by_neighbour_sets && !r.by_deficiency) break;
  }
  return r;
}

}  // namespace posmat
