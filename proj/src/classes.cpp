#include "posmat/classes.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "posmat/gk.hpp"

namespace posmat {

namespace {

void require_square(const PatternMatrix& p, const char* what) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, std::string(what) + " needs a square matrix");
}

std::vector<std::vector<std::size_t>> out_lists(const PatternMatrix& p) {
  std::vector<std::vector<std::size_t>> adj(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) adj[i] = p.row(i).members();
  return adj;
}

}  // namespace

std::vector<std::vector<std::size_t>> strongly_connected_components(const PatternMatrix& p) {
  require_square(p, "strong connectivity");
  const std::size_t n = p.rows();
  const auto adj = out_lists(p);
  const std::size_t unset = n;
  std::vector<std::size_t> index(n, unset), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<std::size_t>> comps;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v, next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < adj[f.v].size()) {
        std::size_t w = adj[f.v][f.next++];
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

Irreducibility irreducibility(const PatternMatrix& p) {
  require_square(p, "irreducibility");
  const std::size_t n = p.rows();
  Irreducibility r;
  if (n == 1) {
    r.irreducible = p.get(0, 0);
    if (!r.irreducible) r.permutation = {0};
    return r;
  }
  auto comps = strongly_connected_components(p);
  if (comps.size() == 1) {
    r.irreducible = true;
    return r;
  }
  for (const auto& c : comps) r.permutation.insert(r.permutation.end(), c.begin(), c.end());
  r.split = comps.front().size();
  r.closed_set = IndexSet::from_zero_based(n, comps.front());
  return r;
}

bool is_irreducible(const PatternMatrix& p) { return irreducibility(p).irreducible; }

bool verify_reducibility_certificate(const PatternMatrix& p, const Irreducibility& cert) {
  const std::size_t n = p.rows();
  if (cert.irreducible) return false;
  if (n == 1) return !p.get(0, 0);
  if (cert.permutation.size() != n || cert.split == 0 || cert.split >= n) return false;
  std::vector<std::size_t> sorted = cert.permutation;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != i) return false;
  for (std::size_t a = 0; a < cert.split; ++a)
    for (std::size_t b = cert.split; b < n; ++b)
      if (p.get(cert.permutation[a], cert.permutation[b])) return false;
  return true;
}

bool irreducible_by_powers(const PatternMatrix& p) {
  require_square(p, "irreducibility");
  if (p.rows() == 1) return p.get(0, 0);
  return is_positive(bool_power(with_identity(p), static_cast<long>(p.rows()) - 1));
}

int period(const PatternMatrix& p) {
  require_square(p, "period");
  if (!is_irreducible(p)) throw Error(ErrorCode::not_irreducible, "period is defined for irreducible matrices only");
  const std::size_t n = p.rows();
  const auto adj = out_lists(p);
  std::vector<long> level(n, -1);
  std::deque<std::size_t> q{0};
  level[0] = 0;
  long g = 0;
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop_front();
    for (auto v : adj[u]) {
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        q.push_back(v);
      } else {
        g = std::gcd(g, std::labs(level[u] + 1 - level[v]));
      }
    }
  }
  return static_cast<int>(g);
}

int period_by_definition(const PatternMatrix& p) {
  require_square(p, "period");
  if (!is_irreducible(p)) throw Error(ErrorCode::not_irreducible, "period is defined for irreducible matrices only");
  const std::size_t n = p.rows();
  // row 1 of P^k, advanced one factor at a time
  PatternMatrix row(1, n);
  for (std::size_t j = 0; j < n; ++j)
    if (p.get(0, j)) row.set(0, j);
  long g = 0;
  for (long k = 1; k <= static_cast<long>(n * n); ++k) {
    if (row.get(0, 0)) g = std::gcd(g, k);
    row = bool_product(row, p);
  }
  return static_cast<int>(g);
}

bool is_primitive(const PatternMatrix& p) {
  require_square(p, "primitivity");
  return is_irreducible(p) && period(p) == 1;
}

long wielandt_number(long n) { return n <= 1 ? 1 : n * n - 2 * n + 2; }

bool primitive_by_powers(const PatternMatrix& p) {
  require_square(p, "primitivity");
  return is_positive(bool_power(p, wielandt_number(static_cast<long>(p.rows()))));
}

long least_power_with(const PatternMatrix& p, long limit, bool (*pred)(const PatternMatrix&)) {
  require_square(p, "powers");
  PatternMatrix q = p;
  for (long e = 1; e <= limit; ++e) {
    if (pred(q)) return e;
    if (e < limit) q = bool_product(q, p);
  }
  return 0;
}

int gamma(const PatternMatrix& p) {
  require_square(p, "index of primitivity");
  if (!is_primitive(p)) throw Error(ErrorCode::not_primitive, "index of primitivity needs a primitive matrix");
  long limit = wielandt_number(static_cast<long>(p.rows()));
  long e = least_power_with(p, limit, [](const PatternMatrix& q) { return is_positive(q); });
  if (e == 0) throw Error(ErrorCode::internal, "primitive matrix not positive by the Wielandt exponent");
  return static_cast<int>(e);
}

std::optional<int> girth(const PatternMatrix& p) {
  require_square(p, "girth");
  const std::size_t n = p.rows();
  const auto adj = out_lists(p);
  std::optional<int> best;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1);
    std::deque<std::size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      for (auto v : adj[u]) {
        if (v == s) {
          int len = static_cast<int>(dist[u] + 1);
          if (!best || len < *best) best = len;
        } else if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
      }
    }
  }
  return best;
}

FullIndecomposability full_indecomposability(const PatternMatrix& p, const Caps& caps) {
  require_square(p, "full indecomposability");
  const int n = static_cast<int>(p.rows());
  FullIndecomposability r;
  if (n == 1) {
    r.fully_indecomposable = p.get(0, 0);
    return r;
  }
  require_within_cap(n, std::min(caps.fully_indecomposable, Caps::mask_limit), "full indecomposability scan");
  const auto rows = p.row_masks();
  std::uint64_t found_r = 0, found_u = 0;
  // R is partly decomposing when the columns it touches number at most |R|.
  auto dfs = [&](auto&& self, std::uint64_t set, int size, std::uint64_t uni, int next) -> bool {
    for (int e = next; e < n; ++e) {
      std::uint64_t s2 = set | (std::uint64_t{1} << e);
      std::uint64_t u2 = uni | rows[static_cast<std::size_t>(e)];
      if (size + 1 < n) {
        if (std::popcount(u2) <= size + 1) {
          found_r = s2;
          found_u = u2;
          return true;
        }
        if (self(self, s2, size + 1, u2, e + 1)) return true;
      }
    }
    return false;
  };
  if (dfs(dfs, 0, 0, 0, 0)) {
    r.rows = IndexSet::from_mask(p.rows(), found_r);
    r.zero_cols = IndexSet::from_mask(p.rows(), found_u).complement();
  } else {
    r.fully_indecomposable = true;
  }
  return r;
}

bool is_fully_indecomposable(const PatternMatrix& p, const Caps& caps) {
  return full_indecomposability(p, caps).fully_indecomposable;
}

bool is_markov(const PatternMatrix& p) { return !positive_columns(p).empty(); }

Scrambling scrambling(const PatternMatrix& p) {
  if (p.rows() < 2) throw Error(ErrorCode::invalid_argument, "scrambling needs at least two rows");
  Scrambling r;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = i + 1; j < p.rows(); ++j) {
      IndexSet shared = p.row(i) & p.row(j);
      if (shared.empty()) {
        r.witness.clear();
        r.failing_pair = std::make_pair(i, j);
        return r;
      }
      r.witness.emplace_back(i, j, shared.first());
    }
  r.scrambling = true;
  return r;
}

bool is_scrambling(const PatternMatrix& p) { return scrambling(p).scrambling; }

IndexSet consequent_indices(const PatternMatrix& p, const IndexSet& t) {
  if (t.universe() != p.rows()) throw Error(ErrorCode::out_of_range, "index set does not match the row count");
  if (t.empty()) throw Error(ErrorCode::empty_index_set, "consequent set of an empty row set");
  IndexSet f(p.cols());
  for (auto i : t.members()) f = f | p.row(i);
  return f;
}

Sarymsakov sarymsakov(const PatternMatrix& p, const Caps& caps) {
  const int m = static_cast<int>(p.rows());
  if (m < 2) throw Error(ErrorCode::invalid_argument, "Sarymsakov property needs at least two rows");
  require_within_cap(m, std::min(caps.sarymsakov, Caps::mask_limit), "Sarymsakov pair scan");
  if (p.cols() > 64) throw Error(ErrorCode::cap_exceeded, "Sarymsakov scan supports at most 64 columns");
  const auto rows = p.row_masks();
  std::uint64_t bad_i = 0, bad_j = 0;
  // every row goes to I, to J, or to neither
  auto dfs = [&](auto&& self, int r, std::uint64_t i_set, std::uint64_t j_set, std::uint64_t fi,
                 std::uint64_t fj) -> bool {
    if (r == m) {
      if (!i_set || !j_set) return false;
      if (fi & fj) return false;
      if (std::popcount(fi | fj) > std::popcount(i_set | j_set)) return false;
      bad_i = i_set;
      bad_j = j_set;
      return true;
    }
    std::uint64_t bit = std::uint64_t{1} << r;
    std::uint64_t row = rows[static_cast<std::size_t>(r)];
    if (self(self, r + 1, i_set, j_set, fi, fj)) return true;
    if (!(row & fj) && self(self, r + 1, i_set | bit, j_set, fi | row, fj)) return true;
    if (!(row & fi) && self(self, r + 1, i_set, j_set | bit, fi, fj | row)) return true;
    return false;
  };
  Sarymsakov s;
  if (dfs(dfs, 0, 0, 0, 0, 0)) {
    s.counterexample = std::make_pair(IndexSet::from_mask(p.rows(), bad_i), IndexSet::from_mask(p.rows(), bad_j));
  } else {
    s.sarymsakov = true;
  }
  return s;
}

bool is_sarymsakov(const PatternMatrix& p, const Caps& caps) { return sarymsakov(p, caps).sarymsakov; }

Rational mu(const StochasticMatrix& sp) {
  const NonnegMatrix& p = sp.matrix();
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "mu needs a square matrix");
  Rational best = 0;
  for (std::size_t j = 0; j < p.cols(); ++j) {
    Rational lo = p.at(0, j);
    for (std::size_t i = 1; i < p.rows(); ++i) lo = std::min(lo, p.at(i, j));
    best = std::max(best, lo);
  }
  return best;
}

Rational alpha(const StochasticMatrix& sp) {
  const NonnegMatrix& p = sp.matrix();
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "alpha needs a square matrix");
  if (p.rows() < 2) throw Error(ErrorCode::invalid_argument, "alpha needs at least two rows");
  Rational best = 1;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = i + 1; j < p.rows(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < p.cols(); ++k) s += std::min(p.at(i, k), p.at(j, k));
      best = std::min(best, s);
    }
  return best;
}

PowerLimit power_limit(const StochasticMatrix& sp, const Rational& tolerance, long max_iter) {
  const NonnegMatrix& p = sp.matrix();
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "power limit needs a square matrix");
  if (sgn(tolerance) <= 0) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  if (max_iter < 1) throw Error(ErrorCode::invalid_argument, "max_iter must be >= 1");
  PowerLimit r;
  NonnegMatrix prev = p;
  for (long it = 1; it <= max_iter; ++it) {
    NonnegMatrix next = prev * p;
    bool close = true;
    for (std::size_t i = 0; i < p.rows() && close; ++i)
      for (std::size_t j = 0; j < p.cols() && close; ++j) close = abs(next.at(i, j) - prev.at(i, j)) < tolerance;
    r.iterations = it;
    prev = std::move(next);
    if (close) {
      r.converged = true;
      break;
    }
  }
  r.last = std::move(prev);
  return r;
}

ClassificationReport classify(const NonnegMatrix& m, const Caps& caps) {
  const PatternMatrix p = indicator(m);
  ClassificationReport r;
  r.rows = p.rows();
  r.cols = p.cols();
  r.row_allowable = is_row_allowable(p);
  r.column_allowable = is_column_allowable(p);
  r.positive = is_positive(p);
  r.positive_columns = positive_columns(p);
  r.markov = !r.positive_columns.empty();
  if (p.square()) {
    r.irreducibility = irreducibility(p);
    r.positive_diagonal = positive_diagonal(p);
    r.girth = girth(p);
    r.gk_index = gk_index(p, caps);
    r.full_indecomposability = full_indecomposability(p, caps);
    if (r.irreducibility->irreducible) {
      r.period = period(p);
      r.primitive = *r.period == 1;
      if (*r.primitive) r.gamma = gamma(p);
    } else {
      r.primitive = false;
    }
  }
  if (p.rows() >= 2) {
    r.scrambling = scrambling(p);
    r.sarymsakov = sarymsakov(p, caps);
  }
  r.stochastic = is_stochastic(m);
  if (r.stochastic && m.square()) {
    StochasticMatrix s(m);
    r.mu = mu(s);
    if (m.rows() >= 2) r.alpha = alpha(s);
  }
  return r;
}

}  // namespace posmat
