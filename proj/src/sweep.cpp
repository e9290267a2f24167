#include "posmat/sweep.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "posmat/classes.hpp"
#include "posmat/gk.hpp"

namespace posmat {

namespace {

constexpr int kBudget = 20000;

Rational some_density(Rng& rng, int lo_tenths = 3) { return Rational(rng.between(lo_tenths, 8), 10); }

PatternMatrix draw(std::size_t rows, std::size_t cols, Rng& rng, const std::function<bool(const PatternMatrix&)>& ok,
                   const char* what, int lo_tenths = 3,
                   const std::function<void(PatternMatrix&)>& shape = nullptr) {
  for (int t = 0; t < kBudget; ++t) {
    PatternMatrix p = random_pattern(static_cast<int>(rows), static_cast<int>(cols), some_density(rng, lo_tenths), rng);
    if (shape) shape(p);
    if (ok(p)) return p;
  }
  throw Error(ErrorCode::rejection_budget_exhausted, std::string("no random ") + what + " found within the budget");
}

void fill_diagonal(PatternMatrix& p) {
  for (std::size_t i = 0; i < p.rows(); ++i) p.set(i, i);
}

IndexSet random_nonempty_subset(std::size_t n, Rng& rng) {
  for (;;) {
    IndexSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng.below(2)) s.insert(i);
    if (!s.empty()) return s;
  }
}

// k uniform in 1..gk_index(p).
int pick_k(const PatternMatrix& p, Rng& rng, const Caps& caps) {
  int top = gk_index(p, caps);
  if (top < 1) throw Error(ErrorCode::internal, "pick_k on a matrix that is not g_1");
  return rng.between(1, top);
}

std::vector<PatternMatrix> more(std::vector<PatternMatrix> ps, std::size_t total, std::size_t n, Rng& rng,
                                const std::function<bool(const PatternMatrix&)>& ok, const char* what, int lo = 3,
                                const std::function<void(PatternMatrix&)>& shape = nullptr) {
  while (ps.size() < total) ps.push_back(draw(n, n, rng, ok, what, lo, shape));
  return ps;
}

bool reaches_leading_block(const PatternMatrix& p, std::size_t m) {
  std::vector<bool> reach(p.rows(), false);
  std::deque<std::size_t> frontier;
  for (std::size_t i = 0; i < m; ++i) {
    reach[i] = true;
    frontier.push_back(i);
  }
  PatternMatrix pt = p.transpose();
  while (!frontier.empty()) {
    std::size_t v = frontier.front();
    frontier.pop_front();
    for (auto u : pt.row(v).members())
      if (!reach[u]) {
        reach[u] = true;
        frontier.push_back(u);
      }
  }
  return std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
}

}  // namespace

bool is_violation(const BoundResult& r) {
  if (!r.hypotheses_met) return false;
  if (!r.conclusion_holds) return true;
  return r.attained && *r.attained > r.bound_value;
}

BoundResult run_instance(const Instance& in, const Caps& caps) {
  const auto& ps = in.factors;
  switch (in.theorem) {
    case TheoremId::identity_shift: return verify_identity_shift(ps.at(0), in.k, caps);
    case TheoremId::diagonal_irreducible: return verify_diagonal_irreducible(ps.at(0));
    case TheoremId::gk_diagonal_product: return verify_gk_diagonal_product(ps, in.k, caps);
    case TheoremId::diagonal_subset_allowable: return verify_diagonal_subset_allowable(ps.at(0));
    case TheoremId::diagonal_count: return verify_diagonal_count(ps.at(0));
    case TheoremId::diagonal_subset_product:
      if (ps.size() == 1) return verify_diagonal_subset_power(ps[0], in.k, caps);
      if (!in.w) throw Error(ErrorCode::invalid_argument, "the product form needs W");
      return verify_diagonal_subset_product(ps, *in.w, in.k, in.variant, caps);
    case TheoremId::girth: return verify_girth(ps.at(0));
    case TheoremId::gk_girth: return verify_gk_girth(ps.at(0), in.k, caps);
    case TheoremId::gk_wielandt: return verify_gk_wielandt(ps.at(0), in.k, caps);
    case TheoremId::wielandt: return verify_wielandt_extremal(in.n);
    case TheoremId::fi_product: return verify_fi_product(ps, caps);
    case TheoremId::gk_fi_product: return verify_gk_fi_product(ps, in.k, caps);
    case TheoremId::leading_block: return verify_leading_block(ps.at(0), in.m_block);
    case TheoremId::scrambling_markov: return verify_scrambling_markov(ps);
    case TheoremId::scrambling_chain: return verify_scrambling_chain(ps);
    case TheoremId::sarymsakov_scrambling: return verify_sarymsakov_scrambling(ps, caps);
    case TheoremId::sarymsakov_markov: return verify_sarymsakov_markov(ps, caps);
  }
  throw Error(ErrorCode::internal, "unhandled theorem");
}

Instance random_instance(TheoremId id, int n, Rng& rng, const Caps& caps) {
  if (n < 2) throw Error(ErrorCode::out_of_range, "random instances need n >= 2");
  const auto N = static_cast<std::size_t>(n);
  Instance in;
  in.theorem = id;
  auto irreducible = [](const PatternMatrix& p) { return is_irreducible(p); };
  auto primitive = [](const PatternMatrix& p) { return is_primitive(p); };
  auto fully_indec = [&](const PatternMatrix& p) { return is_fully_indecomposable(p, caps); };
  auto scr = [](const PatternMatrix& p) { return is_scrambling(p); };
  auto sary = [&](const PatternMatrix& p) { return is_sarymsakov(p, caps); };
  auto gk = [&](int k) { return [&caps, k](const PatternMatrix& p) { return is_gk(p, k, caps).is_gk; }; };

  switch (id) {
    case TheoremId::identity_shift:
    case TheoremId::gk_wielandt: {
      PatternMatrix p = draw(N, N, rng, irreducible, "irreducible matrix");
      in.k = pick_k(p, rng, caps);
      in.factors = {p};
      break;
    }
    case TheoremId::diagonal_irreducible:
      in.factors = {draw(N, N, rng, irreducible, "irreducible matrix", 2, fill_diagonal)};
      break;
    case TheoremId::gk_diagonal_product: {
      PatternMatrix p = draw(N, N, rng, irreducible, "irreducible matrix", 3, fill_diagonal);
      in.k = pick_k(p, rng, caps);
      in.factors = more({p}, static_cast<std::size_t>(bound_identity_shift(n, in.k)), N, rng, gk(in.k),
                        "g_k matrix", 3, fill_diagonal);
      break;
    }
    case TheoremId::diagonal_subset_allowable:
    case TheoremId::diagonal_count:
      in.factors = {draw(N, N, rng, [](const PatternMatrix& p) { return is_irreducible(p) && !positive_diagonal(p).empty(); },
                         "irreducible matrix with a positive diagonal entry", 2)};
      break;
    case TheoremId::diagonal_subset_product: {
      in.variant = rng.below(2) ? Variant::tail : Variant::head;
      in.w = random_nonempty_subset(N, rng);
      const IndexSet w = *in.w;
      auto cover = [w](PatternMatrix& p) {
        for (auto i : w.members()) p.set(i, i);
      };
      PatternMatrix p = draw(N, N, rng, irreducible, "irreducible matrix", 3, cover);
      in.k = pick_k(p, rng, caps);
      const auto m = static_cast<std::size_t>(bound_identity_shift(n, in.k));
      std::vector<PatternMatrix> mid = more({p}, m, N, rng, gk(in.k), "g_k matrix", 3, cover);
      const IndexSet all = IndexSet::full(N);
      PatternMatrix special =
          in.variant == Variant::head
              ? draw(N, N, rng, [&](const PatternMatrix& q) { return is_row_allowable(submatrix(q, all, w)); },
                     "matrix row-allowable on W", 2)
              : draw(N, N, rng, [&](const PatternMatrix& q) { return is_column_allowable(submatrix(q, w, all)); },
                     "matrix column-allowable on W", 2);
      if (in.variant == Variant::head) mid.insert(mid.begin(), special);
      else mid.push_back(special);
      in.factors = std::move(mid);
      break;
    }
    case TheoremId::girth:
      in.factors = {draw(N, N, rng, primitive, "primitive matrix", 2)};
      break;
    case TheoremId::gk_girth: {
      PatternMatrix p = draw(N, N, rng, primitive, "primitive matrix", 2);
      in.k = pick_k(p, rng, caps);
      in.factors = {p};
      break;
    }
    case TheoremId::wielandt:
      in.n = n;
      break;
    case TheoremId::fi_product:
      in.factors = more({}, N - 1, N, rng, fully_indec, "fully indecomposable matrix");
      break;
    case TheoremId::gk_fi_product: {
      PatternMatrix p = draw(N, N, rng, fully_indec, "fully indecomposable matrix");
      in.k = pick_k(p, rng, caps);
      auto ok = [&, k = in.k](const PatternMatrix& q) { return is_fully_indecomposable(q, caps) && is_gk(q, k, caps).is_gk; };
      in.factors = more({p}, static_cast<std::size_t>(bound_gk_fi_product(n, in.k)), N, rng, ok,
                        "fully indecomposable g_k matrix");
      break;
    }
    case TheoremId::leading_block: {
      in.m_block = rng.between(1, n);
      const auto m = static_cast<std::size_t>(in.m_block);
      PatternMatrix q = m == 1 ? PatternMatrix::ones(1, 1) : draw(m, m, rng, primitive, "primitive block", 3);
      auto assemble = [&](PatternMatrix& p) {
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < N; ++j) {
            p.set(i, j, j < m && q.get(i, j));
          }
      };
      in.factors = {draw(N, N, rng, [m](const PatternMatrix& p) { return reaches_leading_block(p, m); },
                         "matrix reaching the leading block", 2, assemble)};
      break;
    }
    case TheoremId::scrambling_markov:
      in.factors = more({}, N - 1, N, rng, scr, "scrambling matrix");
      break;
    case TheoremId::scrambling_chain: {
      std::vector<std::size_t> dims{N};
      for (std::size_t l = 1; l < N - 1; ++l) dims.push_back(static_cast<std::size_t>(rng.between(2, n)));
      dims.push_back(static_cast<std::size_t>(rng.between(1, n)));
      for (std::size_t l = 0; l + 1 < dims.size(); ++l)
        in.factors.push_back(draw(dims[l], dims[l + 1], rng, scr, "scrambling matrix"));
      break;
    }
    case TheoremId::sarymsakov_scrambling:
      in.factors = more({}, N - 1, N, rng, sary, "Sarymsakov matrix");
      break;
    case TheoremId::sarymsakov_markov:
      in.factors = more({}, static_cast<std::size_t>(bound_sarymsakov_markov(n)), N, rng, sary, "Sarymsakov matrix");
      break;
  }
  return in;
}

SweepSummary sweep(TheoremId id, long trials, int n_lo, int n_hi, std::uint64_t root_seed, const Caps& caps) {
  if (n_lo < 2 || n_hi < n_lo) throw Error(ErrorCode::out_of_range, "size range must satisfy 2 <= lo <= hi");
  if (trials < 0) throw Error(ErrorCode::out_of_range, "trial count must be nonnegative");
  SweepSummary s;
  s.theorem = id;
  s.root_seed = root_seed;
  s.n_lo = n_lo;
  s.n_hi = n_hi;
  for (long t = 0; t < trials; ++t) {
    const std::uint64_t seed = derive_seed(root_seed, static_cast<std::uint64_t>(t));
    Rng rng(seed);
    int n = rng.between(n_lo, n_hi);
    Instance in = random_instance(id, n, rng, caps);
    BoundResult r = run_instance(in, caps);
    ++s.trials;
    if (!r.hypotheses_met) {
      if (!s.first_unmet) s.first_unmet = SweepFailure{t, seed, in, r};
      continue;
    }
    ++s.hypotheses_met;
    if (r.slack) s.min_slack = s.min_slack ? std::min(*s.min_slack, *r.slack) : *r.slack;
    if (is_violation(r)) {
      ++s.violations;
      if (!s.first_violation) s.first_violation = SweepFailure{t, seed, in, r};
    }
  }
  return s;
}

}  // namespace posmat
