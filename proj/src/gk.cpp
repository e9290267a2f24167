#include "posmat/gk.hpp"

#include <algorithm>
#include <bit>

namespace posmat {

namespace {

void require_square(const PatternMatrix& p) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "g_k analysis needs a square matrix");
}

struct Scan {
  int n;
  int k;
  const std::vector<std::uint64_t>& col;
  std::uint64_t found = 0;

  // Preorder over sets extended by larger elements: this visits F in
  // lexicographic order of sorted member lists.
  bool dfs(std::uint64_t f, int size, std::uint64_t reach, int next) {
    for (int e = next; e < n; ++e) {
      std::uint64_t g = f | (std::uint64_t{1} << e);
      std::uint64_t r = reach | col[static_cast<std::size_t>(e)];
      int gs = size + 1;
      if (gs < n) {
        int d = std::popcount(r & ~g);
        if (d < std::min(k, n - gs)) {
          found = g;
          return true;
        }
        if (dfs(g, gs, r, e + 1)) return true;
      }
    }
    return false;
  }
};

}  // namespace

IndexSet deficiency_set(const PatternMatrix& p, const IndexSet& f) {
  require_square(p);
  if (f.universe() != p.rows()) throw Error(ErrorCode::out_of_range, "index set does not match the matrix");
  if (f.empty() || f.is_full())
    throw Error(ErrorCode::invalid_argument, "F must be a nonempty proper subset, got " + f.str());
  IndexSet d(p.rows());
  for (auto i : f.complement().members())
    if (p.row(i).intersects(f)) d.insert(i);
  return d;
}

GkReport is_gk(const PatternMatrix& p, int k, const Caps& caps) {
  require_square(p);
  const int n = static_cast<int>(p.rows());
  GkReport rep;
  rep.k_tested = k;
  if (n == 1) {
    if (k != 1) throw Error(ErrorCode::out_of_range, "for n = 1 only k = 1 is meaningful");
    rep.is_gk = p.get(0, 0);
    return rep;
  }
  if (k < 1 || k > n - 1)
    throw Error(ErrorCode::out_of_range, "k = " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
  require_within_cap(n, std::min(caps.gk, Caps::mask_limit), "g_k subset scan");
  auto col = p.column_masks();
  Scan s{n, k, col};
  if (s.dfs(0, 0, 0, 0)) {
    rep.is_gk = false;
    rep.counterexample = IndexSet::from_mask(p.rows(), s.found);
  } else {
    rep.is_gk = true;
  }
  return rep;
}

int gk_index(const PatternMatrix& p, const Caps& caps) {
  require_square(p);
  const int n = static_cast<int>(p.rows());
  if (n == 1) return p.get(0, 0) ? 1 : 0;
  if (!is_gk(p, 1, caps).is_gk) return 0;
  // nested classes: the predicate is monotone in k
  int lo = 1, hi = n - 1;
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    if (is_gk(p, mid, caps).is_gk)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

int vector_growth(const NonnegMatrix& p, int k, const std::vector<Rational>& y, const Caps& caps) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "vector growth needs a square matrix");
  const std::size_t n = p.rows();
  if (y.size() != n) throw Error(ErrorCode::dimension_mismatch, "vector length does not match the matrix");
  int h = 0;
  for (const auto& v : y) {
    if (sgn(v) < 0) throw Error(ErrorCode::negative_entry, "vector has a negative coordinate");
    if (sgn(v) > 0) ++h;
  }
  if (h < 1 || h > static_cast<int>(n) - 1)
    throw Error(ErrorCode::precondition_not_met,
                "vector must have between 1 and n-1 positive coordinates, has " + std::to_string(h));
  if (!is_gk(indicator(p), k, caps).is_gk)
    throw Error(ErrorCode::precondition_not_met, "matrix is not g_" + std::to_string(k));
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = y[i];
    for (std::size_t j = 0; j < n; ++j) s += p.at(i, j) * y[j];
    if (sgn(s) > 0) ++count;
  }
  int need = h + std::min(k, static_cast<int>(n) - h);
  if (count < need)
    throw Error(ErrorCode::internal, "vector growth gave " + std::to_string(count) + " positive coordinates, below " +
                                         std::to_string(need));
  return count;
}

}  // namespace posmat
