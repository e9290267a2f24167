#include "posmat/bounds.hpp"

#include <algorithm>
#include <deque>

#include "posmat/classes.hpp"
#include "posmat/generators.hpp"
#include "posmat/gk.hpp"

namespace posmat {

namespace {

struct Named {
  TheoremId id;
  const char* name;
};

const Named kNames[] = {
    {TheoremId::identity_shift, "identity-shift"},
    {TheoremId::diagonal_irreducible, "diagonal-irreducible"},
    {TheoremId::gk_diagonal_product, "gk-diagonal-product"},
    {TheoremId::diagonal_subset_allowable, "diagonal-subset-allowable"},
    {TheoremId::diagonal_count, "diagonal-count"},
    {TheoremId::diagonal_subset_product, "diagonal-subset-product"},
    {TheoremId::girth, "girth"},
    {TheoremId::gk_girth, "gk-girth"},
    {TheoremId::gk_wielandt, "gk-wielandt"},
    {TheoremId::wielandt, "wielandt"},
    {TheoremId::fi_product, "fi-product"},
    {TheoremId::gk_fi_product, "gk-fi-product"},
    {TheoremId::leading_block, "leading-block"},
    {TheoremId::scrambling_markov, "scrambling-markov"},
    {TheoremId::scrambling_chain, "scrambling-chain"},
    {TheoremId::sarymsakov_scrambling, "sarymsakov-scrambling"},
    {TheoremId::sarymsakov_markov, "sarymsakov-markov"},
};

void require_param(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::out_of_range, what);
}

void require_nk(long n, long k) {
  require_param(n >= 2, "n must be >= 2");
  require_param(k >= 1 && k <= n - 1, "k = " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
}

BoundResult start(TheoremId id, long bound) {
  BoundResult r;
  r.theorem = id;
  r.bound_value = bound;
  return r;
}

BoundResult unmet(BoundResult r, const std::string& why) {
  r.hypotheses_met = false;
  r.conclusion_holds = false;
  r.note = why;
  return r;
}

void set_attained(BoundResult& r, long a) {
  if (a <= 0) return;
  r.attained = a;
  r.slack = r.bound_value - a;
}

bool all_positive(const PatternMatrix& q) { return is_positive(q); }
bool markov_pred(const PatternMatrix& q) { return is_markov(q); }
bool scrambling_pred(const PatternMatrix& q) { return q.rows() >= 2 && is_scrambling(q); }

// P^e for e >= 0.
PatternMatrix power0(const PatternMatrix& p, long e) {
  return e == 0 ? PatternMatrix::identity(p.rows()) : bool_power(p, e);
}

std::size_t common_order(const std::vector<PatternMatrix>& ps) {
  if (ps.empty()) throw Error(ErrorCode::invalid_argument, "no matrices given");
  std::size_t n = ps[0].rows();
  for (const auto& p : ps)
    if (!p.square() || p.rows() != n)
      throw Error(ErrorCode::dimension_mismatch, "all factors must be square of the same order");
  return n;
}

// Least l with pred(P_1 ... P_l); 0 if none.
long least_prefix(const std::vector<PatternMatrix>& ps, bool (*pred)(const PatternMatrix&)) {
  PatternMatrix q = ps[0];
  for (std::size_t l = 1; l <= ps.size(); ++l) {
    if (pred(q)) return static_cast<long>(l);
    if (l < ps.size()) q = bool_product(q, ps[l]);
  }
  return 0;
}

std::string factor_label(std::size_t l) { return "factor " + std::to_string(l + 1); }

IndexSet prefix_set(std::size_t universe, std::size_t m) {
  IndexSet s(universe);
  for (std::size_t i = 0; i < m; ++i) s.insert(i);
  return s;
}

bool diagonal_covers(const PatternMatrix& p, const IndexSet& w) { return w.is_subset_of(positive_diagonal(p)); }

// Shared shape of the product theorems: either one square matrix taken to the
// power `bound`, or exactly `bound` factors.
template <typename Hyp>
BoundResult product_theorem(BoundResult r, const std::vector<PatternMatrix>& ps, Hyp hyp,
                            bool (*pred)(const PatternMatrix&), const char* what) {
  const long bound = r.bound_value;
  if (ps.size() == 1) {
    std::string why;
    if (!hyp(ps[0], why)) return unmet(r, why);
    r.hypotheses_met = true;
    r.conclusion_holds = pred(bool_power(ps[0], bound));
    set_attained(r, least_power_with(ps[0], std::max(bound, wielandt_number(static_cast<long>(ps[0].rows()))), pred));
    r.note = std::string("power form: P^") + std::to_string(bound) + " " + what;
    return r;
  }
  if (static_cast<long>(ps.size()) != bound)
    return unmet(r, "expected " + std::to_string(bound) + " factors, got " + std::to_string(ps.size()));
  for (std::size_t l = 0; l < ps.size(); ++l) {
    std::string why;
    if (!hyp(ps[l], why)) return unmet(r, factor_label(l) + ": " + why);
  }
  r.hypotheses_met = true;
  r.conclusion_holds = pred(chain_product(ps));
  set_attained(r, least_prefix(ps, pred));
  r.note = std::string("product of ") + std::to_string(bound) + " factors " + what;
  return r;
}

}  // namespace

const char* theorem_name(TheoremId id) {
  for (const auto& n : kNames)
    if (n.id == id) return n.name;
  return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  for (const auto& n : kNames)
    if (name == n.name) return n.id;
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& n : kNames) v.push_back(n.id);
    return v;
  }();
  return ids;
}

// ---- closed forms

long floor_div(long a, long b) {
  if (b == 0) throw Error(ErrorCode::invalid_argument, "division by zero");
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long bound_identity_shift(long n, long k) {
  require_nk(n, k);
  return floor_div(n - 2, k) + 1;
}

long bound_diagonal_irreducible(long n) {
  require_param(n >= 2, "n must be >= 2");
  return n - 1;
}

long bound_diagonal_count(long n, long d) {
  require_param(n >= 2, "n must be >= 2");
  require_param(d >= 1 && d <= n, "d outside 1..n");
  return 2 * n - d - 1;
}

long bound_diagonal_subset_product(long n, long k, long d) {
  require_param(d >= 1 && d <= n, "d outside 1..n");
  return n + bound_identity_shift(n, k) - d;
}

long bound_girth(long n, long s) {
  require_param(n >= 2, "n must be >= 2");
  require_param(s >= 1 && s <= n, "girth outside 1..n");
  return n + s * (n - 2);
}

long bound_gk_girth(long n, long k, long s) {
  require_nk(n, k);
  require_param(s >= 1 && s <= n, "girth outside 1..n");
  return floor_div(n - s - 2, k) + 2 + s * (n - std::max(2L, k) + 1);
}

long bound_gk_wielandt(long n, long k) {
  require_nk(n, k);
  if (k == 1) return n * n - 2 * n + 2;
  long m = bound_identity_shift(n, k);
  return floor_div(n - m - 3, k) + 2 + (m + 1) * (n - k + 1);
}

long bound_gk_fi_product(long n, long k) {
  require_nk(n, k);
  return k == 1 ? n - 1 : n - k + 1;
}

long bound_scrambling_chain(const std::vector<long>& dims) {
  require_param(dims.size() >= 2, "need at least one factor");
  long z = -1;
  for (std::size_t u = 0; u + 1 < dims.size(); ++u) {
    long v = static_cast<long>(u) + dims[u] - 1;
    if (z < 0 || v < z) z = v;
  }
  return z;
}

long bound_sarymsakov_markov(long n) {
  require_param(n >= 2, "n must be >= 2");
  return (n - 1) * (n - 1);
}

// ---- verifiers

BoundResult verify_identity_shift(const PatternMatrix& p, int k, const Caps& caps) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "square matrix required");
  const long n = static_cast<long>(p.rows());
  BoundResult r = start(TheoremId::identity_shift, bound_identity_shift(n, k));
  auto g = is_gk(p, k, caps);
  if (!g.is_gk) return unmet(r, "not g_" + std::to_string(k) + " (F = " + g.counterexample->str() + ")");
  r.hypotheses_met = true;
  PatternMatrix q = with_identity(p);
  r.conclusion_holds = is_positive(bool_power(q, r.bound_value));
  set_attained(r, least_power_with(q, n, all_positive));
  return r;
}

BoundResult verify_diagonal_irreducible(const PatternMatrix& p) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "square matrix required");
  const long n = static_cast<long>(p.rows());
  if (n < 2) return unmet(start(TheoremId::diagonal_irreducible, 0), "needs n >= 2");
  BoundResult r = start(TheoremId::diagonal_irreducible, bound_diagonal_irreducible(n));
  if (!is_irreducible(p)) return unmet(r, "not irreducible");
  if (!positive_diagonal(p).is_full()) return unmet(r, "diagonal not fully positive");
  r.hypotheses_met = true;
  r.conclusion_holds = is_positive(bool_power(p, r.bound_value));
  set_attained(r, gamma(p));
  return r;
}

BoundResult verify_gk_diagonal_product(const std::vector<PatternMatrix>& ps, int k, const Caps& caps) {
  const long n = static_cast<long>(common_order(ps));
  BoundResult r = start(TheoremId::gk_diagonal_product, bound_identity_shift(n, k));
  auto hyp = [&](const PatternMatrix& p, std::string& why) {
    if (!positive_diagonal(p).is_full()) {
      why = "diagonal not fully positive";
      return false;
    }
    auto g = is_gk(p, k, caps);
    if (!g.is_gk) {
      why = "not g_" + std::to_string(k) + " (F = " + g.counterexample->str() + ")";
      return false;
    }
    return true;
  };
  return product_theorem(r, ps, hyp, all_positive, "is positive");
}

BoundResult verify_diagonal_subset_allowable(const PatternMatrix& p) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "square matrix required");
  const long n = static_cast<long>(p.rows());
  IndexSet w = positive_diagonal(p);
  const long d = static_cast<long>(w.size());
  BoundResult r = start(TheoremId::diagonal_subset_allowable, n - d);
  if (n < 2) return unmet(r, "needs n >= 2");
  if (!is_irreducible(p)) return unmet(r, "not irreducible");
  if (d == 0) return unmet(r, "no positive diagonal entry");
  r.hypotheses_met = true;
  PatternMatrix q = power0(p, n - d);
  IndexSet all = IndexSet::full(p.rows());
  bool rows_ok = is_row_allowable(submatrix(q, all, w));
  bool cols_ok = is_column_allowable(submatrix(q, w, all));
  r.conclusion_holds = rows_ok && cols_ok;
  r.note = "W = " + w.str() + (rows_ok ? "" : "; columns W not row-allowable") +
           (cols_ok ? "" : "; rows W not column-allowable");
  return r;
}

BoundResult verify_diagonal_count(const PatternMatrix& p) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "square matrix required");
  const long n = static_cast<long>(p.rows());
  const long d = static_cast<long>(positive_diagonal(p).size());
  if (n < 2) return unmet(start(TheoremId::diagonal_count, 0), "needs n >= 2");
  if (d == 0) return unmet(start(TheoremId::diagonal_count, 0), "no positive diagonal entry");
  BoundResult r = start(TheoremId::diagonal_count, bound_diagonal_count(n, d));
  if (!is_irreducible(p)) return unmet(r, "not irreducible");
  r.hypotheses_met = true;
  r.conclusion_holds = is_positive(bool_power(p, r.bound_value));
  set_attained(r, gamma(p));
  return r;
}

BoundResult verify_diagonal_subset_product(const std::vector<PatternMatrix>& ps, const IndexSet& w, int k,
                                           Variant variant, const Caps& caps) {
  const long n = static_cast<long>(common_order(ps));
  if (w.universe() != ps[0].rows()) throw Error(ErrorCode::out_of_range, "W does not match the matrix order");
  if (w.empty()) throw Error(ErrorCode::empty_index_set, "W must be nonempty");
  const long m = bound_identity_shift(n, k);
  BoundResult r = start(TheoremId::diagonal_subset_product,
                        bound_diagonal_subset_product(n, k, static_cast<long>(w.size())));
  if (static_cast<long>(ps.size()) != m + 1)
    return unmet(r, "expected " + std::to_string(m + 1) + " factors, got " + std::to_string(ps.size()));
  const IndexSet all = IndexSet::full(ps[0].rows());
  const std::size_t special = variant == Variant::head ? 0 : ps.size() - 1;
  for (std::size_t l = 0; l < ps.size(); ++l) {
    if (l == special) {
      bool ok = variant == Variant::head ? is_row_allowable(submatrix(ps[l], all, w))
                                         : is_column_allowable(submatrix(ps[l], w, all));
      if (!ok)
        return unmet(r, factor_label(l) + (variant == Variant::head ? ": columns W not row-allowable"
                                                                    : ": rows W not column-allowable"));
      continue;
    }
    if (!diagonal_covers(ps[l], w)) return unmet(r, factor_label(l) + ": diagonal not positive on W");
    auto g = is_gk(ps[l], k, caps);
    if (!g.is_gk)
      return unmet(r, factor_label(l) + ": not g_" + std::to_string(k) + " (F = " + g.counterexample->str() + ")");
  }
  r.hypotheses_met = true;
  PatternMatrix prod = chain_product(ps);
  r.conclusion_holds = is_positive(prod);
  r.note = std::string(variant == Variant::head ? "head" : "tail") + " variant, W = " + w.str();
  if (!r.conclusion_holds) {
    for (std::size_t i = 0; i < prod.rows(); ++i)
      if (prod.row_count(i) != prod.cols()) {
        r.note += "; row " + std::to_string(i + 1) + " of the product is " + prod.row(i).str();
        break;
      }
  }
  return r;
}

BoundResult verify_diagonal_subset_power(const PatternMatrix& p, int k, const Caps& caps) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "square matrix required");
  const long n = static_cast<long>(p.rows());
  IndexSet w = positive_diagonal(p);
  const long d = static_cast<long>(w.size());
  bound_identity_shift(n, k);  // validates k
  if (d == 0) return unmet(start(TheoremId::diagonal_subset_product, 0), "no positive diagonal entry");
  BoundResult r = start(TheoremId::diagonal_subset_product, bound_diagonal_subset_product(n, k, d));
  auto g = is_gk(p, k, caps);
  if (!g.is_gk) return unmet(r, "not g_" + std::to_string(k) + " (F = " + g.counterexample->str() + ")");
  r.hypotheses_met = true;
  r.conclusion_holds = is_positive(bool_power(p, r.bound_value));
  set_attained(r, gamma(p));
  r.note = "power form, W = " + w.str();
  return r;
}

BoundResult verify_girth(const PatternMatrix& p) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "square matrix required");
  const long n = static_cast<long>(p.rows());
  if (n < 2) return unmet(start(TheoremId::girth, 0), "needs n >= 2");
  if (!is_primitive(p)) return unmet(start(TheoremId::girth, 0), "not primitive");
  const long s = *girth(p);
  BoundResult r = start(TheoremId::girth, bound_girth(n, s));
  r.hypotheses_met = true;
  r.conclusion_holds = is_positive(bool_power(p, r.bound_value));
  set_attained(r, gamma(p));
  r.note = "girth " + std::to_string(s);
  return r;
}

BoundResult verify_gk_girth(const PatternMatrix& p, int k, const Caps& caps) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "square matrix required");
  const long n = static_cast<long>(p.rows());
  require_nk(n, k);
  if (!is_primitive(p)) return unmet(start(TheoremId::gk_girth, 0), "not primitive");
  const long s = *girth(p);
  BoundResult r = start(TheoremId::gk_girth, bound_gk_girth(n, k, s));
  auto g = is_gk(p, k, caps);
  if (!g.is_gk) return unmet(r, "not g_" + std::to_string(k) + " (F = " + g.counterexample->str() + ")");
  r.hypotheses_met = true;
  r.conclusion_holds = is_positive(bool_power(p, r.bound_value));
  set_attained(r, gamma(p));
  r.note = "girth " + std::to_string(s);
  return r;
}

BoundResult verify_gk_wielandt(const PatternMatrix& p, int k, const Caps& caps) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "square matrix required");
  const long n = static_cast<long>(p.rows());
  BoundResult r = start(TheoremId::gk_wielandt, bound_gk_wielandt(n, k));
  auto g = is_gk(p, k, caps);
  if (!g.is_gk) return unmet(r, "not g_" + std::to_string(k) + " (F = " + g.counterexample->str() + ")");
  r.hypotheses_met = true;
  bool prim = is_primitive(p);
  bool pos = is_positive(bool_power(p, r.bound_value));
  r.conclusion_holds = prim == pos;
  if (prim) set_attained(r, gamma(p));
  r.note = prim ? "primitive" : "not primitive";
  return r;
}

BoundResult verify_wielandt_extremal(int n) {
  if (n < 2) throw Error(ErrorCode::out_of_range, "n must be >= 2");
  BoundResult r = start(TheoremId::wielandt, wielandt_number(n));
  PatternMatrix q = generate_wielandt(n);
  r.hypotheses_met = true;
  long g = gamma(q);
  set_attained(r, g);
  r.conclusion_holds = g == r.bound_value && !is_positive(bool_power(q, r.bound_value - 1));
  return r;
}

BoundResult verify_fi_product(const std::vector<PatternMatrix>& ps, const Caps& caps) {
  const long n = static_cast<long>(common_order(ps));
  if (n < 2) return unmet(start(TheoremId::fi_product, 0), "needs n >= 2");
  BoundResult r = start(TheoremId::fi_product, n - 1);
  auto hyp = [&](const PatternMatrix& p, std::string& why) {
    auto fi = full_indecomposability(p, caps);
    if (!fi.fully_indecomposable) why = "partly decomposable (rows " + fi.rows->str() + ")";
    return fi.fully_indecomposable;
  };
  return product_theorem(r, ps, hyp, all_positive, "is positive");
}

BoundResult verify_gk_fi_product(const std::vector<PatternMatrix>& ps, int k, const Caps& caps) {
  const long n = static_cast<long>(common_order(ps));
  BoundResult r = start(TheoremId::gk_fi_product, bound_gk_fi_product(n, k));
  auto hyp = [&](const PatternMatrix& p, std::string& why) {
    auto fi = full_indecomposability(p, caps);
    if (!fi.fully_indecomposable) {
      why = "partly decomposable (rows " + fi.rows->str() + ")";
      return false;
    }
    auto g = is_gk(p, k, caps);
    if (!g.is_gk) {
      why = "not g_" + std::to_string(k) + " (F = " + g.counterexample->str() + ")";
      return false;
    }
    return true;
  };
  return product_theorem(r, ps, hyp, all_positive, "is positive");
}

BoundResult verify_leading_block(const PatternMatrix& p, int mb) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "square matrix required");
  const long n = static_cast<long>(p.rows());
  if (mb < 1 || mb > n) throw Error(ErrorCode::out_of_range, "block size outside 1..n");
  const std::size_t m = static_cast<std::size_t>(mb);
  BoundResult r = start(TheoremId::leading_block, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = m; j < p.cols(); ++j)
      if (p.get(i, j))
        return unmet(r, "upper-right block has a positive entry at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
  const IndexSet lead = prefix_set(p.rows(), m);
  PatternMatrix q = submatrix(p, lead, lead);
  if (!is_primitive(q)) return unmet(r, "leading block is not primitive");
  // rows that reach the leading block, by reverse search
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
  for (std::size_t i = m; i < p.rows(); ++i)
    if (!reach[i]) return unmet(r, "row " + std::to_string(i + 1) + " has no path into the leading block");
  const long gq = gamma(q);
  r.bound_value = gq * (n - mb + 1);
  r.hypotheses_met = true;
  const IndexSet all = IndexSet::full(p.rows());
  auto lead_positive = [&](const PatternMatrix& x) { return is_positive(submatrix(x, all, lead)); };
  bool at_bound = lead_positive(bool_power(p, r.bound_value));
  bool at_next = lead_positive(bool_power(p, (gq + 1) * (n - mb + 1)));
  r.conclusion_holds = at_bound && at_next;
  PatternMatrix x = p;
  for (long e = 1; e <= r.bound_value; ++e) {
    if (lead_positive(x)) {
      set_attained(r, e);
      break;
    }
    x = bool_product(x, p);
  }
  r.note = "gamma of leading block " + std::to_string(gq) + (at_next ? "" : "; fails at the next multiple");
  return r;
}

BoundResult verify_scrambling_markov(const std::vector<PatternMatrix>& ps) {
  const long n = static_cast<long>(common_order(ps));
  if (n < 2) return unmet(start(TheoremId::scrambling_markov, 0), "needs n >= 2");
  BoundResult r = start(TheoremId::scrambling_markov, n - 1);
  auto hyp = [&](const PatternMatrix& p, std::string& why) {
    auto s = scrambling(p);
    if (!s.scrambling)
      why = "not scrambling (rows " + std::to_string(s.failing_pair->first + 1) + "," +
            std::to_string(s.failing_pair->second + 1) + ")";
    return s.scrambling;
  };
  return product_theorem(r, ps, hyp, markov_pred, "is Markov");
}

BoundResult verify_scrambling_chain(const std::vector<PatternMatrix>& in) {
  if (in.empty()) throw Error(ErrorCode::invalid_argument, "no matrices given");
  std::vector<PatternMatrix> ps = in;
  if (ps.size() == 1 && ps[0].square() && ps[0].rows() > 2)
    ps.assign(ps[0].rows() - 1, in[0]);
  std::vector<long> dims{static_cast<long>(ps[0].rows())};
  for (std::size_t l = 0; l < ps.size(); ++l) {
    if (l + 1 < ps.size() && ps[l].cols() != ps[l + 1].rows())
      throw Error(ErrorCode::dimension_mismatch, factor_label(l) + " and the next do not chain");
    dims.push_back(static_cast<long>(ps[l].cols()));
  }
  BoundResult r = start(TheoremId::scrambling_chain, 0);
  if (dims[0] < 2) return unmet(r, "first factor needs at least two rows");
  if (static_cast<long>(ps.size()) != dims[0] - 1)
    return unmet(r, "expected " + std::to_string(dims[0] - 1) + " factors, got " + std::to_string(ps.size()));
  r.bound_value = bound_scrambling_chain(dims);
  for (std::size_t l = 0; l < ps.size(); ++l) {
    if (ps[l].rows() < 2) return unmet(r, factor_label(l) + " has a single row");
    auto s = scrambling(ps[l]);
    if (!s.scrambling) return unmet(r, factor_label(l) + ": not scrambling");
  }
  r.hypotheses_met = true;
  std::vector<PatternMatrix> prefix(ps.begin(), ps.begin() + r.bound_value);
  r.conclusion_holds = is_markov(chain_product(prefix));
  set_attained(r, least_prefix(ps, markov_pred));
  std::string d;
  for (auto v : dims) d += (d.empty() ? "" : "->") + std::to_string(v);
  r.note = "dimensions " + d;
  return r;
}

BoundResult verify_sarymsakov_scrambling(const std::vector<PatternMatrix>& ps, const Caps& caps) {
  const long n = static_cast<long>(common_order(ps));
  if (n < 2) return unmet(start(TheoremId::sarymsakov_scrambling, 0), "needs n >= 2");
  BoundResult r = start(TheoremId::sarymsakov_scrambling, n - 1);
  auto hyp = [&](const PatternMatrix& p, std::string& why) {
    auto s = sarymsakov(p, caps);
    if (!s.sarymsakov)
      why = "not Sarymsakov (I = " + s.counterexample->first.str() + ", J = " + s.counterexample->second.str() + ")";
    return s.sarymsakov;
  };
  return product_theorem(r, ps, hyp, scrambling_pred, "is scrambling");
}

BoundResult verify_sarymsakov_markov(const std::vector<PatternMatrix>& ps, const Caps& caps) {
  const long n = static_cast<long>(common_order(ps));
  if (n < 2) return unmet(start(TheoremId::sarymsakov_markov, 0), "needs n >= 2");
  BoundResult r = start(TheoremId::sarymsakov_markov, bound_sarymsakov_markov(n));
  auto hyp = [&](const PatternMatrix& p, std::string& why) {
    auto s = sarymsakov(p, caps);
    if (!s.sarymsakov)
      why = "not Sarymsakov (I = " + s.counterexample->first.str() + ", J = " + s.counterexample->second.str() + ")";
    return s.sarymsakov;
  };
  return product_theorem(r, ps, hyp, markov_pred, "is Markov");
}

}  // namespace posmat
