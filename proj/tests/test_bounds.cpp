#include <doctest.h>

#include "posmat/bounds.hpp"
#include "posmat/classes.hpp"
#include "posmat/fixtures.hpp"
#include "posmat/generators.hpp"
#include "posmat/gk.hpp"
#include "posmat/sweep.hpp"
#include "support.hpp"

using namespace posmat;
using support::pat;

namespace {

IndexSet one(std::size_t u, std::initializer_list<std::size_t> m) { return IndexSet::from_one_based(u, m); }

PatternMatrix fixture_pattern(const char* id) { return indicator(*fixture(id).matrix); }

PatternMatrix with_full_diagonal(PatternMatrix p) {
  for (std::size_t i = 0; i < p.rows(); ++i) p.set(i, i);
  return p;
}

template <typename Pred>
PatternMatrix draw(Rng& rng, std::size_t rows, std::size_t cols, Pred pred, int budget = 200000) {
  for (int t = 0; t < budget; ++t) {
    PatternMatrix p = random_pattern(static_cast<int>(rows), static_cast<int>(cols), Rational(rng.between(3, 8), 10), rng);
    if (pred(p)) return p;
  }
  FAIL("rejection budget exhausted");
  return PatternMatrix(rows, cols);
}

void check_sound(const BoundResult& r) {
  if (!r.hypotheses_met) return;
  CHECK(r.conclusion_holds);
  if (r.attained) {
    CHECK(*r.attained <= r.bound_value);
    REQUIRE(r.slack);
    CHECK(*r.slack >= 0);
  }
}

}  // namespace

TEST_CASE("closed-form bounds") {
  CHECK(bound_identity_shift(4, 2) == 2);
  CHECK(bound_identity_shift(9, 3) == 3);
  for (long n = 2; n <= 30; ++n) {
    CHECK(bound_identity_shift(n, 1) == n - 1);
    CHECK(bound_gk_wielandt(n, 1) == n * n - 2 * n + 2);
    CHECK(bound_diagonal_irreducible(n) == n - 1);
    CHECK(bound_diagonal_count(n, n) == bound_diagonal_irreducible(n));
    CHECK(bound_gk_fi_product(n, 1) == n - 1);
    CHECK(bound_sarymsakov_markov(n) == (n - 1) * (n - 1));
    CHECK(bound_scrambling_chain(std::vector<long>(static_cast<std::size_t>(n), n)) == n - 1);
    for (long k = 2; k <= n - 1; ++k) CHECK(bound_gk_fi_product(n, k) == n - k + 1);
    for (long s = 1; s <= n; ++s) {
      CHECK(bound_gk_girth(n, 1, s) == n + s * (n - 2));
      CHECK(bound_girth(n, s) == n + s * (n - 2));
    }
    for (long d = 1; d <= n; ++d) CHECK(bound_diagonal_count(n, d) == 2 * n - d - 1);
  }
  CHECK(bound_gk_wielandt(2, 1) == 2);
  CHECK(bound_scrambling_chain({4, 3, 3, 2}) == 3);
  CHECK(bound_scrambling_chain({2, 5}) == 1);
  CHECK(floor_div(-3, 2) == -2);
  CHECK(floor_div(3, 2) == 1);
  CHECK(floor_div(-4, 2) == -2);
  CHECK_THROWS_AS(floor_div(1, 0), Error);
  CHECK_THROWS_AS(bound_identity_shift(4, 4), Error);
  CHECK_THROWS_AS(bound_identity_shift(1, 1), Error);
  CHECK_THROWS_AS(bound_gk_girth(5, 2, 0), Error);
  CHECK_THROWS_AS(bound_diagonal_count(5, 0), Error);
  CHECK_THROWS_AS(bound_scrambling_chain({3}), Error);
}

TEST_CASE("the girth bound for g_k grows with the girth") {
  for (long n = 2; n <= 25; ++n)
    for (long k = 1; k <= n - 1; ++k)
      for (long s = 1; s < n; ++s) {
        long a = bound_gk_girth(n, k, s), b = bound_gk_girth(n, k, s + 1);
        if (n >= 3)
          CHECK(b > a);
        else
          CHECK(b >= a);
      }
}

TEST_CASE("the Wielandt-type bound for g_k never exceeds the classical one") {
  for (long n = 2; n <= 25; ++n)
    for (long k = 1; k <= n - 1; ++k) {
      CHECK(bound_gk_wielandt(n, k) <= n * n - 2 * n + 2);
      if (k > 1) CHECK(bound_gk_wielandt(n, k) <= bound_gk_wielandt(n, k - 1));
    }
}

TEST_CASE("verifiers on the named examples") {
  PatternMatrix ring = fixture_pattern("block-ring-9");
  BoundResult a = verify_identity_shift(ring, 3);
  CHECK(a.hypotheses_met);
  CHECK(a.conclusion_holds);
  CHECK(a.bound_value == 3);

  BoundResult b = verify_gk_diagonal_product({ring}, 3);
  CHECK(b.hypotheses_met);
  CHECK(b.conclusion_holds);
  CHECK(b.attained == 3);
  CHECK(verify_gk_diagonal_product({ring, ring, ring}, 3).conclusion_holds);

  BoundResult c = verify_diagonal_count(ring);
  CHECK(c.bound_value == 8);
  CHECK(c.attained == 3);
  CHECK(c.slack == 5);
  CHECK(verify_diagonal_irreducible(ring).bound_value == 8);

  BoundResult w = verify_identity_shift(fixture_pattern("identity-shift-not-gk"), 2);
  CHECK_FALSE(w.hypotheses_met);
  CHECK_FALSE(is_violation(w));

  PatternMatrix ones3 = PatternMatrix::ones(3, 3);
  CHECK(verify_gk_diagonal_product({ones3, ones3}, 1).conclusion_holds);
  CHECK(verify_gk_diagonal_product({ones3}, 2).attained == 1);

  BoundResult two = verify_gk_wielandt(PatternMatrix::ones(2, 2), 1);
  CHECK(two.bound_value == 2);
  CHECK(two.conclusion_holds);

  for (auto [n, g] : {std::pair{3, 5L}, {4, 10L}, {8, 50L}, {2, 2L}}) {
    BoundResult r = verify_wielandt_extremal(n);
    CHECK(r.conclusion_holds);
    CHECK(r.attained == g);
    CHECK(r.slack == 0);
  }
  CHECK_THROWS_AS(verify_wielandt_extremal(1), Error);

  BoundResult gw = verify_gk_wielandt(generate_periodic_block({2, 2}), 1);
  CHECK(gw.hypotheses_met);
  CHECK(gw.conclusion_holds);
  CHECK_FALSE(gw.attained.has_value());
}

TEST_CASE("fully indecomposable products") {
  PatternMatrix ones = PatternMatrix::ones(5, 5);
  CHECK(verify_fi_product({ones, ones, ones, ones}).conclusion_holds);
  CHECK_FALSE(verify_fi_product({ones, ones}).hypotheses_met);
  PatternMatrix two = pat({"**", "**"});
  BoundResult r = verify_fi_product({two});
  CHECK(r.bound_value == 1);
  CHECK(r.conclusion_holds);
  // every fully indecomposable 2x2 pattern is already positive
  for (std::uint64_t code = 0; code < 16; ++code) {
    PatternMatrix p = support::from_code(2, code);
    if (is_fully_indecomposable(p)) CHECK(is_positive(p));
  }
  CHECK_FALSE(verify_fi_product({PatternMatrix::identity(3), PatternMatrix::ones(3, 3)}).hypotheses_met);
  CHECK_THROWS_AS(verify_fi_product({PatternMatrix::identity(3), ones}), Error);

  Rng rng(57);
  for (int t = 0; t < 300; ++t) {
    std::vector<PatternMatrix> ps;
    for (int l = 0; l < 4; ++l) ps.push_back(draw(rng, 5, 5, [](const PatternMatrix& p) { return is_fully_indecomposable(p); }));
    BoundResult b = verify_fi_product(ps);
    REQUIRE(b.hypotheses_met);
    check_sound(b);
    CHECK(oracle::all_ones(support::grid(chain_product(ps))));
  }
}

TEST_CASE("leading block") {
  PatternMatrix p = pat({"*0", "**"});
  BoundResult r = verify_leading_block(p, 1);
  CHECK(r.hypotheses_met);
  CHECK(r.conclusion_holds);
  CHECK(positive_columns(bool_power(p, 2)).contains(0));

  PatternMatrix w = generate_wielandt(4);
  BoundResult full = verify_leading_block(w, 4);
  CHECK(full.hypotheses_met);
  CHECK(full.conclusion_holds);
  CHECK(full.attained == gamma(w));

  CHECK_FALSE(verify_leading_block(pat({"**", "**"}), 1).hypotheses_met);
  CHECK_FALSE(verify_leading_block(pat({"0*0", "*00", "**0"}), 2).hypotheses_met);
  CHECK_FALSE(verify_leading_block(pat({"*00", "0**", "0**"}), 1).hypotheses_met);
  CHECK_THROWS_AS(verify_leading_block(p, 3), Error);

  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    Instance in = random_instance(TheoremId::leading_block, 6, rng);
    BoundResult b = run_instance(in);
    REQUIRE(b.hypotheses_met);
    check_sound(b);
  }
}

TEST_CASE("scrambling chains") {
  PatternMatrix s2 = pat({"0*", "**"});
  BoundResult r = verify_scrambling_markov({s2});
  CHECK(r.bound_value == 1);
  CHECK(r.conclusion_holds);
  CHECK(verify_scrambling_chain({s2}).bound_value == 1);
  CHECK_FALSE(verify_scrambling_markov({PatternMatrix::identity(3)}).hypotheses_met);

  // 4 -> 3 -> 3 -> 2
  Rng rng(433);
  auto scr = [](const PatternMatrix& p) { return is_scrambling(p); };
  for (int t = 0; t < 200; ++t) {
    std::vector<PatternMatrix> ps{draw(rng, 4, 3, scr), draw(rng, 3, 3, scr), draw(rng, 3, 2, scr)};
    BoundResult b = verify_scrambling_chain(ps);
    REQUIRE(b.hypotheses_met);
    CHECK(b.bound_value == 3);
    check_sound(b);
    CHECK(oracle::markov(support::grid(chain_product(ps))));
  }
  CHECK_THROWS_AS(verify_scrambling_chain({PatternMatrix::ones(3, 2), PatternMatrix::ones(3, 3)}), Error);
  CHECK(verify_scrambling_chain({PatternMatrix::ones(3, 3)}).hypotheses_met);
}

TEST_CASE("Sarymsakov chains") {
  PatternMatrix s2 = pat({"0*", "**"});
  CHECK(verify_sarymsakov_scrambling({s2}).conclusion_holds);
  CHECK(verify_sarymsakov_markov({s2}).bound_value == 1);
  CHECK_FALSE(verify_sarymsakov_markov({PatternMatrix::identity(2)}).hypotheses_met);

  Rng rng(19);
  auto sar = [](const PatternMatrix& p) { return is_sarymsakov(p); };
  for (int t = 0; t < 200; ++t) {
    std::vector<PatternMatrix> ps;
    for (int l = 0; l < 9; ++l) ps.push_back(draw(rng, 4, 4, sar));
    std::vector<PatternMatrix> first(ps.begin(), ps.begin() + 3);
    BoundResult a = verify_sarymsakov_scrambling(first);
    BoundResult b = verify_sarymsakov_markov(ps);
    REQUIRE(a.hypotheses_met);
    REQUIRE(b.hypotheses_met);
    check_sound(a);
    check_sound(b);
    CHECK(oracle::scrambling(support::grid(chain_product(first))));
    CHECK(oracle::markov(support::grid(chain_product(ps))));
  }
}

TEST_CASE("diagonal-positive g_k products") {
  Rng rng(4010);
  auto g2 = [](const PatternMatrix& p) { return is_gk(with_full_diagonal(p), 2).is_gk; };
  for (int t = 0; t < 200; ++t) {
    std::vector<PatternMatrix> ps;
    for (int l = 0; l < 3; ++l) ps.push_back(with_full_diagonal(draw(rng, 6, 6, g2)));
    BoundResult b = verify_gk_diagonal_product(ps, 2);
    REQUIRE(b.hypotheses_met);
    CHECK(b.bound_value == 3);
    check_sound(b);
  }
}

TEST_CASE("diagonal count bound on irreducible matrices with two positive diagonal entries") {
  Rng rng(4014);
  auto shape = [](const PatternMatrix& p) { return positive_diagonal(p).size() == 2 && is_irreducible(p); };
  for (int t = 0; t < 200; ++t) {
    PatternMatrix p = draw(rng, 6, 6, shape);
    BoundResult b = verify_diagonal_count(p);
    REQUIRE(b.hypotheses_met);
    CHECK(b.bound_value == 9);
    check_sound(b);
    CHECK(oracle::all_ones(oracle::power(support::grid(p), 9)));
    check_sound(verify_diagonal_subset_allowable(p));
  }
}

TEST_CASE("diagonal-subset product: an instance meeting every hypothesis with a non-positive product") {
  PatternMatrix p1 = pat({"***", "0**", "***"});
  PatternMatrix p2 = pat({"***", "**0", "*00"});
  PatternMatrix p3 = pat({"0**", "0**", "*00"});
  IndexSet w = one(3, {2});

  // hypotheses, checked directly
  CHECK(is_row_allowable(submatrix(p1, IndexSet::full(3), w)));
  for (const auto& p : {p2, p3}) {
    CHECK(p.get(1, 1));
    CHECK(oracle::gk(support::grid(p), 1));
  }
  CHECK(bound_identity_shift(3, 1) + 1 == 3);

  BoundResult r = verify_diagonal_subset_product({p1, p2, p3}, w, 1, Variant::head);
  CHECK(r.hypotheses_met);
  CHECK_FALSE(r.conclusion_holds);
  CHECK(is_violation(r));
  auto prod = oracle::mul(oracle::mul(support::grid(p1), support::grid(p2)), support::grid(p3));
  CHECK(prod[1] == std::vector<int>{0, 1, 1});
}

TEST_CASE("diagonal-subset product: the seeded sweep reproduces the non-positive instance") {
  SweepSummary s = sweep(TheoremId::diagonal_subset_product, 200, 3, 7, 1);
  CHECK(s.hypotheses_met == 200);
  CHECK(s.violations == 1);
  REQUIRE(s.first_violation);
  CHECK(s.first_violation->trial == 105);
  const Instance& in = s.first_violation->instance;
  CHECK(in.k == 1);
  CHECK(in.variant == Variant::tail);
  REQUIRE(in.w);
  CHECK(*in.w == one(3, {3}));
  REQUIRE(in.factors.size() == 3);
  CHECK(in.factors[0] == pat({"0*0", "***", "***"}));
  CHECK(in.factors[1] == pat({"***", "**0", "*0*"}));
  CHECK(in.factors[2] == pat({"0*0", "*00", "***"}));
  // replaying the recorded per-trial seed gives the same instance
  CHECK(s.first_violation->seed == derive_seed(1, 105));
  Rng rng(s.first_violation->seed);
  int n = rng.between(3, 7);
  CHECK(n == 3);
  Instance again = random_instance(TheoremId::diagonal_subset_product, n, rng);
  CHECK(again.factors == in.factors);
  CHECK(is_violation(run_instance(again)));
}

TEST_CASE("diagonal-subset power form") {
  Rng rng(4151);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 3 + rng.below(5);
    PatternMatrix p = support::random_square(rng, n);
    int k = gk_index(p);
    if (k == 0 || positive_diagonal(p).empty()) continue;
    int kk = rng.between(1, k);
    BoundResult b = verify_diagonal_subset_power(p, kk);
    REQUIRE(b.hypotheses_met);
    check_sound(b);
  }
}

TEST_CASE("a positive power at the g_k Wielandt exponent means primitive") {
  Rng rng(4024);
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = 2 + rng.below(7);
    PatternMatrix p = support::random_square(rng, n);
    int k = gk_index(p);
    if (k == 0) continue;
    long h = bound_gk_wielandt(static_cast<long>(n), k);
    bool pos = oracle::all_ones(oracle::power(support::grid(p), h));
    CHECK(pos == is_primitive(p));
    BoundResult b = verify_gk_wielandt(p, k);
    CHECK(b.hypotheses_met);
    check_sound(b);
  }
}

TEST_CASE("factors sharing an irreducible diagonal-positive pattern") {
  Rng rng(409);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + rng.below(6);
    PatternMatrix base = with_full_diagonal(support::random_square(rng, n));
    if (!is_irreducible(base)) continue;
    std::vector<PatternMatrix> ps;
    for (std::size_t l = 0; l + 1 < n; ++l) {
      // same pattern, or more positive entries
      PatternMatrix q = base;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (rng.below(5) == 0) q.set(i, j);
      ps.push_back(q);
    }
    CHECK(is_positive(chain_product(ps)));
    check_sound(verify_diagonal_irreducible(base));
  }
}

TEST_CASE("verifiers report unmet hypotheses rather than violations") {
  Rng rng(1111);
  int unmet = 0;
  for (int t = 0; t < 600; ++t) {
    std::size_t n = 2 + rng.below(5);
    PatternMatrix p = support::random_square(rng, n);
    std::vector<BoundResult> rs{verify_diagonal_irreducible(p), verify_diagonal_count(p), verify_girth(p),
                                verify_diagonal_subset_allowable(p), verify_fi_product({p}),
                                verify_scrambling_markov({p}), verify_sarymsakov_scrambling({p})};
    rs.push_back(verify_identity_shift(p, 1));
    rs.push_back(verify_gk_girth(p, 1));
    rs.push_back(verify_gk_wielandt(p, 1));
    rs.push_back(verify_gk_fi_product({p}, 1));
    rs.push_back(verify_diagonal_subset_power(p, 1));
    for (const auto& r : rs) {
      CHECK_FALSE(is_violation(r));
      if (!r.hypotheses_met) {
        ++unmet;
        CHECK_FALSE(r.note.empty());
      } else {
        check_sound(r);
      }
    }
  }
  CHECK(unmet > 500);
}

TEST_CASE("random instances meet their hypotheses and the conclusions hold") {
  for (TheoremId id : all_theorems()) {
    if (id == TheoremId::diagonal_subset_product) continue;  // see the two cases above
    CAPTURE(theorem_name(id));
    SweepSummary s = sweep(id, 60, 3, 6, 77);
    CHECK(s.trials == 60);
    CHECK(s.hypotheses_met == 60);
    CHECK(s.violations == 0);
    CHECK_FALSE(s.first_unmet.has_value());
    if (s.min_slack) CHECK(*s.min_slack >= 0);
  }
}

TEST_CASE("theorem names round-trip") {
  CHECK(all_theorems().size() == 17);
  for (TheoremId id : all_theorems()) CHECK(theorem_from_name(theorem_name(id)) == id);
  CHECK_FALSE(theorem_from_name("no-such-theorem").has_value());
}

TEST_CASE("sweeps replay from the root seed") {
  SweepSummary a = sweep(TheoremId::gk_girth, 40, 3, 7, 9), b = sweep(TheoremId::gk_girth, 40, 3, 7, 9);
  CHECK(a.hypotheses_met == b.hypotheses_met);
  CHECK(a.min_slack == b.min_slack);
  Rng r1(derive_seed(9, 3)), r2(derive_seed(9, 3));
  Instance x = random_instance(TheoremId::fi_product, 5, r1), y = random_instance(TheoremId::fi_product, 5, r2);
  CHECK(x.factors == y.factors);
  CHECK(derive_seed(9, 3) != derive_seed(9, 4));
  CHECK(derive_seed(9, 3) != derive_seed(10, 3));
}
