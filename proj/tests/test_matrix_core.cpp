#include <doctest.h>

#include "posmat/classes.hpp"
#include "posmat/generators.hpp"
#include "posmat/matrix.hpp"
#include "posmat/partition.hpp"
#include "support.hpp"

using namespace posmat;
using support::num;
using support::pat;

namespace {

const NonnegMatrix kLeft = num({{1, 0, 0, 0}, {0, 2, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 3}});
const NonnegMatrix kRight = num({{0, 0, 1, 0}, {1, 0, 1, 0}, {0, 0, 2, 0}, {4, 0, 0, 0}});

IndexSet one(std::size_t u, std::initializer_list<std::size_t> m) { return IndexSet::from_one_based(u, m); }

}  // namespace

TEST_CASE("index sets") {
  IndexSet s = one(5, {1, 3, 4});
  CHECK(s.size() == 3);
  CHECK(s.str() == "{1,3,4}");
  CHECK(s.complement().str() == "{2,5}");
  CHECK((s | s.complement()).is_full());
  CHECK_FALSE(s.intersects(s.complement()));
  CHECK((s - one(5, {3})).str() == "{1,4}");
  CHECK(one(5, {1, 3}).is_subset_of(s));
  CHECK(one(5, {1, 2}).lex_less(one(5, {1, 3})));
  CHECK(one(5, {1, 3}).lex_less(one(5, {1, 3, 4})));
  CHECK(s.first() == 0);
  CHECK_THROWS_AS(one(3, {4}), Error);
  CHECK_THROWS_AS(one(3, {0}), Error);
  CHECK_THROWS_AS(s | IndexSet(4), Error);

  // wider than one word
  IndexSet big(130);
  big.insert(0);
  big.insert(129);
  CHECK(big.size() == 2);
  CHECK(big.complement().size() == 128);
  CHECK(big.one_based() == std::vector<std::size_t>{1, 130});
}

TEST_CASE("complement covers the universe for every subset of a small universe") {
  for (std::uint64_t m = 0; m < 64; ++m) {
    IndexSet s = IndexSet::from_mask(6, m);
    CHECK((s | s.complement()).is_full());
    CHECK((s & s.complement()).empty());
    CHECK(s.mask() == m);
  }
}

TEST_CASE("partitions") {
  Partition p = Partition::from_rgs({0, 0, 1});
  CHECK(p.str() == "{1,2}{3}");
  Partition q = Partition::from_rgs({0, 1, 1});
  CHECK_FALSE(is_finer(p, q));
  CHECK_FALSE(is_finer(q, p));
  CHECK(is_finer(Partition::singletons(3), p));
  CHECK(is_finer(p, Partition::full(3)));
  CHECK_THROWS_AS(Partition(3, {one(3, {1, 2}), one(3, {2, 3})}), Error);
  CHECK_THROWS_AS(Partition(3, {one(3, {1, 2})}), Error);
  CHECK_THROWS_AS(Partition(3, {one(3, {1, 2, 3}), IndexSet(3)}), Error);

  // Bell numbers
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t m = 1; m <= 6; ++m) CHECK(all_partitions(m).size() == bell[m]);
}

TEST_CASE("construction rejects negatives and checks stochastic rows") {
  CHECK_THROWS_AS(NonnegMatrix::from_rows({{1, -1}}), Error);
  NonnegMatrix m(2, 2);
  CHECK_THROWS_AS(m.set(0, 0, Rational(-1, 2)), Error);
  CHECK_THROWS_AS(PatternMatrix(0, 3), Error);
  CHECK_NOTHROW(StochasticMatrix(NonnegMatrix::from_rows({{0, 1}, {Rational(1, 2), Rational(1, 2)}})));
  try {
    StochasticMatrix(NonnegMatrix::from_rows({{0, 1}, {Rational(1, 2), Rational(1, 3)}}));
    FAIL("accepted a row summing to 5/6");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_stochastic);
  }
}

TEST_CASE("indicator") {
  CHECK(indicator(NonnegMatrix(2, 2)) == PatternMatrix(2, 2));
  CHECK(indicator(kLeft) == pat({"*000", "0*00", "*000", "0*0*"}));
  PatternMatrix p = indicator(kLeft);
  CHECK(indicator(NonnegMatrix::from_pattern(p)) == p);
}

TEST_CASE("has_pattern") {
  CHECK(has_pattern(kLeft, PatternMatrix(4, 4)));
  CHECK_FALSE(has_pattern(NonnegMatrix::identity(2), PatternMatrix::ones(2, 2)));
  CHECK_THROWS_AS(has_pattern(kLeft, PatternMatrix(3, 4)), Error);
  // a ring of blocks plus the identity keeps the ring's pattern
  PatternMatrix ring = generate_periodic_block({2, 3});
  NonnegMatrix q = NonnegMatrix::from_pattern(ring) + NonnegMatrix::identity(5);
  CHECK(has_pattern(q, ring));
}

TEST_CASE("submatrix") {
  IndexSet all4 = IndexSet::full(4);
  CHECK(submatrix(kLeft, all4, all4) == kLeft);
  NonnegMatrix left_block = submatrix(kLeft, all4, one(4, {1, 2, 3}));
  CHECK(left_block.rows() == 4);
  CHECK(left_block.cols() == 3);
  CHECK(is_row_allowable(left_block));
  NonnegMatrix e = submatrix(kLeft, one(4, {4}), one(4, {4}));
  CHECK(e.at(0, 0) == 3);
  CHECK_THROWS_AS(submatrix(kLeft, IndexSet(4), all4), Error);
  CHECK_THROWS_AS(submatrix(kLeft, IndexSet(5), all4), Error);
}

TEST_CASE("submatrix of a submatrix re-indexes") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    PatternMatrix p = random_pattern(6, 5, Rational(1, 2), rng);
    IndexSet u = IndexSet::from_mask(6, 1 + rng.below(63));
    IndexSet v = IndexSet::from_mask(5, 1 + rng.below(31));
    PatternMatrix s = submatrix(p, u, v);
    IndexSet u2 = IndexSet::from_mask(u.size(), 1 + rng.below((1u << u.size()) - 1));
    IndexSet v2 = IndexSet::from_mask(v.size(), 1 + rng.below((1u << v.size()) - 1));
    // compose the index maps
    IndexSet uu(6), vv(5);
    auto um = u.members(), vm = v.members();
    for (auto i : u2.members()) uu.insert(um[i]);
    for (auto j : v2.members()) vv.insert(vm[j]);
    CHECK(submatrix(s, u2, v2) == submatrix(p, uu, vv));
  }
}

TEST_CASE("boolean products") {
  PatternMatrix a = indicator(kLeft);
  CHECK(bool_product(a, PatternMatrix::identity(4)) == a);
  PatternMatrix prod = bool_product(a, indicator(kRight));
  CHECK(positive_columns(prod) == one(4, {3}));
  CHECK_THROWS_AS(bool_product(a, PatternMatrix(3, 3)), Error);
}

TEST_CASE("boolean powers") {
  PatternMatrix a = indicator(kLeft);
  CHECK(bool_power(a, 1) == a);
  CHECK_THROWS_AS(bool_power(a, 0), Error);
  CHECK_THROWS_AS(bool_power(PatternMatrix(2, 3), 2), Error);
  PatternMatrix w = generate_wielandt(4);
  CHECK(is_positive(bool_power(w, 10)));
  CHECK_FALSE(is_positive(bool_power(w, 9)));
  // power by squaring agrees with repeated products
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    PatternMatrix p = support::random_square(rng, 1 + rng.below(8));
    long e = 1 + static_cast<long>(rng.below(12));
    CHECK(support::grid(bool_power(p, e)) == oracle::power(support::grid(p), e));
  }
}

TEST_CASE("allowability predicates") {
  PatternMatrix ones = PatternMatrix::ones(3, 3);
  CHECK(is_row_allowable(ones));
  CHECK(is_column_allowable(ones));
  CHECK(is_positive(ones));
  CHECK(positive_columns(ones).is_full());
  PatternMatrix col = pat({"*000", "*000", "*000", "*000"});
  CHECK(is_row_allowable(col));
  CHECK_FALSE(is_column_allowable(col));
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    PatternMatrix p = random_pattern(1 + rng.between(0, 6), 1 + rng.between(0, 6), Rational(1, 3), rng);
    CHECK(is_column_allowable(p) == is_row_allowable(p.transpose()));
  }
}

TEST_CASE("boolean products match exact rational products") {
  Rng rng(2024);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = 1 + rng.below(8), k = 1 + rng.below(8), c = 1 + rng.below(8);
    NonnegMatrix a = support::random_numeric(rng, r, k), b = support::random_numeric(rng, k, c);
    CHECK(bool_product(indicator(a), indicator(b)) == indicator(a * b));
    CHECK(support::grid(indicator(a * b)) == oracle::support(oracle::qmul(support::qgrid(a), support::qgrid(b))));
  }
}

TEST_CASE("stochastic products stay stochastic") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng.below(6);
    StochasticMatrix a(support::random_stochastic(rng, n)), b(support::random_stochastic(rng, n));
    CHECK_NOTHROW(a * b);
    CHECK(is_stochastic((a * b).matrix()));
  }
}

TEST_CASE("chain products") {
  std::vector<PatternMatrix> ps{indicator(kLeft), indicator(kRight)};
  CHECK(chain_product(ps) == bool_product(ps[0], ps[1]));
  CHECK(with_identity(PatternMatrix(2, 2)) == PatternMatrix::identity(2));
  CHECK(positive_diagonal(pat({"*0", "00"})) == one(2, {1}));
}
