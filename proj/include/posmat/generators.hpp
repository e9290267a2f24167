#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posmat/error.hpp"
#include "posmat/matrix.hpp"

namespace posmat {

// Superdiagonal ones plus ones at (n,1) and (n,2).
PatternMatrix generate_wielandt(int n);
// Cyclic ring of all-ones blocks: block l is n_l x n_{l+1}, the last wraps to
// the first.
PatternMatrix generate_periodic_block(const std::vector<int>& sizes);

// Per-trial seeds derived from a root seed, so trial i replays on its own.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t trial);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Uniform on [0, bound), bound >= 1; rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound);
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool chance(const Rational& p);  // true with probability p, p in [0,1]

 private:
  std::mt19937_64 eng_;
};

enum class RandomKind { nonneg, stochastic, pattern };
enum class RandomFilter { none, irreducible, primitive, scrambling, sarymsakov, fully_indecomposable, gk };

const char* random_kind_name(RandomKind k);
const char* random_filter_name(RandomFilter f);
RandomKind random_kind_from_name(const std::string& s);
RandomFilter random_filter_from_name(const std::string& s);

struct RandomSpec {
  RandomKind kind = RandomKind::pattern;
  int rows = 3;
  int cols = 3;
  Rational density = Rational(1, 2);
  RandomFilter filter = RandomFilter::none;
  int k = 1;  // for RandomFilter::gk
  int budget = 10000;
};

// Positive entries appear independently with the given density. Nonneg
// entries are integers 1..9; stochastic rows are normalised (a row with no
// positive entry gets one at a random column). Filtered kinds redraw until
// the predicate holds.
NonnegMatrix random_matrix(const RandomSpec& spec, Rng& rng, const Caps& caps = {});
NonnegMatrix random_matrix(const RandomSpec& spec, std::uint64_t seed, const Caps& caps = {});
PatternMatrix random_pattern(int rows, int cols, const Rational& density, Rng& rng);

}  // namespace posmat
