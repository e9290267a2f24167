#include "posmat/generators.hpp"

#include "posmat/classes.hpp"
#include "posmat/gk.hpp"

namespace posmat {

PatternMatrix generate_wielandt(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "Wielandt matrix needs n >= 2");
  PatternMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) p.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
  p.set(static_cast<std::size_t>(n - 1), 0);
  p.set(static_cast<std::size_t>(n - 1), 1);
  return p;
}

PatternMatrix generate_periodic_block(const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw Error(ErrorCode::invalid_argument, "periodic block matrix needs at least two blocks");
  std::vector<std::size_t> start;
  std::size_t n = 0;
  for (int s : sizes) {
    if (s < 1) throw Error(ErrorCode::invalid_argument, "block sizes must be >= 1");
    start.push_back(n);
    n += static_cast<std::size_t>(s);
  }
  PatternMatrix p(n, n);
  const std::size_t t = sizes.size();
  for (std::size_t l = 0; l < t; ++l) {
    std::size_t nxt = (l + 1) % t;
    for (std::size_t i = 0; i < static_cast<std::size_t>(sizes[l]); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(sizes[nxt]); ++j) p.set(start[l] + i, start[nxt] + j);
  }
  return p;
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t trial) {
  // splitmix64 finaliser over the pair
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = eng_();
  while (x >= limit);
  return x % bound;
}

bool Rng::chance(const Rational& p) {
  if (p >= 1) return true;
  if (sgn(p) <= 0) return false;
  // p = a/b with b fitting in 64 bits for any density a user would type
  if (!p.get_den().fits_ulong_p())
    throw Error(ErrorCode::invalid_argument, "density denominator too large");
  std::uint64_t b = p.get_den().get_ui();
  std::uint64_t a = p.get_num().get_ui();
  return below(b) < a;
}

const char* random_kind_name(RandomKind k) {
  switch (k) {
    case RandomKind::nonneg: return "nonneg";
    case RandomKind::stochastic: return "stochastic";
    case RandomKind::pattern: return "pattern";
  }
  return "?";
}

const char* random_filter_name(RandomFilter f) {
  switch (f) {
    case RandomFilter::none: return "none";
    case RandomFilter::irreducible: return "irreducible";
    case RandomFilter::primitive: return "primitive";
    case RandomFilter::scrambling: return "scrambling";
    case RandomFilter::sarymsakov: return "sarymsakov";
    case RandomFilter::fully_indecomposable: return "fully-indecomposable";
    case RandomFilter::gk: return "gk";
  }
  return "?";
}

RandomKind random_kind_from_name(const std::string& s) {
  for (auto k : {RandomKind::nonneg, RandomKind::stochastic, RandomKind::pattern})
    if (s == random_kind_name(k)) return k;
  throw Error(ErrorCode::invalid_argument, "unknown random kind '" + s + "' (nonneg, stochastic, pattern)");
}

RandomFilter random_filter_from_name(const std::string& s) {
  for (auto f : {RandomFilter::none, RandomFilter::irreducible, RandomFilter::primitive, RandomFilter::scrambling,
                 RandomFilter::sarymsakov, RandomFilter::fully_indecomposable, RandomFilter::gk})
    if (s == random_filter_name(f)) return f;
  throw Error(ErrorCode::invalid_argument,
              "unknown filter '" + s +
                  "' (none, irreducible, primitive, scrambling, sarymsakov, fully-indecomposable, gk)");
}

PatternMatrix random_pattern(int rows, int cols, const Rational& density, Rng& rng) {
  PatternMatrix p(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng.chance(density)) p.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return p;
}

namespace {

bool passes(const PatternMatrix& p, const RandomSpec& s, const Caps& caps) {
  switch (s.filter) {
    case RandomFilter::none: return true;
    case RandomFilter::irreducible: return p.square() && is_irreducible(p);
    case RandomFilter::primitive: return p.square() && is_primitive(p);
    case RandomFilter::scrambling: return p.rows() >= 2 && is_scrambling(p);
    case RandomFilter::sarymsakov: return p.rows() >= 2 && is_sarymsakov(p, caps);
    case RandomFilter::fully_indecomposable: return p.square() && is_fully_indecomposable(p, caps);
    case RandomFilter::gk: return p.square() && is_gk(p, s.k, caps).is_gk;
  }
  return false;
}

NonnegMatrix materialise(const PatternMatrix& p, RandomKind kind, Rng& rng) {
  NonnegMatrix m(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    Rational total = 0;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (!p.get(i, j)) continue;
      Rational v = kind == RandomKind::pattern ? Rational(1) : Rational(rng.between(1, 9));
      m.set(i, j, v);
      total += v;
    }
    if (kind == RandomKind::stochastic)
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (p.get(i, j)) m.set(i, j, Rational(m.at(i, j) / total));
  }
  return m;
}

}  // namespace

NonnegMatrix random_matrix(const RandomSpec& s, Rng& rng, const Caps& caps) {
  if (s.rows < 1 || s.cols < 1) throw Error(ErrorCode::invalid_argument, "random matrix needs positive dimensions");
  if (sgn(s.density) <= 0 || s.density > 1) throw Error(ErrorCode::invalid_argument, "density must lie in (0,1]");
  if (s.filter == RandomFilter::gk && s.rows == s.cols && s.rows >= 2 && (s.k < 1 || s.k > s.rows - 1))
    throw Error(ErrorCode::out_of_range, "k outside 1..n-1");
  for (int attempt = 0; attempt < s.budget; ++attempt) {
    PatternMatrix p = random_pattern(s.rows, s.cols, s.density, rng);
    if (s.kind == RandomKind::stochastic)
      for (std::size_t i = 0; i < p.rows(); ++i)
        if (p.row_count(i) == 0) p.set(i, rng.below(p.cols()));
    if (passes(p, s, caps)) return materialise(p, s.kind, rng);
  }
  throw Error(ErrorCode::rejection_budget_exhausted,
              std::string("no ") + random_filter_name(s.filter) + " matrix found in " + std::to_string(s.budget) +
                  " draws");
}

NonnegMatrix random_matrix(const RandomSpec& spec, std::uint64_t seed, const Caps& caps) {
  Rng rng(seed);
  return random_matrix(spec, rng, caps);
}

}  // namespace posmat
