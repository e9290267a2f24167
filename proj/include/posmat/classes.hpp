#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "posmat/error.hpp"
#include "posmat/matrix.hpp"

namespace posmat {

// ---- irreducibility

// Strongly connected components in reverse topological order of the
// condensation (the first component has no edge leaving it).
std::vector<std::vector<std::size_t>> strongly_connected_components(const PatternMatrix& p);

struct Irreducibility {
  bool irreducible = false;
  // For a reducible matrix: new position -> original index. The first `split`
  // positions form a set with no entry leading outside it, so the permuted
  // matrix has a zero upper-right split x (n-split) block.
  std::vector<std::size_t> permutation;
  std::size_t split = 0;
  std::optional<IndexSet> closed_set;
};

Irreducibility irreducibility(const PatternMatrix& p);
bool is_irreducible(const PatternMatrix& p);
bool verify_reducibility_certificate(const PatternMatrix& p, const Irreducibility& cert);
// (I+P)^{n-1} > 0, or P > 0 when n = 1.
bool irreducible_by_powers(const PatternMatrix& p);

// ---- period, primitivity, girth

int period(const PatternMatrix& p);                // BFS levels; throws not_irreducible
int period_by_definition(const PatternMatrix& p);  // gcd of k <= n^2 with (P^k)_{11} > 0
bool is_primitive(const PatternMatrix& p);
bool primitive_by_powers(const PatternMatrix& p);  // P^{n^2-2n+2} > 0
long wielandt_number(long n);                      // n^2-2n+2, and 1 for n = 1
int gamma(const PatternMatrix& p);                 // throws not_primitive
// Least e in 1..limit with pred(P^e); 0 if none.
long least_power_with(const PatternMatrix& p, long limit, bool (*pred)(const PatternMatrix&));
std::optional<int> girth(const PatternMatrix& p);

// ---- full indecomposability

struct FullIndecomposability {
  bool fully_indecomposable = false;
  std::optional<IndexSet> rows;       // R
  std::optional<IndexSet> zero_cols;  // columns where P restricted to R vanishes, |.| >= n-|R|
};

FullIndecomposability full_indecomposability(const PatternMatrix& p, const Caps& caps = {});
bool is_fully_indecomposable(const PatternMatrix& p, const Caps& caps = {});

// ---- Markov, scrambling, Sarymsakov

bool is_markov(const PatternMatrix& p);

struct Scrambling {
  bool scrambling = false;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> witness;  // (i, j, shared column)
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

Scrambling scrambling(const PatternMatrix& p);
bool is_scrambling(const PatternMatrix& p);

IndexSet consequent_indices(const PatternMatrix& p, const IndexSet& t);

struct Sarymsakov {
  bool sarymsakov = false;
  std::optional<std::pair<IndexSet, IndexSet>> counterexample;
};

Sarymsakov sarymsakov(const PatternMatrix& p, const Caps& caps = {});
bool is_sarymsakov(const PatternMatrix& p, const Caps& caps = {});

// ---- coefficients and limits

Rational mu(const StochasticMatrix& p);     // max over columns of the column minimum
Rational alpha(const StochasticMatrix& p);  // min over row pairs of the overlap sum

struct PowerLimit {
  bool converged = false;
  long iterations = 0;
  NonnegMatrix last;  // the limit estimate when converged, otherwise the last power
};

PowerLimit power_limit(const StochasticMatrix& p, const Rational& tolerance, long max_iter);

// ---- everything at once

struct ClassificationReport {
  std::size_t rows = 0, cols = 0;
  bool row_allowable = false, column_allowable = false, positive = false, markov = false;
  IndexSet positive_columns;

  // square matrices only
  std::optional<Irreducibility> irreducibility;
  std::optional<bool> primitive;
  std::optional<int> period, girth, gamma, gk_index;
  std::optional<FullIndecomposability> full_indecomposability;
  std::optional<IndexSet> positive_diagonal;

  // at least two rows
  std::optional<Scrambling> scrambling;
  std::optional<Sarymsakov> sarymsakov;

  bool stochastic = false;
  std::optional<Rational> mu, alpha;
};

ClassificationReport classify(const NonnegMatrix& p, const Caps& caps = {});

}  // namespace posmat
