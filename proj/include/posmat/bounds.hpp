#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posmat/error.hpp"
#include "posmat/matrix.hpp"

namespace posmat {

enum class TheoremId {
  identity_shift,             // (I+P)^m > 0 for g_k matrices
  diagonal_irreducible,       // irreducible, full positive diagonal: P^{n-1} > 0
  gk_diagonal_product,        // m g_k factors with full positive diagonals: product > 0
  diagonal_subset_allowable,  // (P^{n-d})^W row-allowable, (P^{n-d})_W column-allowable
  diagonal_count,             // P^{2n-d-1} > 0
  diagonal_subset_product,    // P_1 ... P_{m+1} > 0 with diagonals positive on W
  girth,                      // P^{n+s(n-2)} > 0
  gk_girth,                   // P^g > 0, g from n, k, s
  gk_wielandt,                // P primitive iff P^h > 0
  wielandt,                   // the Wielandt matrix attains n^2-2n+2
  fi_product,                 // n-1 fully indecomposable factors: product > 0
  gk_fi_product,              // fully indecomposable g_k factors, fewer needed
  leading_block,              // first m columns of P^{gamma(Q)(n-m+1)} positive
  scrambling_markov,          // square scrambling factors: (n-1)-fold product Markov
  scrambling_chain,           // rectangular scrambling chain: z-fold prefix Markov
  sarymsakov_scrambling,      // n-1 Sarymsakov factors: product scrambling
  sarymsakov_markov,          // (n-1)^2 Sarymsakov factors: product Markov
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
const std::vector<TheoremId>& all_theorems();

struct BoundResult {
  TheoremId theorem = TheoremId::identity_shift;
  bool hypotheses_met = false;
  bool conclusion_holds = false;  // meaningful only when hypotheses_met
  long bound_value = 0;
  std::optional<long> attained;
  std::optional<long> slack;
  std::string note;
};

// ---- closed forms

long floor_div(long a, long b);
long bound_identity_shift(long n, long k);           // floor((n-2)/k)+1
long bound_diagonal_irreducible(long n);             // n-1
long bound_diagonal_count(long n, long d);           // 2n-d-1
long bound_diagonal_subset_product(long n, long k, long d);  // n+m-d
long bound_girth(long n, long s);                    // n+s(n-2)
long bound_gk_girth(long n, long k, long s);         // floor((n-s-2)/k)+2+s(n-max(2,k)+1)
long bound_gk_wielandt(long n, long k);              // h
long bound_gk_fi_product(long n, long k);            // n-1 for k=1, n-k+1 otherwise
long bound_scrambling_chain(const std::vector<long>& dims);  // z from n_1..n_{t+1}
long bound_sarymsakov_markov(long n);                // (n-1)^2

// ---- verifiers
// Sequence verifiers accept a single square matrix for the power form.

BoundResult verify_identity_shift(const PatternMatrix& p, int k, const Caps& caps = {});
BoundResult verify_diagonal_irreducible(const PatternMatrix& p);
BoundResult verify_gk_diagonal_product(const std::vector<PatternMatrix>& ps, int k, const Caps& caps = {});
BoundResult verify_diagonal_subset_allowable(const PatternMatrix& p);
BoundResult verify_diagonal_count(const PatternMatrix& p);

enum class Variant { head, tail };
// Factors P_1..P_{m+1}. head: (P_1)^W row-allowable, later factors g_k with
// diagonals positive on W. tail: the mirror image.
BoundResult verify_diagonal_subset_product(const std::vector<PatternMatrix>& ps, const IndexSet& w, int k,
                                           Variant variant, const Caps& caps = {});
// P^{n+m-d} > 0 for a g_k matrix with d >= 1 positive diagonal entries.
BoundResult verify_diagonal_subset_power(const PatternMatrix& p, int k, const Caps& caps = {});

BoundResult verify_girth(const PatternMatrix& p);
BoundResult verify_gk_girth(const PatternMatrix& p, int k, const Caps& caps = {});
BoundResult verify_gk_wielandt(const PatternMatrix& p, int k, const Caps& caps = {});
BoundResult verify_wielandt_extremal(int n);

BoundResult verify_fi_product(const std::vector<PatternMatrix>& ps, const Caps& caps = {});
BoundResult verify_gk_fi_product(const std::vector<PatternMatrix>& ps, int k, const Caps& caps = {});
BoundResult verify_leading_block(const PatternMatrix& p, int m_block);

BoundResult verify_scrambling_markov(const std::vector<PatternMatrix>& ps);
BoundResult verify_scrambling_chain(const std::vector<PatternMatrix>& ps);
BoundResult verify_sarymsakov_scrambling(const std::vector<PatternMatrix>& ps, const Caps& caps = {});
BoundResult verify_sarymsakov_markov(const std::vector<PatternMatrix>& ps, const Caps& caps = {});

}  // namespace posmat
