#pragma once

#include <optional>
#include <vector>

#include "posmat/error.hpp"
#include "posmat/matrix.hpp"

namespace posmat {

// Rows outside F with a positive entry in some column of F.
IndexSet deficiency_set(const PatternMatrix& p, const IndexSet& f);

struct GkReport {
  int k_tested = 0;
  bool is_gk = false;
  std::optional<IndexSet> counterexample;  // lexicographically smallest violating F
};

// |D_F| >= min(k, |F^c|) for every nonempty proper F. For n = 1 only k = 1 is
// accepted and the answer is "the entry is nonzero".
GkReport is_gk(const PatternMatrix& p, int k, const Caps& caps = {});
inline GkReport is_gk(const NonnegMatrix& p, int k, const Caps& caps = {}) {
  return is_gk(indicator(p), k, caps);
}

// Largest k with is_gk(P,k), 0 when P is not even g_1. A nonzero 1x1 matrix
// gives 1.
int gk_index(const PatternMatrix& p, const Caps& caps = {});

// Number of positive coordinates of (I+P)y. Throws precondition_not_met unless
// P is g_k and y has between 1 and n-1 positive coordinates; throws internal if
// the count falls below h + min(k, n-h).
int vector_growth(const NonnegMatrix& p, int k, const std::vector<Rational>& y, const Caps& caps = {});

}  // namespace posmat
