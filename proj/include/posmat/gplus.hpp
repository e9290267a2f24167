#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posmat/error.hpp"
#include "posmat/matrix.hpp"
#include "posmat/partition.hpp"

namespace posmat {

// Result of a runtime theorem check. `violated` means the hypotheses held and
// the conclusion did not.
enum class Outcome { holds, violated, precondition_not_met };
const char* outcome_name(Outcome o);

struct TheoremCheck {
  Outcome outcome = Outcome::holds;
  std::string detail;
  bool holds() const { return outcome == Outcome::holds; }
};

// Every row of P restricted to U x V has a positive entry.
bool sum_positive_on(const PatternMatrix& p, const IndexSet& u, const IndexSet& v);
bool sum_positive_on(const NonnegMatrix& p, const IndexSet& u, const IndexSet& v);
// Same truth value; reads as "every i in U reaches some j in V".
bool arrow(const PatternMatrix& p, const IndexSet& u, const IndexSet& v);

struct ChainWitness {
  std::vector<IndexSet> sets;  // U_1 .. U_{t+1}
};

// arrow(P_l, U_l, U_{l+1}) for all l. When it holds with U_1 full and U_{t+1}
// = {j}, column j of the product is re-checked and a failure throws internal.
bool verify_chain(const std::vector<PatternMatrix>& ps, const ChainWitness& w);

TheoremCheck product_in_G(const PatternMatrix& p1, const IndexSet& u1, const IndexSet& u2,
                          const PatternMatrix& p2, const IndexSet& u3);

struct DeltaPositivityReport {
  bool holds = false;
  // (row block of Delta, column block of Sigma) for each column block, when holds.
  std::vector<std::pair<IndexSet, IndexSet>> assignment;
};

DeltaPositivityReport is_bracket_positive_on(const PatternMatrix& p, const Partition& delta,
                                             const Partition& sigma);

// Each P_l must be [Delta_l]-positive on Delta_{l+1}; checks the product is
// [Delta_1]-positive on Delta_{t+1}, and positive when Delta_1 is the one-block
// partition and Delta_{t+1} the singletons.
TheoremCheck bracket_product_check(const std::vector<PatternMatrix>& ps,
                                   const std::vector<Partition>& deltas);

struct MaximalPartitions {
  std::vector<Partition> partitions;  // coarsest partitions that work
  bool unique = false;
};

MaximalPartitions maximal_bracket_partitions(const PatternMatrix& p, const Partition& sigma,
                                             int cap = Caps{}.partitions);

}  // namespace posmat
