#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posmat/error.hpp"
#include "posmat/graph.hpp"
#include "posmat/matrix.hpp"

namespace posmat {

// A stated property of a fixture: `property` names a check understood by
// evaluate_fact, `expected` is its printed value.
struct Fact {
  std::string property;
  std::string expected;
};

struct Fixture {
  std::string id;
  std::string description;
  std::optional<NonnegMatrix> matrix;
  std::optional<Graph> graph;
  std::vector<Fact> facts;
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& id);  // throws invalid_argument

// Evaluates one property of a fixture and prints it the way manifests do.
// Properties:
//   row_allowable column_allowable positive irreducible primitive markov
//   scrambling sarymsakov fully_indecomposable stochastic   -> true/false
//   gamma period girth gk_index kappa min_offdiag_column     -> integer
//   positive_columns                                        -> {..}
//   mu alpha                                                -> rational
//   is_gk:K                 -> true/false
//   gk_counterexample:K     -> {..} or none
//   deficiency:{F}          -> {..}
//   power_positive:E        -> P^E > 0
//   identity_power_positive:E -> (I+P)^E > 0
//   sum_positive:{U}x{V}    -> true/false
//   product_positive_columns:ID -> positive columns of this * fixture ID
std::string evaluate_fact(const Fixture& f, const std::string& property, const Caps& caps = {});

}  // namespace posmat
