#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posmat/bounds.hpp"
#include "posmat/generators.hpp"

namespace posmat {

// One verifier input. Which fields matter depends on the theorem.
struct Instance {
  TheoremId theorem = TheoremId::identity_shift;
  std::vector<PatternMatrix> factors;
  int k = 1;
  std::optional<IndexSet> w;
  Variant variant = Variant::head;
  int m_block = 1;
  int n = 0;  // wielandt only
};

BoundResult run_instance(const Instance& inst, const Caps& caps = {});

// Draws an instance meeting the theorem's hypotheses, order n. Throws
// rejection_budget_exhausted if the draws keep failing.
Instance random_instance(TheoremId id, int n, Rng& rng, const Caps& caps = {});

struct SweepFailure {
  long trial = 0;
  std::uint64_t seed = 0;
  Instance instance;
  BoundResult result;
};

struct SweepSummary {
  TheoremId theorem = TheoremId::identity_shift;
  std::uint64_t root_seed = 0;
  int n_lo = 0, n_hi = 0;
  long trials = 0;
  long hypotheses_met = 0;
  long violations = 0;  // conclusion false, or attained above the bound
  std::optional<long> min_slack;
  std::optional<SweepFailure> first_violation;
  std::optional<SweepFailure> first_unmet;  // generator produced an input the verifier rejected
};

// Trial i draws its order and instance from derive_seed(root_seed, i).
SweepSummary sweep(TheoremId id, long trials, int n_lo, int n_hi, std::uint64_t root_seed, const Caps& caps = {});

bool is_violation(const BoundResult& r);

}  // namespace posmat
