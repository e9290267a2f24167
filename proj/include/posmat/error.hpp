#pragma once

#include <stdexcept>
#include <string>

namespace posmat {

enum class ErrorCode {
  invalid_argument = 1,
  dimension_mismatch,
  empty_index_set,
  out_of_range,
  negative_entry,
  not_stochastic,
  parse_error,
  precondition_not_met,
  cap_exceeded,
  not_irreducible,
  not_primitive,
  rejection_budget_exhausted,
  io_error,
  internal
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Size limits for the exponential scans. One override value (from --max-n or
// POSMAT_MAX_N) raises every cap at once.
struct Caps {
  int gk = 24;
  int fully_indecomposable = 24;
  int sarymsakov = 14;
  int partitions = 6;
  int graph = 16;

  static constexpr int mask_limit = 62;
  static constexpr int partition_limit = 10;

  static Caps uniform(int n);
  // Defaults, or uniform(POSMAT_MAX_N) when the variable is set.
  static Caps from_env();
};

// Throws cap_exceeded naming the cap and how to raise it.
void require_within_cap(long n, int cap, const char* what);

}  // namespace posmat
