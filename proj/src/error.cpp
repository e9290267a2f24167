#include "posmat/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace posmat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::empty_index_set: return "empty-index-set";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::negative_entry: return "negative-entry";
    case ErrorCode::not_stochastic: return "not-stochastic";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::precondition_not_met: return "precondition-not-met";
    case ErrorCode::cap_exceeded: return "cap-exceeded";
    case ErrorCode::not_irreducible: return "not-irreducible";
    case ErrorCode::not_primitive: return "not-primitive";
    case ErrorCode::rejection_budget_exhausted: return "rejection-budget-exhausted";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

Caps Caps::uniform(int n) {
  Caps c;
  int m = std::min(n, mask_limit);
  c.gk = m;
  c.fully_indecomposable = m;
  c.sarymsakov = m;
  c.graph = m;
  c.partitions = std::min(n, partition_limit);
  return c;
}

Caps Caps::from_env() {
  const char* v = std::getenv("POSMAT_MAX_N");
  if (v == nullptr || *v == '\0') return Caps{};
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1)
    throw Error(ErrorCode::invalid_argument,
                std::string("POSMAT_MAX_N must be a positive integer, got '") + v + "'");
  return uniform(static_cast<int>(std::min<long>(n, 1 << 20)));
}

void require_within_cap(long n, int cap, const char* what) {
  if (n > cap)
    throw Error(ErrorCode::cap_exceeded,
                std::string(what) + ": size " + std::to_string(n) + " exceeds the enumeration cap " +
                    std::to_string(cap) + " (raise it with --max-n or POSMAT_MAX_N)");
}

}  // namespace posmat
