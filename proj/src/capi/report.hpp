#pragma once

#include <json.hpp>

#include "posmat/bounds.hpp"
#include "posmat/classes.hpp"
#include "posmat/graph.hpp"
#include "posmat/sweep.hpp"

namespace posmat::report {

using nlohmann::json;

inline constexpr const char* kSchema = "posmat/1";

json envelope(const char* kind);
json rational(const Rational& q);
json index_set(const IndexSet& s);
json matrix(const NonnegMatrix& m);
json pattern(const PatternMatrix& p);

json classification(const ClassificationReport& r, bool certificates);
json bound(const BoundResult& r);
json instance(const Instance& in);
json sweep(const SweepSummary& s);
json connectivity(const ConnectivityReport& r, int n);
json audit(const AuditReport& r);
json limit(const PowerLimit& l, const Rational& tolerance);

}  // namespace posmat::report
