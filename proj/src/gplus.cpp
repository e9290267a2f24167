#include "posmat/gplus.hpp"

#include <algorithm>

namespace posmat {

namespace {

void require_sets(const PatternMatrix& p, const IndexSet& u, const IndexSet& v) {
  if (u.universe() != p.rows() || v.universe() != p.cols())
    throw Error(ErrorCode::out_of_range, "index sets do not match the matrix dimensions");
  if (u.empty() || v.empty()) throw Error(ErrorCode::empty_index_set, "empty index set");
}

bool row_hits(const PatternMatrix& p, std::size_t i, const IndexSet& v) {
  const auto& vw = v.words();
  const std::uint64_t* r = p.row_words(i);
  for (std::size_t w = 0; w < vw.size(); ++w)
    if (r[w] & vw[w]) return true;
  return false;
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::violated: return "violated";
    case Outcome::precondition_not_met: return "precondition-not-met";
  }
  return "unknown";
}

bool sum_positive_on(const PatternMatrix& p, const IndexSet& u, const IndexSet& v) {
  require_sets(p, u, v);
  for (auto i : u.members())
    if (!row_hits(p, i, v)) return false;
  return true;
}

bool sum_positive_on(const NonnegMatrix& p, const IndexSet& u, const IndexSet& v) {
  return sum_positive_on(indicator(p), u, v);
}

bool arrow(const PatternMatrix& p, const IndexSet& u, const IndexSet& v) {
  require_sets(p, u, v);
  for (auto i : u.members()) {
    bool reached = false;
    for (auto j : v.members())
      if (p.get(i, j)) {
        reached = true;
        break;
      }
    if (!reached) return false;
  }
  return true;
}

bool verify_chain(const std::vector<PatternMatrix>& ps, const ChainWitness& w) {
  if (ps.empty()) throw Error(ErrorCode::invalid_argument, "empty matrix chain");
  if (w.sets.size() != ps.size() + 1)
    throw Error(ErrorCode::invalid_argument, "witness needs " + std::to_string(ps.size() + 1) +
                                                 " sets, got " + std::to_string(w.sets.size()));
  for (std::size_t l = 0; l + 1 < ps.size(); ++l)
    if (ps[l].cols() != ps[l + 1].rows())
      throw Error(ErrorCode::dimension_mismatch, "factor " + std::to_string(l + 1) + " and " +
                                                     std::to_string(l + 2) + " do not chain");
  for (std::size_t l = 0; l < ps.size(); ++l) {
    if (w.sets[l].universe() != ps[l].rows() || w.sets[l + 1].universe() != ps[l].cols())
      throw Error(ErrorCode::dimension_mismatch,
                  "witness set " + std::to_string(l + 1) + " does not match factor " + std::to_string(l + 1));
    if (w.sets[l].empty() || w.sets[l + 1].empty())
      throw Error(ErrorCode::empty_index_set, "witness sets must be nonempty");
  }
  for (std::size_t l = 0; l < ps.size(); ++l)
    if (!arrow(ps[l], w.sets[l], w.sets[l + 1])) return false;

  const IndexSet& last = w.sets.back();
  if (w.sets.front().is_full() && last.size() == 1) {
    std::size_t j = last.first();
    PatternMatrix prod = chain_product(ps);
    for (std::size_t i = 0; i < prod.rows(); ++i)
      if (!prod.get(i, j))
        throw Error(ErrorCode::internal, "chain verified but column " + std::to_string(j + 1) +
                                             " of the product is not positive");
  }
  return true;
}

TheoremCheck product_in_G(const PatternMatrix& p1, const IndexSet& u1, const IndexSet& u2,
                          const PatternMatrix& p2, const IndexSet& u3) {
  if (p1.cols() != p2.rows()) throw Error(ErrorCode::dimension_mismatch, "factors do not chain");
  if (!sum_positive_on(p1, u1, u2))
    return {Outcome::precondition_not_met, "first factor is not sum-positive on " + u1.str() + "x" + u2.str()};
  if (!sum_positive_on(p2, u2, u3))
    return {Outcome::precondition_not_met, "second factor is not sum-positive on " + u2.str() + "x" + u3.str()};
  if (sum_positive_on(bool_product(p1, p2), u1, u3)) return {Outcome::holds, ""};
  return {Outcome::violated, "product is not sum-positive on " + u1.str() + "x" + u3.str()};
}

DeltaPositivityReport is_bracket_positive_on(const PatternMatrix& p, const Partition& delta,
                                             const Partition& sigma) {
  if (delta.universe() != p.rows() || sigma.universe() != p.cols())
    throw Error(ErrorCode::dimension_mismatch, "partitions do not match the matrix dimensions");
  DeltaPositivityReport rep;
  for (const auto& v : sigma.blocks()) {
    auto it = std::find_if(delta.blocks().begin(), delta.blocks().end(),
                           [&](const IndexSet& u) { return sum_positive_on(p, u, v); });
    if (it == delta.blocks().end()) {
      rep.assignment.clear();
      return rep;
    }
    rep.assignment.emplace_back(*it, v);
  }
  rep.holds = true;
  return rep;
}

TheoremCheck bracket_product_check(const std::vector<PatternMatrix>& ps,
                                   const std::vector<Partition>& deltas) {
  if (ps.empty()) throw Error(ErrorCode::invalid_argument, "empty matrix chain");
  if (deltas.size() != ps.size() + 1)
    throw Error(ErrorCode::invalid_argument, "need one more partition than factors");
  for (std::size_t l = 0; l < ps.size(); ++l) {
    if (l + 1 < ps.size() && ps[l].cols() != ps[l + 1].rows())
      throw Error(ErrorCode::dimension_mismatch, "factors do not chain");
    if (!is_bracket_positive_on(ps[l], deltas[l], deltas[l + 1]).holds)
      return {Outcome::precondition_not_met,
              "factor " + std::to_string(l + 1) + " is not bracket-positive on the given partitions"};
  }
  PatternMatrix prod = chain_product(ps);
  if (!is_bracket_positive_on(prod, deltas.front(), deltas.back()).holds)
    return {Outcome::violated, "product is not bracket-positive on the end partitions"};
  if (deltas.front().size() == 1 && deltas.back().size() == deltas.back().universe() && !is_positive(prod))
    return {Outcome::violated, "product is not positive"};
  return {Outcome::holds, ""};
}

MaximalPartitions maximal_bracket_partitions(const PatternMatrix& p, const Partition& sigma, int cap) {
  require_within_cap(static_cast<long>(p.rows()), std::min(cap, Caps::partition_limit),
                     "partition enumeration");
  std::vector<Partition> ok;
  for (auto& d : all_partitions(p.rows()))
    if (is_bracket_positive_on(p, d, sigma).holds) ok.push_back(std::move(d));
  MaximalPartitions out;
  for (const auto& d : ok) {
    bool dominated = std::any_of(ok.begin(), ok.end(), [&](const Partition& e) {
      return e != d && is_finer(d, e);
    });
    if (!dominated) out.partitions.push_back(d);
  }
  out.unique = out.partitions.size() == 1;
  return out;
}

}  // namespace posmat
