#include "report.hpp"

#include "posmat/io.hpp"

namespace posmat::report {

json envelope(const char* kind) { return json{{"schema", kSchema}, {"kind", kind}}; }

json rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

json index_set(const IndexSet& s) {
  json a = json::array();
  for (auto i : s.one_based()) a.push_back(i);
  return a;
}

json matrix(const NonnegMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json pattern(const PatternMatrix& p) {
  json rows = json::array();
  for (std::size_t i = 0; i < p.rows(); ++i) {
    std::string s;
    for (std::size_t j = 0; j < p.cols(); ++j) s += p.get(i, j) ? '*' : '0';
    rows.push_back(s);
  }
  return rows;
}

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json classification(const ClassificationReport& r, bool certificates) {
  json j = envelope("classification");
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["row_allowable"] = r.row_allowable;
  j["column_allowable"] = r.column_allowable;
  j["positive"] = r.positive;
  j["markov"] = r.markov;
  j["positive_columns"] = index_set(r.positive_columns);
  j["stochastic"] = r.stochastic;
  j["irreducible"] = r.irreducibility ? json(r.irreducibility->irreducible) : json(nullptr);
  j["primitive"] = opt(r.primitive);
  j["period"] = opt(r.period);
  j["girth"] = opt(r.girth);
  j["gamma"] = opt(r.gamma);
  j["gk_index"] = opt(r.gk_index);
  j["fully_indecomposable"] =
      r.full_indecomposability ? json(r.full_indecomposability->fully_indecomposable) : json(nullptr);
  j["positive_diagonal"] = r.positive_diagonal ? index_set(*r.positive_diagonal) : json(nullptr);
  j["scrambling"] = r.scrambling ? json(r.scrambling->scrambling) : json(nullptr);
  j["sarymsakov"] = r.sarymsakov ? json(r.sarymsakov->sarymsakov) : json(nullptr);
  j["mu"] = r.mu ? rational(*r.mu) : json(nullptr);
  j["alpha"] = r.alpha ? rational(*r.alpha) : json(nullptr);
  if (!certificates) return j;

  json c = json::object();
  if (r.irreducibility && !r.irreducibility->irreducible) {
    const auto& ir = *r.irreducibility;
    json perm = json::array();
    for (auto v : ir.permutation) perm.push_back(v + 1);
    c["reducibility"] = {{"permutation", perm}, {"split", ir.split}, {"closed_set", index_set(*ir.closed_set)}};
  }
  if (r.full_indecomposability && !r.full_indecomposability->fully_indecomposable) {
    const auto& fi = *r.full_indecomposability;
    c["partly_decomposable"] = {{"rows", index_set(*fi.rows)}, {"zero_columns", index_set(*fi.zero_cols)}};
  }
  if (r.scrambling) {
    const auto& s = *r.scrambling;
    if (s.scrambling) {
      json w = json::array();
      for (auto [a, b, col] : s.witness) w.push_back({a + 1, b + 1, col + 1});
      c["scrambling_witness"] = w;
    } else {
      c["scrambling_failing_pair"] = {s.failing_pair->first + 1, s.failing_pair->second + 1};
    }
  }
  if (r.sarymsakov && !r.sarymsakov->sarymsakov)
    c["sarymsakov_counterexample"] = {{"I", index_set(r.sarymsakov->counterexample->first)},
                                      {"J", index_set(r.sarymsakov->counterexample->second)}};
  j["certificates"] = c;
  return j;
}

json bound(const BoundResult& r) {
  json j;
  j["theorem"] = theorem_name(r.theorem);
  j["hypotheses_met"] = r.hypotheses_met;
  j["conclusion_holds"] = r.hypotheses_met ? json(r.conclusion_holds) : json(nullptr);
  j["bound"] = r.bound_value;
  j["attained"] = opt(r.attained);
  j["slack"] = opt(r.slack);
  j["note"] = r.note;
  return j;
}

json instance(const Instance& in) {
  json j;
  j["theorem"] = theorem_name(in.theorem);
  j["k"] = in.k;
  if (in.w) j["W"] = index_set(*in.w);
  if (in.theorem == TheoremId::diagonal_subset_product) j["variant"] = in.variant == Variant::head ? "head" : "tail";
  if (in.theorem == TheoremId::leading_block) j["m_block"] = in.m_block;
  if (in.theorem == TheoremId::wielandt) j["n"] = in.n;
  json fs = json::array();
  for (const auto& p : in.factors) fs.push_back(pattern(p));
  j["factors"] = fs;
  return j;
}

namespace {

json failure(const SweepFailure& f) {
  return json{{"trial", f.trial},
              {"seed", std::to_string(f.seed)},
              {"instance", instance(f.instance)},
              {"result", bound(f.result)}};
}

}  // namespace

json sweep(const SweepSummary& s) {
  json j = envelope("sweep");
  j["theorem"] = theorem_name(s.theorem);
  j["root_seed"] = std::to_string(s.root_seed);
  j["sizes"] = {s.n_lo, s.n_hi};
  j["trials"] = s.trials;
  j["hypotheses_met"] = s.hypotheses_met;
  j["violations"] = s.violations;
  j["min_slack"] = opt(s.min_slack);
  j["first_violation"] = s.first_violation ? failure(*s.first_violation) : json(nullptr);
  j["first_unmet"] = s.first_unmet ? failure(*s.first_unmet) : json(nullptr);
  return j;
}

json connectivity(const ConnectivityReport& r, int n) {
  json j = envelope("connectivity");
  j["order"] = n;
  j["kappa"] = r.kappa;
  j["min_cut"] = r.min_cut ? index_set(*r.min_cut) : json(nullptr);
  j["complete_after_loop_removal"] = r.complete_after_loop_removal;
  return j;
}

json audit(const AuditReport& r) {
  return json{{"k", r.k},
              {"by_cuts", r.by_cuts},
              {"by_gk", r.by_gk},
              {"by_neighbour_sets", r.by_neighbour_sets},
              {"by_deficiency", r.by_deficiency},
              {"agree", r.agree()}};
}

json limit(const PowerLimit& l, const Rational& tolerance) {
  json j = envelope("limit");
  j["converged"] = l.converged;
  j["iterations"] = l.iterations;
  j["tolerance"] = rational(tolerance);
  j["matrix"] = matrix(l.last);
  json approx = json::array();
  for (std::size_t i = 0; i < l.last.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < l.last.cols(); ++k) row.push_back(l.last.at(i, k).get_d());
    approx.push_back(std::move(row));
  }
  j["approx"] = approx;
  return j;
}

}  // namespace posmat::report
