#include "posmat.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "posmat/fixtures.hpp"
#include "posmat/gk.hpp"
#include "posmat/io.hpp"
#include "report.hpp"

struct posmat_matrix {
  posmat::NonnegMatrix m;
};

struct posmat_graph {
  posmat::Graph g;
};

namespace {

using namespace posmat;
using report::json;

thread_local std::string last_error;
std::atomic<int> max_n_override{0};

Caps caps() {
  int n = max_n_override.load();
  return n > 0 ? Caps::uniform(n) : Caps::from_env();
}

template <typename F>
int guard(F&& f) {
  try {
    last_error.clear();
    f();
    return POSMAT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return POSMAT_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return POSMAT_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const json& j) {
  if (out) *out = dup(j.dump(2));
}

NonnegMatrix read_matrix(const std::string& text, bool as_pattern) {
  return as_pattern ? NonnegMatrix::from_pattern(parse_pattern_grid(text)) : parse_matrix(text);
}

posmat_matrix* wrap(NonnegMatrix m) { return new posmat_matrix{std::move(m)}; }

Variant variant_from(const char* s) {
  if (!s || std::strcmp(s, "head") == 0) return Variant::head;
  if (std::strcmp(s, "tail") == 0) return Variant::tail;
  throw Error(ErrorCode::invalid_argument, std::string("variant must be head or tail, got '") + s + "'");
}

TheoremId theorem_from(const char* name) {
  need(name, "theorem");
  auto id = theorem_from_name(name);
  if (!id) {
    std::string known;
    for (auto t : all_theorems()) known += (known.empty() ? "" : ", ") + std::string(theorem_name(t));
    throw Error(ErrorCode::invalid_argument, std::string("unknown theorem '") + name + "' (known: " + known + ")");
  }
  return *id;
}

// Single-matrix rows of the bounds table.
json bounds_table(const PatternMatrix& p, int k, const Caps& c) {
  json rows = json::array();
  auto add = [&](TheoremId id, auto&& fn) {
    try {
      rows.push_back(report::bound(fn()));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::cap_exceeded) throw;
      json j;
      j["theorem"] = theorem_name(id);
      j["hypotheses_met"] = false;
      j["conclusion_holds"] = nullptr;
      j["bound"] = nullptr;
      j["attained"] = nullptr;
      j["slack"] = nullptr;
      j["note"] = std::string(error_code_name(e.code())) + ": " + e.what();
      rows.push_back(j);
    }
  };
  const std::vector<PatternMatrix> one{p};
  add(TheoremId::identity_shift, [&] { return verify_identity_shift(p, k, c); });
  add(TheoremId::diagonal_irreducible, [&] { return verify_diagonal_irreducible(p); });
  add(TheoremId::gk_diagonal_product, [&] { return verify_gk_diagonal_product(one, k, c); });
  add(TheoremId::diagonal_subset_allowable, [&] { return verify_diagonal_subset_allowable(p); });
  add(TheoremId::diagonal_count, [&] { return verify_diagonal_count(p); });
  add(TheoremId::diagonal_subset_product, [&] { return verify_diagonal_subset_power(p, k, c); });
  add(TheoremId::girth, [&] { return verify_girth(p); });
  add(TheoremId::gk_girth, [&] { return verify_gk_girth(p, k, c); });
  add(TheoremId::gk_wielandt, [&] { return verify_gk_wielandt(p, k, c); });
  add(TheoremId::fi_product, [&] { return verify_fi_product(one, c); });
  add(TheoremId::gk_fi_product, [&] { return verify_gk_fi_product(one, k, c); });
  add(TheoremId::leading_block, [&] { return verify_leading_block(p, static_cast<int>(p.rows())); });
  add(TheoremId::scrambling_markov, [&] { return verify_scrambling_markov(one); });
  add(TheoremId::scrambling_chain, [&] { return verify_scrambling_chain(one); });
  add(TheoremId::sarymsakov_scrambling, [&] { return verify_sarymsakov_scrambling(one, c); });
  add(TheoremId::sarymsakov_markov, [&] { return verify_sarymsakov_markov(one, c); });
  return rows;
}

}  // namespace

extern "C" {

const char* posmat_last_error(void) { return last_error.c_str(); }

const char* posmat_status_name(int status) {
  if (status == POSMAT_OK) return "ok";
  if (status < POSMAT_E_INVALID_ARGUMENT || status > POSMAT_E_INTERNAL) return "unknown";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* posmat_version(void) { return "1.0.0"; }

void posmat_string_free(char* s) { std::free(s); }

int posmat_set_max_n(int n) {
  return guard([&] {
    if (n < 0) throw Error(ErrorCode::out_of_range, "max-n must be nonnegative");
    max_n_override = n;
  });
}

// ---- matrices

int posmat_matrix_parse(const char* text, int as_pattern, posmat_matrix** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(read_matrix(text, as_pattern != 0));
  });
}

int posmat_matrix_load(const char* path, int as_pattern, posmat_matrix** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = wrap(read_matrix(read_text_file(path), as_pattern != 0));
  });
}

int posmat_matrix_emit(const posmat_matrix* m, int as_pattern, char** out) {
  return guard([&] {
    need(m, "matrix");
    need(out, "out");
    *out = dup(as_pattern ? emit_pattern_grid(indicator(m->m)) : emit_matrix(m->m));
  });
}

int posmat_matrix_json(const posmat_matrix* m, char** out) {
  return guard([&] {
    need(m, "matrix");
    json j = report::envelope("matrix");
    j["rows"] = m->m.rows();
    j["cols"] = m->m.cols();
    j["entries"] = report::matrix(m->m);
    put(out, j);
  });
}

void posmat_matrix_free(posmat_matrix* m) { delete m; }
size_t posmat_matrix_rows(const posmat_matrix* m) { return m ? m->m.rows() : 0; }
size_t posmat_matrix_cols(const posmat_matrix* m) { return m ? m->m.cols() : 0; }

int posmat_generate_wielandt(int n, posmat_matrix** out) {
  return guard([&] {
    need(out, "out");
    *out = wrap(NonnegMatrix::from_pattern(generate_wielandt(n)));
  });
}

int posmat_generate_periodic_block(const int* sizes, size_t count, posmat_matrix** out) {
  return guard([&] {
    need(out, "out");
    if (count > 0) need(sizes, "sizes");
    std::vector<int> v(sizes, sizes + count);
    *out = wrap(NonnegMatrix::from_pattern(generate_periodic_block(v)));
  });
}

int posmat_generate_random(const char* kind, int rows, int cols, const char* density, const char* filter, int k,
                           uint64_t seed, posmat_matrix** out) {
  return guard([&] {
    need(out, "out");
    RandomSpec spec;
    if (kind) spec.kind = random_kind_from_name(kind);
    spec.rows = rows;
    spec.cols = cols;
    if (density) spec.density = parse_rational(density);
    if (filter) spec.filter = random_filter_from_name(filter);
    spec.k = k;
    *out = wrap(random_matrix(spec, seed, caps()));
  });
}

int posmat_fixture(const char* id, posmat_matrix** matrix, posmat_graph** graph) {
  return guard([&] {
    need(id, "id");
    need(matrix, "matrix");
    need(graph, "graph");
    const Fixture& f = fixture(id);
    *matrix = f.matrix ? wrap(*f.matrix) : nullptr;
    *graph = f.graph ? new posmat_graph{*f.graph} : nullptr;
  });
}

int posmat_fixture_list_json(char** out) {
  return guard([&] {
    json j = report::envelope("fixtures");
    json a = json::array();
    for (const auto& f : fixtures()) {
      json facts = json::array();
      for (const auto& fact : f.facts) facts.push_back({{"property", fact.property}, {"expected", fact.expected}});
      a.push_back({{"id", f.id},
                   {"description", f.description},
                   {"payload", f.matrix ? "matrix" : "graph"},
                   {"facts", facts}});
    }
    j["fixtures"] = a;
    put(out, j);
  });
}

int posmat_fixture_check_json(int* all_hold, char** out) {
  return guard([&] {
    const Caps c = caps();
    bool ok = true;
    json a = json::array();
    for (const auto& f : fixtures())
      for (const auto& fact : f.facts) {
        std::string got = evaluate_fact(f, fact.property, c);
        ok = ok && got == fact.expected;
        a.push_back({{"fixture", f.id},
                     {"property", fact.property},
                     {"expected", fact.expected},
                     {"actual", got},
                     {"holds", got == fact.expected}});
      }
    if (all_hold) *all_hold = ok ? 1 : 0;
    json j = report::envelope("fixture-check");
    j["all_hold"] = ok;
    j["facts"] = a;
    put(out, j);
  });
}

// ---- analyses

int posmat_classify_json(const posmat_matrix* m, int certificates, char** out) {
  return guard([&] {
    need(m, "matrix");
    put(out, report::classification(classify(m->m, caps()), certificates != 0));
  });
}

int posmat_gk_json(const posmat_matrix* m, int k, int* is_gk_out, char** out) {
  return guard([&] {
    need(m, "matrix");
    GkReport r = is_gk(indicator(m->m), k, caps());
    if (is_gk_out) *is_gk_out = r.is_gk ? 1 : 0;
    json j = report::envelope("gk");
    j["k"] = r.k_tested;
    j["is_gk"] = r.is_gk;
    j["counterexample"] = r.counterexample ? report::index_set(*r.counterexample) : json(nullptr);
    if (r.counterexample)
      j["deficiency"] = report::index_set(deficiency_set(indicator(m->m), *r.counterexample));
    put(out, j);
  });
}

int posmat_gk_index(const posmat_matrix* m, int* out) {
  return guard([&] {
    need(m, "matrix");
    need(out, "out");
    *out = gk_index(indicator(m->m), caps());
  });
}

int posmat_gamma(const posmat_matrix* m, int* out) {
  return guard([&] {
    need(m, "matrix");
    need(out, "out");
    *out = gamma(indicator(m->m));
  });
}

int posmat_bounds_json(const posmat_matrix* m, int k, char** out) {
  return guard([&] {
    need(m, "matrix");
    const PatternMatrix p = indicator(m->m);
    if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "bounds need a square matrix");
    const Caps c = caps();
    int index = gk_index(p, c);
    int use = k > 0 ? k : std::max(1, index);
    json j = report::envelope("bounds");
    j["order"] = p.rows();
    j["k"] = use;
    j["gk_index"] = index;
    j["results"] = bounds_table(p, use, c);
    put(out, j);
  });
}

int posmat_verify_json(const char* theorem, const posmat_matrix* const* factors, size_t count,
                       const posmat_verify_args* args, int* verdict, char** out) {
  return guard([&] {
    Instance in;
    in.theorem = theorem_from(theorem);
    if (count > 0) need(factors, "factors");
    for (size_t i = 0; i < count; ++i) {
      need(factors[i], "factor");
      in.factors.push_back(indicator(factors[i]->m));
    }
    if (args) {
      in.k = args->k;
      in.n = args->n;
      in.m_block = args->m_block;
      in.variant = variant_from(args->variant);
      if (args->w) {
        if (in.factors.empty()) throw Error(ErrorCode::invalid_argument, "W given without matrices");
        in.w = parse_index_set(args->w, in.factors[0].rows());
      }
    }
    if (in.theorem != TheoremId::wielandt && in.factors.empty())
      throw Error(ErrorCode::invalid_argument, std::string("theorem ") + theorem + " needs at least one matrix");
    BoundResult r = run_instance(in, caps());
    if (verdict) *verdict = !r.hypotheses_met ? 2 : (is_violation(r) ? 1 : 0);
    json j = report::envelope("verify");
    j["result"] = report::bound(r);
    put(out, j);
  });
}

int posmat_verify_random_json(const char* theorem, long trials, int n_lo, int n_hi, uint64_t seed, long* violations,
                              char** out) {
  return guard([&] {
    SweepSummary s = sweep(theorem_from(theorem), trials, n_lo, n_hi, seed, caps());
    if (violations) *violations = s.violations;
    put(out, report::sweep(s));
  });
}

int posmat_limit_json(const posmat_matrix* m, const char* tolerance, long max_iter, int* converged, char** out) {
  return guard([&] {
    need(m, "matrix");
    Rational tol = tolerance ? parse_rational(tolerance) : Rational(1, 1000000000);
    PowerLimit l = power_limit(StochasticMatrix(m->m), tol, max_iter);
    if (converged) *converged = l.converged ? 1 : 0;
    put(out, report::limit(l, tol));
  });
}

// ---- graphs

int posmat_graph_parse(const char* text, posmat_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new posmat_graph{parse_graph(text)};
  });
}

int posmat_graph_load(const char* path, posmat_graph** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new posmat_graph{parse_graph(read_text_file(path))};
  });
}

int posmat_graph_emit(const posmat_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(emit_graph(g->g));
  });
}

int posmat_graph_json(const posmat_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    json j = report::envelope("graph");
    j["order"] = g->g.order();
    json e = json::array();
    for (auto [u, v] : g->g.edges()) e.push_back({u + 1, v + 1});
    j["edges"] = e;
    put(out, j);
  });
}

void posmat_graph_free(posmat_graph* g) { delete g; }
size_t posmat_graph_order(const posmat_graph* g) { return g ? g->g.order() : 0; }

int posmat_graph_kappa_json(const posmat_graph* g, int* kappa, char** out) {
  return guard([&] {
    need(g, "graph");
    ConnectivityReport r = connectivity_bruteforce(g->g, caps());
    if (kappa) *kappa = r.kappa;
    put(out, report::connectivity(r, static_cast<int>(g->g.order())));
  });
}

int posmat_graph_check_k_json(const posmat_graph* g, int k, int* connected, char** out) {
  return guard([&] {
    need(g, "graph");
    const PatternMatrix a = adjacency_matrix(g->g);
    bool via_gk = is_k_connected_via_gk(g->g, k, caps());
    if (connected) *connected = via_gk ? 1 : 0;
    json j = report::envelope("check-k");
    j["k"] = k;
    j["k_connected"] = via_gk;
    GkReport r = is_gk(a, k, caps());
    // a violating Y: its outside neighbours form a cut smaller than k
    if (r.counterexample) {
      j["vertex_set"] = report::index_set(*r.counterexample);
      j["separating_set"] = report::index_set(deficiency_set(a, *r.counterexample));
    }
    put(out, j);
  });
}

int posmat_graph_audit_json(const posmat_graph* g, int k, int* agree, char** out) {
  return guard([&] {
    need(g, "graph");
    const Caps c = caps();
    const int n = static_cast<int>(g->g.order());
    int lo = k > 0 ? k : 1, hi = k > 0 ? k : n - 1;
    bool ok = true;
    json a = json::array();
    for (int kk = lo; kk <= hi; ++kk) {
      AuditReport r = equivalence_audit(g->g, kk, c);
      ok = ok && r.agree();
      a.push_back(report::audit(r));
    }
    if (agree) *agree = ok ? 1 : 0;
    json j = report::envelope("audit");
    j["order"] = n;
    j["all_agree"] = ok;
    j["audits"] = a;
    put(out, j);
  });
}

}  // extern "C"
