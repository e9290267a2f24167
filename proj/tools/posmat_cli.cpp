#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "posmat.h"

namespace {

using nlohmann::json;

// exit codes
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Exit {
  int code;
};

struct Globals {
  bool json = false;
  bool pattern = false;
  bool certificates = false;
  std::uint64_t seed = 1;
  int max_n = 0;
};

Globals g;

[[noreturn]] void fail(int status) {
  std::cerr << "posmat: " << posmat_status_name(status) << ": " << posmat_last_error() << "\n";
  throw Exit{kUsage};
}

void check(int status) {
  if (status != POSMAT_OK) fail(status);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  posmat_string_free(s);
  return out;
}

using Matrix = std::unique_ptr<posmat_matrix, decltype(&posmat_matrix_free)>;
using GraphPtr = std::unique_ptr<posmat_graph, decltype(&posmat_graph_free)>;

std::string slurp_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

Matrix load_matrix(const std::string& path) {
  posmat_matrix* m = nullptr;
  if (path == "-") check(posmat_matrix_parse(slurp_stdin().c_str(), g.pattern, &m));
  else check(posmat_matrix_load(path.c_str(), g.pattern, &m));
  return Matrix(m, posmat_matrix_free);
}

GraphPtr load_graph(const std::string& path) {
  posmat_graph* gr = nullptr;
  if (path == "-") check(posmat_graph_parse(slurp_stdin().c_str(), &gr));
  else check(posmat_graph_load(path.c_str(), &gr));
  return GraphPtr(gr, posmat_graph_free);
}

std::string set_str(const json& a) {
  if (a.is_null()) return "none";
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i].get<int>());
  return s + "}";
}

std::string rat_str(const json& q) {
  if (q.is_null()) return "n/a";
  std::string den = q["den"];
  return den == "1" ? q["num"].get<std::string>() : q["num"].get<std::string>() + "/" + den;
}

std::string val_str(const json& v) {
  if (v.is_null()) return "n/a";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_object() && v.contains("num")) return rat_str(v);
  if (v.is_array()) return set_str(v);
  return v.dump();
}

void emit_matrix(posmat_matrix* m) {
  char* out = nullptr;
  if (g.json) check(posmat_matrix_json(m, &out));
  else check(posmat_matrix_emit(m, g.pattern, &out));
  std::cout << take(out);
  if (g.json) std::cout << "\n";
}

void emit_graph(posmat_graph* gr) {
  char* out = nullptr;
  check(g.json ? posmat_graph_json(gr, &out) : posmat_graph_emit(gr, &out));
  std::cout << take(out);
  if (g.json) std::cout << "\n";
}

// ---- verbs

int cmd_classify(const std::string& file) {
  Matrix m = load_matrix(file);
  char* out = nullptr;
  check(posmat_classify_json(m.get(), g.certificates, &out));
  std::string text = take(out);
  if (g.json) {
    std::cout << text << "\n";
    return kTrue;
  }
  json j = json::parse(text);
  const char* keys[] = {"rows",      "cols",       "row_allowable", "column_allowable", "positive",
                        "markov",    "positive_columns", "stochastic", "irreducible", "primitive",
                        "period",    "girth",      "gamma",         "gk_index",         "fully_indecomposable",
                        "positive_diagonal", "scrambling", "sarymsakov", "mu", "alpha"};
  for (const char* k : keys) std::cout << std::left << std::setw(22) << k << val_str(j[k]) << "\n";
  if (j.contains("certificates"))
    for (auto& [k, v] : j["certificates"].items()) std::cout << "certificate " << k << ": " << v.dump() << "\n";
  return kTrue;
}

int cmd_gk(const std::string& file, int k) {
  Matrix m = load_matrix(file);
  int is = 0;
  char* out = nullptr;
  check(posmat_gk_json(m.get(), k, &is, &out));
  std::string text = take(out);
  if (g.json) {
    std::cout << text << "\n";
  } else {
    json j = json::parse(text);
    if (is) std::cout << "g_" << k << ": yes\n";
    else
      std::cout << "g_" << k << ": no; F = " << set_str(j["counterexample"]) << ", D_F = " << set_str(j["deficiency"])
                << "\n";
  }
  return is ? kTrue : kFalse;
}

int cmd_gk_index(const std::string& file) {
  Matrix m = load_matrix(file);
  int k = 0;
  check(posmat_gk_index(m.get(), &k));
  if (g.json) std::cout << json{{"schema", "posmat/1"}, {"kind", "gk-index"}, {"gk_index", k}}.dump(2) << "\n";
  else std::cout << k << "\n";
  return kTrue;
}

int cmd_gamma(const std::string& file) {
  Matrix m = load_matrix(file);
  int v = 0;
  int st = posmat_gamma(m.get(), &v);
  if (st == POSMAT_E_NOT_PRIMITIVE || st == POSMAT_E_NOT_IRREDUCIBLE) {
    if (g.json)
      std::cout << json{{"schema", "posmat/1"}, {"kind", "gamma"}, {"primitive", false}, {"gamma", nullptr},
                        {"reason", posmat_last_error()}}
                       .dump(2)
                << "\n";
    else std::cout << "not primitive: " << posmat_last_error() << "\n";
    return kFalse;
  }
  check(st);
  if (g.json) std::cout << json{{"schema", "posmat/1"}, {"kind", "gamma"}, {"primitive", true}, {"gamma", v}}.dump(2) << "\n";
  else std::cout << v << "\n";
  return kTrue;
}

void print_bound(const json& r) {
  std::string status = !r["hypotheses_met"].get<bool>() ? "hypotheses not met"
                       : r["conclusion_holds"].get<bool>() ? "conclusion holds"
                                                          : "CONCLUSION VIOLATED";
  std::cout << r["theorem"].get<std::string>() << ": " << status << "\n";
  std::cout << "  bound     " << val_str(r["bound"]) << "\n";
  std::cout << "  attained  " << val_str(r["attained"]) << "\n";
  std::cout << "  slack     " << val_str(r["slack"]) << "\n";
  if (!r["note"].get<std::string>().empty()) std::cout << "  note      " << r["note"].get<std::string>() << "\n";
}

int cmd_bounds(const std::string& file, int k) {
  Matrix m = load_matrix(file);
  char* out = nullptr;
  check(posmat_bounds_json(m.get(), k, &out));
  std::string text = take(out);
  if (g.json) {
    std::cout << text << "\n";
    return kTrue;
  }
  json j = json::parse(text);
  std::cout << "order " << j["order"] << ", k = " << j["k"] << " (gk index " << j["gk_index"] << ")\n";
  for (const auto& r : j["results"]) print_bound(r);
  return kTrue;
}

struct VerifyOpts {
  std::string theorem;
  std::vector<std::string> files;
  int k = 1;
  int n = 0;
  int m_block = 1;
  std::string w;
  std::string variant = "head";
  long random = 0;
  std::string size = "3..7";
};

void parse_size(const std::string& s, int& lo, int& hi) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      lo = hi = std::stoi(s);
    } else {
      lo = std::stoi(s.substr(0, dots));
      hi = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::cerr << "posmat: --size expects N or LO..HI, got '" << s << "'\n";
    throw Exit{kUsage};
  }
}

int cmd_verify_random(const VerifyOpts& o) {
  int lo = 0, hi = 0;
  parse_size(o.size, lo, hi);
  long violations = 0;
  char* out = nullptr;
  check(posmat_verify_random_json(o.theorem.c_str(), o.random, lo, hi, g.seed, &violations, &out));
  std::string text = take(out);
  json j = json::parse(text);
  bool clean = violations == 0 && j["first_unmet"].is_null();
  if (g.json) {
    std::cout << text << "\n";
    return clean ? kTrue : kFalse;
  }
  std::cout << j["theorem"].get<std::string>() << ": " << j["trials"] << " trials, sizes " << lo << ".." << hi
            << ", seed " << j["root_seed"].get<std::string>() << "\n";
  std::cout << "  hypotheses met  " << j["hypotheses_met"] << "\n";
  std::cout << "  violations      " << j["violations"] << "\n";
  std::cout << "  min slack       " << val_str(j["min_slack"]) << "\n";
  for (const char* key : {"first_violation", "first_unmet"}) {
    if (j[key].is_null()) continue;
    const json& f = j[key];
    std::cout << "  " << key << ": trial " << f["trial"] << " (seed " << f["seed"].get<std::string>() << ")\n";
    const json& in = f["instance"];
    std::cout << "    k = " << in["k"];
    if (in.contains("W")) std::cout << ", W = " << set_str(in["W"]);
    if (in.contains("variant")) std::cout << ", variant " << in["variant"].get<std::string>();
    if (in.contains("m_block")) std::cout << ", block " << in["m_block"];
    std::cout << "\n    " << f["result"]["note"].get<std::string>() << "\n";
    int l = 1;
    for (const auto& grid : in["factors"]) {
      std::cout << "    factor " << l++ << ":\n";
      for (const auto& row : grid) std::cout << "      " << row.get<std::string>() << "\n";
    }
  }
  return clean ? kTrue : kFalse;
}

int cmd_verify(const VerifyOpts& o) {
  if (o.random > 0) return cmd_verify_random(o);
  std::vector<Matrix> owned;
  std::vector<const posmat_matrix*> ptrs;
  for (const auto& f : o.files) {
    owned.push_back(load_matrix(f));
    ptrs.push_back(owned.back().get());
  }
  posmat_verify_args args{o.k, o.n, o.m_block, o.w.empty() ? nullptr : o.w.c_str(), o.variant.c_str()};
  int verdict = 0;
  char* out = nullptr;
  check(posmat_verify_json(o.theorem.c_str(), ptrs.data(), ptrs.size(), &args, &verdict, &out));
  std::string text = take(out);
  if (g.json) std::cout << text << "\n";
  else print_bound(json::parse(text)["result"]);
  return verdict == 0 ? kTrue : verdict == 1 ? kFalse : kUsage;
}

int cmd_graph_kappa(const std::string& file) {
  GraphPtr gr = load_graph(file);
  int kappa = 0;
  char* out = nullptr;
  check(posmat_graph_kappa_json(gr.get(), &kappa, &out));
  std::string text = take(out);
  if (g.json) {
    std::cout << text << "\n";
  } else {
    json j = json::parse(text);
    std::cout << kappa;
    if (!j["min_cut"].is_null()) std::cout << " (cut " << set_str(j["min_cut"]) << ")";
    else std::cout << " (complete after removing loops)";
    std::cout << "\n";
  }
  return kTrue;
}

int cmd_graph_check(const std::string& file, int k) {
  GraphPtr gr = load_graph(file);
  int ok = 0;
  char* out = nullptr;
  check(posmat_graph_check_k_json(gr.get(), k, &ok, &out));
  std::string text = take(out);
  if (g.json) {
    std::cout << text << "\n";
  } else {
    json j = json::parse(text);
    std::cout << k << "-connected: " << (ok ? "yes" : "no");
    if (j.contains("separating_set"))
      std::cout << "; " << set_str(j["separating_set"]) << " separates " << set_str(j["vertex_set"])
                << " from the rest";
    std::cout << "\n";
  }
  return ok ? kTrue : kFalse;
}

int cmd_graph_audit(const std::string& file, int k) {
  GraphPtr gr = load_graph(file);
  int agree = 0;
  char* out = nullptr;
  check(posmat_graph_audit_json(gr.get(), k, &agree, &out));
  std::string text = take(out);
  if (g.json) {
    std::cout << text << "\n";
  } else {
    json j = json::parse(text);
    std::cout << "k  cuts  g_k  neighbour-sets  deficiency  agree\n";
    for (const auto& a : j["audits"])
      std::cout << std::left << std::setw(3) << a["k"].get<int>() << std::setw(6) << val_str(a["by_cuts"])
                << std::setw(5) << val_str(a["by_gk"]) << std::setw(16) << val_str(a["by_neighbour_sets"])
                << std::setw(12) << val_str(a["by_deficiency"]) << val_str(a["agree"]) << "\n";
  }
  return agree ? kTrue : kFalse;
}

int cmd_limit(const std::string& file, const std::string& tol, long max_iter) {
  Matrix m = load_matrix(file);
  int converged = 0;
  char* out = nullptr;
  check(posmat_limit_json(m.get(), tol.c_str(), max_iter, &converged, &out));
  std::string text = take(out);
  if (g.json) {
    std::cout << text << "\n";
  } else {
    json j = json::parse(text);
    std::cout << (converged ? "converged" : "did not converge") << " after " << j["iterations"] << " steps\n";
    std::cout << std::setprecision(12);
    for (const auto& row : j["approx"]) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i].get<double>();
      std::cout << "\n";
    }
  }
  return converged ? kTrue : kFalse;
}

int cmd_fixture(const std::string& id) {
  posmat_matrix* m = nullptr;
  posmat_graph* gr = nullptr;
  check(posmat_fixture(id.c_str(), &m, &gr));
  Matrix mo(m, posmat_matrix_free);
  GraphPtr go(gr, posmat_graph_free);
  if (m) emit_matrix(m);
  else emit_graph(gr);
  return kTrue;
}

int cmd_fixtures_list() {
  char* out = nullptr;
  check(posmat_fixture_list_json(&out));
  std::string text = take(out);
  if (g.json) {
    std::cout << text << "\n";
    return kTrue;
  }
  const json j = json::parse(text);
  for (const auto& f : j["fixtures"]) {
    std::cout << f["id"].get<std::string>() << " (" << f["payload"].get<std::string>()
              << "): " << f["description"].get<std::string>() << "\n";
    for (const auto& fact : f["facts"])
      std::cout << "  " << fact["property"].get<std::string>() << " = " << fact["expected"].get<std::string>() << "\n";
  }
  return kTrue;
}

int cmd_fixtures_check() {
  int ok = 0;
  char* out = nullptr;
  check(posmat_fixture_check_json(&ok, &out));
  std::string text = take(out);
  if (g.json) {
    std::cout << text << "\n";
    return ok ? kTrue : kFalse;
  }
  int total = 0, bad = 0;
  const json j = json::parse(text);
  for (const auto& f : j["facts"]) {
    ++total;
    if (f["holds"].get<bool>()) continue;
    ++bad;
    std::cout << f["fixture"].get<std::string>() << ": " << f["property"].get<std::string>() << " expected "
              << f["expected"].get<std::string>() << ", got " << f["actual"].get<std::string>() << "\n";
  }
  std::cout << total - bad << "/" << total << " fixture facts hold\n";
  return ok ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural analysis of nonnegative matrices: g_k classes, primitivity bounds, product theorems"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--pattern", g.pattern, "read and write matrices as grids of '*' and '0'");
  app.add_flag("--certificates", g.certificates, "include certificates in classify output");
  app.add_option("--seed", g.seed, "root seed for random generation (64-bit unsigned)");
  app.add_option("--max-n", g.max_n, "raise every enumeration cap to this size");

  std::vector<std::pair<CLI::App*, std::function<int()>>> verbs;
  auto on = [&](CLI::App* sub, std::function<int()> fn) { verbs.emplace_back(sub, std::move(fn)); };
  std::string file;
  int k = 0;

  auto* classify = app.add_subcommand("classify", "every structural property of a matrix");
  classify->add_option("file", file, "matrix file, '-' for stdin")->required();
  on(classify, [&] { return cmd_classify(file); });

  auto* gk = app.add_subcommand("gk", "test membership in the g_k class");
  gk->add_option("--k", k, "k")->required();
  gk->add_option("file", file)->required();
  on(gk, [&] { return cmd_gk(file, k); });

  auto* gki = app.add_subcommand("gk-index", "largest k with the matrix in g_k");
  gki->add_option("file", file)->required();
  on(gki, [&] { return cmd_gk_index(file); });

  auto* gam = app.add_subcommand("gamma", "index of primitivity");
  gam->add_option("file", file)->required();
  on(gam, [&] { return cmd_gamma(file); });

  auto* bounds = app.add_subcommand("bounds", "every applicable bound, with hypotheses and slack");
  bounds->add_option("file", file)->required();
  bounds->add_option("--k", k, "k for the g_k bounds (default: the matrix's g_k index)");
  on(bounds, [&] { return cmd_bounds(file, k); });

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run one theorem verifier on matrices or random instances");
  verify->add_option("theorem", vo.theorem)->required();
  verify->add_option("files", vo.files, "factor matrices, in order");
  verify->add_option("--k", vo.k);
  verify->add_option("--n", vo.n, "order (wielandt)");
  verify->add_option("--m-block", vo.m_block, "leading block size (leading-block)");
  verify->add_option("--w", vo.w, "index set such as {1,3} (diagonal-subset-product)");
  verify->add_option("--variant", vo.variant, "head or tail (diagonal-subset-product)")
      ->check(CLI::IsMember({"head", "tail"}));
  verify->add_option("--random", vo.random, "number of random hypothesis-satisfying instances");
  verify->add_option("--size", vo.size, "order N or range LO..HI for --random");
  on(verify, [&] { return cmd_verify(vo); });

  auto* graph = app.add_subcommand("graph", "vertex connectivity");
  graph->require_subcommand(1);
  auto* kappa = graph->add_subcommand("kappa", "vertex connectivity by cut enumeration");
  kappa->add_option("file", file)->required();
  on(kappa, [&] { return cmd_graph_kappa(file); });
  auto* checkk = graph->add_subcommand("check-k", "k-connectivity via the g_k test");
  checkk->add_option("file", file)->required();
  checkk->add_option("k", k)->required();
  on(checkk, [&] { return cmd_graph_check(file, k); });
  auto* audit = graph->add_subcommand("audit", "compare four characterisations of k-connectivity");
  audit->add_option("file", file)->required();
  audit->add_option("k", k, "omit to audit every k");
  on(audit, [&] { return cmd_graph_audit(file, k); });

  auto* gen = app.add_subcommand("generate", "write a matrix or graph");
  gen->require_subcommand(1);
  int wn = 0;
  auto* gw = gen->add_subcommand("wielandt", "Wielandt matrix");
  gw->add_option("n", wn)->required();
  on(gw, [&] {
    posmat_matrix* m = nullptr;
    check(posmat_generate_wielandt(wn, &m));
    Matrix own(m, posmat_matrix_free);
    emit_matrix(m);
    return kTrue;
  });
  std::vector<int> sizes;
  auto* gp = gen->add_subcommand("periodic-block", "ring of all-ones blocks");
  gp->add_option("sizes", sizes)->required();
  on(gp, [&] {
    posmat_matrix* m = nullptr;
    check(posmat_generate_periodic_block(sizes.data(), sizes.size(), &m));
    Matrix own(m, posmat_matrix_free);
    emit_matrix(m);
    return kTrue;
  });
  std::string kind = "pattern", filter = "none", density = "1/2";
  int rows = 4, cols = 0, gk_k = 1;
  auto* gr = gen->add_subcommand("random", "random matrix, optionally filtered by rejection");
  gr->add_option("--kind", kind, "nonneg, stochastic or pattern");
  gr->add_option("--n", rows, "rows");
  gr->add_option("--cols", cols, "columns (default: same as rows)");
  gr->add_option("--density", density, "probability of a positive entry, e.g. 1/2");
  gr->add_option("--filter", filter,
                 "none, irreducible, primitive, scrambling, sarymsakov, fully-indecomposable or gk");
  gr->add_option("--k", gk_k, "k for the gk filter");
  on(gr, [&] {
    posmat_matrix* m = nullptr;
    check(posmat_generate_random(kind.c_str(), rows, cols > 0 ? cols : rows, density.c_str(), filter.c_str(), gk_k,
                                 g.seed, &m));
    Matrix own(m, posmat_matrix_free);
    emit_matrix(m);
    return kTrue;
  });
  std::string fid;
  auto* gf = gen->add_subcommand("fixture", "a built-in worked example");
  gf->add_option("id", fid)->required();
  on(gf, [&] { return cmd_fixture(fid); });

  auto* fx = app.add_subcommand("fixtures", "the built-in examples");
  fx->require_subcommand(1);
  on(fx->add_subcommand("list", "ids and stated facts"), [&] { return cmd_fixtures_list(); });
  on(fx->add_subcommand("check", "re-evaluate every stated fact"), [&] { return cmd_fixtures_check(); });

  std::string tol = "1/1000000000";
  long max_iter = 100000;
  auto* lim = app.add_subcommand("limit", "iterate powers of a stochastic matrix until they settle");
  lim->add_option("file", file)->required();
  lim->add_option("--tol", tol, "stop when successive powers differ by less than this everywhere");
  lim->add_option("--max-iter", max_iter);
  on(lim, [&] { return cmd_limit(file, tol, max_iter); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    if (g.max_n > 0) check(posmat_set_max_n(g.max_n));
    for (auto& [sub, fn] : verbs)
      if (sub->parsed()) return fn();
  } catch (const Exit& e) {
    return e.code;
  }
  return kUsage;
}
