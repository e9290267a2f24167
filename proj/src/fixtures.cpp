#include "posmat/fixtures.hpp"

#include <algorithm>

#include "posmat/classes.hpp"
#include "posmat/gk.hpp"
#include "posmat/gplus.hpp"
#include "posmat/io.hpp"

namespace posmat {

namespace {

NonnegMatrix ints(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> v;
    for (int x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return NonnegMatrix::from_rows(r);
}

Fixture matrix_fixture(std::string id, std::string desc, NonnegMatrix m, std::vector<Fact> facts) {
  Fixture f;
  f.id = std::move(id);
  f.description = std::move(desc);
  f.matrix = std::move(m);
  f.facts = std::move(facts);
  return f;
}

Fixture graph_fixture(std::string id, std::string desc, Graph g, std::vector<Fact> facts) {
  Fixture f;
  f.id = std::move(id);
  f.description = std::move(desc);
  f.graph = std::move(g);
  f.facts = std::move(facts);
  return f;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  out.push_back(matrix_fixture(
      "product-left", "left factor of a product whose third column is positive",
      ints({{1, 0, 0, 0}, {0, 2, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 3}}),
      {{"sum_positive:{1,2,3,4}x{1,2,3}", "true"},
       {"row_allowable", "true"},
       {"product_positive_columns:product-right", "{3}"}}));
  out.push_back(matrix_fixture("product-right", "right factor of the same product",
                               ints({{0, 0, 1, 0}, {1, 0, 1, 0}, {0, 0, 2, 0}, {4, 0, 0, 0}}),
                               {{"sum_positive:{1,2,3}x{3}", "true"}}));
  out.push_back(matrix_fixture(
      "reducible-two-way", "every vertex has an in- and out-neighbour, yet the matrix is reducible",
      ints({{1, 1, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 0}}),
      {{"irreducible", "false"}, {"gk_index", "0"}, {"fully_indecomposable", "false"}}));
  out.push_back(matrix_fixture("single-column", "only the first column is positive",
                               ints({{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}}),
                               {{"row_allowable", "true"},
                                {"column_allowable", "false"},
                                {"irreducible", "false"},
                                {"gk_index", "0"}}));
  out.push_back(matrix_fixture(
      "column-counts-not-gk", "two off-diagonal positives per column but not g_2",
      ints({{0, 1, 1, 0, 0, 1},
            {1, 0, 1, 0, 0, 0},
            {1, 1, 0, 0, 0, 0},
            {1, 0, 0, 0, 1, 1},
            {0, 0, 0, 1, 0, 1},
            {0, 0, 0, 1, 1, 0}}),
      {{"min_offdiag_column", "2"},
       {"is_gk:2", "false"},
       {"gk_counterexample:2", "{1,2,3}"},
       {"deficiency:{1,2,3}", "{4}"},
       {"irreducible", "true"}}));
  out.push_back(matrix_fixture("identity-shift-not-gk", "(I+P)^2 > 0 without being g_2",
                               ints({{1, 1, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}}),
                               {{"identity_power_positive:2", "true"},
                                {"is_gk:2", "false"},
                                {"deficiency:{3,4}", "{1}"}}));
  out.push_back(matrix_fixture("block-ring-9", "three 3x3 blocks in a ring with a positive diagonal",
                               ints({{1, 0, 0, 1, 1, 1, 0, 0, 0},
                                     {0, 1, 0, 1, 1, 1, 0, 0, 0},
                                     {0, 0, 1, 1, 1, 1, 0, 0, 0},
                                     {0, 0, 0, 1, 0, 0, 1, 1, 1},
                                     {0, 0, 0, 0, 1, 0, 1, 1, 1},
                                     {0, 0, 0, 0, 0, 1, 1, 1, 1},
                                     {1, 1, 1, 0, 0, 0, 1, 0, 0},
                                     {1, 1, 1, 0, 0, 0, 0, 1, 0},
                                     {1, 1, 1, 0, 0, 0, 0, 0, 1}}),
                               {{"is_gk:3", "true"},
                                {"gamma", "3"},
                                {"power_positive:2", "false"},
                                {"power_positive:3", "true"},
                                {"power_positive:8", "true"}}));
  out.push_back(matrix_fixture("zero-diagonal-3", "3x3 with every off-diagonal entry positive",
                               ints({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
                               {{"period", "1"}, {"gk_index", "2"}, {"girth", "2"}, {"gamma", "2"}}));
  out.push_back(matrix_fixture("stochastic-primitive", "2x2 stochastic matrix with a positive column",
                               NonnegMatrix::from_rows({{0, 1}, {Rational(1, 2), Rational(1, 2)}}),
                               {{"stochastic", "true"},
                                {"markov", "true"},
                                {"primitive", "true"},
                                {"scrambling", "true"},
                                {"mu", "1/2"},
                                {"alpha", "1/2"}}));
  out.push_back(matrix_fixture("stochastic-reducible", "2x2 stochastic matrix, reducible, positive first column",
                               NonnegMatrix::from_rows({{1, 0}, {Rational(1, 2), Rational(1, 2)}}),
                               {{"stochastic", "true"},
                                {"markov", "true"},
                                {"irreducible", "false"},
                                {"positive_columns", "{1}"}}));
  out.push_back(matrix_fixture("wielandt-6", "Wielandt matrix of order 6",
                               NonnegMatrix::from_pattern([] {
                                 PatternMatrix p(6, 6);
                                 for (std::size_t i = 0; i + 1 < 6; ++i) p.set(i, i + 1);
                                 p.set(5, 0);
                                 p.set(5, 1);
                                 return p;
                               }()),
                               {{"gamma", "26"}, {"girth", "5"}, {"power_positive:25", "false"}}));
  out.push_back(graph_fixture("petersen", "Petersen graph", Graph::petersen(), {{"kappa", "3"}}));
  out.push_back(graph_fixture("cycle-5", "cycle on five vertices", Graph::cycle(5), {{"kappa", "2"}}));
  out.push_back(graph_fixture("complete-4", "complete graph on four vertices", Graph::complete(4), {{"kappa", "3"}}));
  return out;
}

std::string yes(bool b) { return b ? "true" : "false"; }

const NonnegMatrix& need_matrix(const Fixture& f) {
  if (!f.matrix) throw Error(ErrorCode::invalid_argument, "fixture '" + f.id + "' has no matrix");
  return *f.matrix;
}

long parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (...) {
  }
  throw Error(ErrorCode::parse_error, "expected an integer, got '" + s + "'");
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(const std::string& id) {
  for (const auto& f : fixtures())
    if (f.id == id) return f;
  std::string known;
  for (const auto& f : fixtures()) known += (known.empty() ? "" : ", ") + f.id;
  throw Error(ErrorCode::invalid_argument, "unknown fixture '" + id + "' (known: " + known + ")");
}

std::string evaluate_fact(const Fixture& f, const std::string& property, const Caps& caps) {
  if (property == "kappa") {
    if (!f.graph) throw Error(ErrorCode::invalid_argument, "fixture '" + f.id + "' has no graph");
    return std::to_string(connectivity_bruteforce(*f.graph, caps).kappa);
  }
  const NonnegMatrix& m = need_matrix(f);
  const PatternMatrix p = indicator(m);
  auto colon = property.find(':');
  std::string key = property.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : property.substr(colon + 1);

  if (key == "row_allowable") return yes(is_row_allowable(p));
  if (key == "column_allowable") return yes(is_column_allowable(p));
  if (key == "positive") return yes(is_positive(p));
  if (key == "irreducible") return yes(is_irreducible(p));
  if (key == "primitive") return yes(is_primitive(p));
  if (key == "markov") return yes(is_markov(p));
  if (key == "scrambling") return yes(is_scrambling(p));
  if (key == "sarymsakov") return yes(is_sarymsakov(p, caps));
  if (key == "fully_indecomposable") return yes(is_fully_indecomposable(p, caps));
  if (key == "stochastic") return yes(is_stochastic(m));
  if (key == "gamma") return std::to_string(gamma(p));
  if (key == "period") return std::to_string(period(p));
  if (key == "girth") {
    auto s = girth(p);
    return s ? std::to_string(*s) : "none";
  }
  if (key == "gk_index") return std::to_string(gk_index(p, caps));
  if (key == "min_offdiag_column") {
    std::size_t best = p.rows();
    for (std::size_t j = 0; j < p.cols(); ++j) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < p.rows(); ++i)
        if (i != j && p.get(i, j)) ++c;
      best = std::min(best, c);
    }
    return std::to_string(best);
  }
  if (key == "positive_columns") return positive_columns(p).str();
  if (key == "mu") return format_rational(mu(StochasticMatrix(m)));
  if (key == "alpha") return format_rational(alpha(StochasticMatrix(m)));
  if (key == "is_gk") return yes(is_gk(p, static_cast<int>(parse_long(arg)), caps).is_gk);
  if (key == "gk_counterexample") {
    auto r = is_gk(p, static_cast<int>(parse_long(arg)), caps);
    return r.counterexample ? r.counterexample->str() : "none";
  }
  if (key == "deficiency") return deficiency_set(p, parse_index_set(arg, p.rows())).str();
  if (key == "power_positive") return yes(is_positive(bool_power(p, parse_long(arg))));
  if (key == "identity_power_positive") return yes(is_positive(bool_power(with_identity(p), parse_long(arg))));
  if (key == "sum_positive") {
    auto x = arg.find("}x{");
    if (x == std::string::npos) throw Error(ErrorCode::parse_error, "sum_positive needs {U}x{V}");
    IndexSet u = parse_index_set(arg.substr(0, x + 1), p.rows());
    IndexSet v = parse_index_set(arg.substr(x + 2), p.cols());
    return yes(sum_positive_on(p, u, v));
  }
  if (key == "product_positive_columns") {
    const Fixture& other = fixture(arg);
    return positive_columns(bool_product(p, indicator(need_matrix(other)))).str();
  }
  throw Error(ErrorCode::invalid_argument, "unknown fixture property '" + property + "'");
}

}  // namespace posmat
