#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "posmat.h"

using json = nlohmann::json;

namespace {

struct MatrixFree {
  void operator()(posmat_matrix* m) const { posmat_matrix_free(m); }
};
struct GraphFree {
  void operator()(posmat_graph* g) const { posmat_graph_free(g); }
};
using Matrix = std::unique_ptr<posmat_matrix, MatrixFree>;
using GraphPtr = std::unique_ptr<posmat_graph, GraphFree>;

// Takes ownership of a returned string.
json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  posmat_string_free(s);
  CHECK(j.at("schema") == "posmat/1");
  return j;
}

Matrix parse(const char* text, int as_pattern = 0) {
  posmat_matrix* m = nullptr;
  REQUIRE(posmat_matrix_parse(text, as_pattern, &m) == POSMAT_OK);
  return Matrix(m);
}

Matrix fixture_matrix(const char* id) {
  posmat_matrix* m = nullptr;
  posmat_graph* g = nullptr;
  REQUIRE(posmat_fixture(id, &m, &g) == POSMAT_OK);
  REQUIRE(m != nullptr);
  CHECK(g == nullptr);
  return Matrix(m);
}

GraphPtr fixture_graph(const char* id) {
  posmat_matrix* m = nullptr;
  posmat_graph* g = nullptr;
  REQUIRE(posmat_fixture(id, &m, &g) == POSMAT_OK);
  REQUIRE(g != nullptr);
  CHECK(m == nullptr);
  return GraphPtr(g);
}

}  // namespace

TEST_CASE("status codes and messages") {
  CHECK(std::string(posmat_status_name(POSMAT_OK)) == "ok");
  CHECK(std::string(posmat_status_name(POSMAT_E_PARSE)) == "parse-error");
  CHECK(std::string(posmat_status_name(POSMAT_E_CAP_EXCEEDED)) == "cap-exceeded");
  CHECK(std::string(posmat_status_name(999)) == "unknown");
  CHECK(std::string(posmat_version()).size() > 0);

  posmat_matrix* m = nullptr;
  CHECK(posmat_matrix_parse("2 2\n1 x\n0 1\n", 0, &m) == POSMAT_E_PARSE);
  CHECK(m == nullptr);
  CHECK(std::string(posmat_last_error()).find("x") != std::string::npos);
  CHECK(posmat_matrix_parse("1 1\n-1\n", 0, &m) == POSMAT_E_NEGATIVE_ENTRY);
  CHECK(posmat_matrix_parse(nullptr, 0, &m) == POSMAT_E_INVALID_ARGUMENT);
  CHECK(posmat_matrix_parse("1 1\n1\n", 0, nullptr) == POSMAT_E_INVALID_ARGUMENT);
  CHECK(posmat_matrix_load("/nonexistent/posmat", 0, &m) == POSMAT_E_IO);
  // a successful call clears the message
  Matrix ok = parse("1 1\n1\n");
  CHECK(std::string(posmat_last_error()).empty());
  posmat_matrix_free(nullptr);
  posmat_graph_free(nullptr);
}

TEST_CASE("matrix handles") {
  Matrix m = parse("2 3\n1 0 1/3\n0.5 7 0\n");
  CHECK(posmat_matrix_rows(m.get()) == 2);
  CHECK(posmat_matrix_cols(m.get()) == 3);
  char* text = nullptr;
  REQUIRE(posmat_matrix_emit(m.get(), 0, &text) == POSMAT_OK);
  Matrix again = parse(text);
  char* text2 = nullptr;
  REQUIRE(posmat_matrix_emit(again.get(), 0, &text2) == POSMAT_OK);
  CHECK(std::string(text) == std::string(text2));
  posmat_string_free(text);
  posmat_string_free(text2);

  char* grid = nullptr;
  REQUIRE(posmat_matrix_emit(m.get(), 1, &grid) == POSMAT_OK);
  CHECK(std::string(grid) == "*0*\n**0\n");
  posmat_string_free(grid);

  char* js = nullptr;
  REQUIRE(posmat_matrix_json(m.get(), &js) == POSMAT_OK);
  json j = take(js);
  CHECK(j["entries"][0][2]["num"] == "1");
  CHECK(j["entries"][0][2]["den"] == "3");
  CHECK(j["entries"][1][0]["den"] == "2");
}

TEST_CASE("classification and g_k through the C interface") {
  Matrix sp = fixture_matrix("stochastic-primitive");
  char* out = nullptr;
  REQUIRE(posmat_classify_json(sp.get(), 1, &out) == POSMAT_OK);
  json c = take(out);
  CHECK(c["kind"] == "classification");
  CHECK(c["primitive"] == true);
  CHECK(c["gamma"] == 2);
  CHECK(c["mu"]["num"] == "1");
  CHECK(c["mu"]["den"] == "2");

  Matrix six = fixture_matrix("column-counts-not-gk");
  int is_gk = -1;
  REQUIRE(posmat_gk_json(six.get(), 2, &is_gk, &out) == POSMAT_OK);
  json g = take(out);
  CHECK(is_gk == 0);
  CHECK(g["counterexample"] == json::array({1, 2, 3}));
  CHECK(posmat_gk_json(six.get(), 6, &is_gk, nullptr) == POSMAT_E_OUT_OF_RANGE);

  int idx = -1;
  REQUIRE(posmat_gk_index(fixture_matrix("block-ring-9").get(), &idx) == POSMAT_OK);
  CHECK(idx == 3);

  posmat_matrix* w = nullptr;
  REQUIRE(posmat_generate_wielandt(6, &w) == POSMAT_OK);
  Matrix wm(w);
  int gamma = 0;
  REQUIRE(posmat_gamma(wm.get(), &gamma) == POSMAT_OK);
  CHECK(gamma == 26);

  const int sizes[] = {2, 2};
  posmat_matrix* pb = nullptr;
  REQUIRE(posmat_generate_periodic_block(sizes, 2, &pb) == POSMAT_OK);
  Matrix pbm(pb);
  CHECK(posmat_gamma(pbm.get(), &gamma) == POSMAT_E_NOT_PRIMITIVE);
  CHECK(std::string(posmat_last_error()).size() > 0);
  CHECK(posmat_generate_wielandt(1, &w) == POSMAT_E_INVALID_ARGUMENT);
}

TEST_CASE("caps can be raised and restored") {
  std::string text = "25 25\n";
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 25; ++j) text += j ? " 1" : "1";
    text += "\n";
  }
  Matrix big = parse(text.c_str());
  int idx = 0;
  CHECK(posmat_gk_index(big.get(), &idx) == POSMAT_E_CAP_EXCEEDED);
  CHECK(std::string(posmat_last_error()).find("--max-n") != std::string::npos);
  REQUIRE(posmat_set_max_n(25) == POSMAT_OK);
  CHECK(posmat_gk_index(big.get(), &idx) == POSMAT_OK);
  CHECK(idx == 24);
  REQUIRE(posmat_set_max_n(0) == POSMAT_OK);
  CHECK(posmat_gk_index(big.get(), &idx) == POSMAT_E_CAP_EXCEEDED);
  CHECK(posmat_set_max_n(-3) == POSMAT_E_OUT_OF_RANGE);
}

TEST_CASE("bounds table") {
  char* out = nullptr;
  REQUIRE(posmat_bounds_json(fixture_matrix("block-ring-9").get(), 3, &out) == POSMAT_OK);
  json b = take(out);
  bool saw_count = false;
  for (const auto& r : b["results"]) {
    if (r["hypotheses_met"] == true) CHECK(r["conclusion_holds"] == true);
    if (r["theorem"] == "diagonal-count") {
      saw_count = true;
      CHECK(r["bound"] == 8);
      CHECK(r["attained"] == 3);
      CHECK(r["slack"] == 5);
    }
  }
  CHECK(saw_count);
}

TEST_CASE("theorem verification through the C interface") {
  posmat_verify_args args{};
  args.n = 6;
  int verdict = -1;
  char* out = nullptr;
  REQUIRE(posmat_verify_json("wielandt", nullptr, 0, &args, &verdict, &out) == POSMAT_OK);
  json w = take(out);
  CHECK(verdict == 0);
  CHECK(w["result"]["bound"] == 26);
  CHECK(w["result"]["attained"] == 26);
  CHECK(w["result"]["slack"] == 0);

  Matrix p1 = parse("***\n0**\n***\n", 1), p2 = parse("***\n**0\n*00\n", 1), p3 = parse("0**\n0**\n*00\n", 1);
  const posmat_matrix* chain[] = {p1.get(), p2.get(), p3.get()};
  posmat_verify_args dsp{};
  dsp.k = 1;
  dsp.w = "{2}";
  dsp.variant = "head";
  REQUIRE(posmat_verify_json("diagonal-subset-product", chain, 3, &dsp, &verdict, &out) == POSMAT_OK);
  json d = take(out);
  CHECK(verdict == 1);
  CHECK(d["result"]["hypotheses_met"] == true);
  CHECK(d["result"]["conclusion_holds"] == false);

  Matrix not_gk = fixture_matrix("identity-shift-not-gk");
  const posmat_matrix* single[] = {not_gk.get()};
  posmat_verify_args k2{};
  k2.k = 2;
  REQUIRE(posmat_verify_json("identity-shift", single, 1, &k2, &verdict, &out) == POSMAT_OK);
  take(out);
  CHECK(verdict == 2);

  CHECK(posmat_verify_json("no-such-theorem", single, 1, &k2, &verdict, nullptr) == POSMAT_E_INVALID_ARGUMENT);
  dsp.variant = "sideways";
  CHECK(posmat_verify_json("diagonal-subset-product", chain, 3, &dsp, &verdict, nullptr) ==
        POSMAT_E_INVALID_ARGUMENT);
}

TEST_CASE("seeded sweeps through the C interface") {
  long violations = -1;
  char* out = nullptr;
  REQUIRE(posmat_verify_random_json("gk-girth", 50, 3, 6, 5, &violations, &out) == POSMAT_OK);
  json a = take(out);
  CHECK(violations == 0);
  REQUIRE(posmat_verify_random_json("gk-girth", 50, 3, 6, 5, &violations, &out) == POSMAT_OK);
  json b = take(out);
  CHECK(a == b);

  REQUIRE(posmat_verify_random_json("diagonal-subset-product", 200, 3, 7, 1, &violations, &out) == POSMAT_OK);
  json d = take(out);
  CHECK(violations == 1);
  CHECK(d.dump().find("105") != std::string::npos);
  CHECK(posmat_verify_random_json("gk-girth", 5, 7, 3, 1, &violations, nullptr) == POSMAT_E_OUT_OF_RANGE);
}

TEST_CASE("random generation through the C interface") {
  posmat_matrix *a = nullptr, *b = nullptr;
  REQUIRE(posmat_generate_random("stochastic", 4, 4, "1/2", "irreducible", 1, 77, &a) == POSMAT_OK);
  REQUIRE(posmat_generate_random("stochastic", 4, 4, "1/2", "irreducible", 1, 77, &b) == POSMAT_OK);
  Matrix ma(a), mb(b);
  char *ta = nullptr, *tb = nullptr;
  posmat_matrix_emit(ma.get(), 0, &ta);
  posmat_matrix_emit(mb.get(), 0, &tb);
  CHECK(std::string(ta) == std::string(tb));
  posmat_string_free(ta);
  posmat_string_free(tb);
  posmat_matrix* c = nullptr;
  CHECK(posmat_generate_random("bogus", 4, 4, "1/2", "none", 1, 1, &c) == POSMAT_E_INVALID_ARGUMENT);
  CHECK(posmat_generate_random("pattern", 6, 6, "1/100", "fully-indecomposable", 1, 1, &c) ==
        POSMAT_E_REJECTION_BUDGET);
}

TEST_CASE("limits") {
  int converged = -1;
  char* out = nullptr;
  REQUIRE(posmat_limit_json(fixture_matrix("stochastic-primitive").get(), "1/1000000", 200, &converged, &out) ==
          POSMAT_OK);
  json l = take(out);
  CHECK(converged == 1);
  CHECK(std::abs(l["approx"][0][0].get<double>() - 1.0 / 3) < 1e-5);
  Matrix swap = parse("2 2\n0 1\n1 0\n");
  REQUIRE(posmat_limit_json(swap.get(), "1/1000", 20, &converged, &out) == POSMAT_OK);
  take(out);
  CHECK(converged == 0);
  Matrix bad = parse("2 2\n1 1\n0 1\n");
  CHECK(posmat_limit_json(bad.get(), "1/1000", 20, &converged, nullptr) == POSMAT_E_NOT_STOCHASTIC);
}

TEST_CASE("graphs through the C interface") {
  GraphPtr pet = fixture_graph("petersen");
  CHECK(posmat_graph_order(pet.get()) == 10);
  int kappa = -1, connected = -1, agree = -1;
  char* out = nullptr;
  REQUIRE(posmat_graph_kappa_json(pet.get(), &kappa, &out) == POSMAT_OK);
  take(out);
  CHECK(kappa == 3);
  REQUIRE(posmat_graph_check_k_json(pet.get(), 3, &connected, nullptr) == POSMAT_OK);
  CHECK(connected == 1);
  REQUIRE(posmat_graph_check_k_json(pet.get(), 4, &connected, &out) == POSMAT_OK);
  json c = take(out);
  CHECK(connected == 0);
  REQUIRE(posmat_graph_audit_json(pet.get(), 0, &agree, &out) == POSMAT_OK);
  take(out);
  CHECK(agree == 1);

  posmat_graph* g = nullptr;
  REQUIRE(posmat_graph_parse("3\n1 2\n2 3\n", &g) == POSMAT_OK);
  GraphPtr path(g);
  char* text = nullptr;
  REQUIRE(posmat_graph_emit(path.get(), &text) == POSMAT_OK);
  posmat_graph* g2 = nullptr;
  REQUIRE(posmat_graph_parse(text, &g2) == POSMAT_OK);
  GraphPtr path2(g2);
  char* text2 = nullptr;
  REQUIRE(posmat_graph_emit(path2.get(), &text2) == POSMAT_OK);
  CHECK(std::string(text) == std::string(text2));
  posmat_string_free(text);
  posmat_string_free(text2);
  CHECK(posmat_graph_parse("2\n1 3\n", &g) == POSMAT_E_PARSE);
  CHECK(posmat_graph_check_k_json(path.get(), 3, &connected, nullptr) == POSMAT_E_OUT_OF_RANGE);
}

TEST_CASE("fixtures through the C interface") {
  char* out = nullptr;
  REQUIRE(posmat_fixture_list_json(&out) == POSMAT_OK);
  json l = take(out);
  CHECK(l["fixtures"].size() == 14);
  int all = -1;
  REQUIRE(posmat_fixture_check_json(&all, &out) == POSMAT_OK);
  json c = take(out);
  CHECK(all == 1);
  posmat_matrix* m = nullptr;
  posmat_graph* g = nullptr;
  CHECK(posmat_fixture("nope", &m, &g) == POSMAT_E_INVALID_ARGUMENT);
  CHECK(std::string(posmat_last_error()).find("petersen") != std::string::npos);
}
