#include "posmat/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "posmat/error.hpp"

namespace posmat {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::parse_error, msg); }

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.emplace_back(no, line);
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::size_t parse_count(const std::string& tok, int line, const char* what) {
  if (!all_digits(tok) || tok.size() > 9)
    parse_fail("line " + std::to_string(line) + ": expected " + what + ", got '" + tok + "'");
  return static_cast<std::size_t>(std::stoul(tok));
}

}  // namespace

Rational parse_rational(const std::string& tok) {
  std::string s = tok;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  Rational q;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) parse_fail("bad rational '" + tok + "'");
    mpz_class den(b);
    if (den == 0) parse_fail("zero denominator in '" + tok + "'");
    q = Rational(mpz_class(a), den);
  } else if (dot != std::string::npos) {
    std::string a = s.substr(0, dot), b = s.substr(dot + 1);
    if ((a.empty() && b.empty()) || (!a.empty() && !all_digits(a)) || (!b.empty() && !all_digits(b)))
      parse_fail("bad decimal '" + tok + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, b.size());
    mpz_class num(a.empty() ? "0" : a);
    num = num * scale + mpz_class(b.empty() ? "0" : b);
    q = Rational(num, scale);
  } else {
    if (!all_digits(s)) parse_fail("bad number '" + tok + "'");
    q = Rational(mpz_class(s));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

NonnegMatrix parse_matrix(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) parse_fail("empty matrix file");
  auto head = tokens(lines[0].second);
  if (head.size() != 2) parse_fail("line " + std::to_string(lines[0].first) + ": expected 'ROWS COLS'");
  std::size_t rows = parse_count(head[0], lines[0].first, "row count");
  std::size_t cols = parse_count(head[1], lines[0].first, "column count");
  if (rows == 0 || cols == 0) parse_fail("matrix dimensions must be positive");
  if (lines.size() - 1 != rows)
    parse_fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1));
  NonnegMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto [no, line] = lines[i + 1];
    auto t = tokens(line);
    if (t.size() != cols)
      parse_fail("line " + std::to_string(no) + ": expected " + std::to_string(cols) + " entries, found " +
                 std::to_string(t.size()));
    for (std::size_t j = 0; j < cols; ++j) {
      Rational v;
      try {
        v = parse_rational(t[j]);
      } catch (const Error& e) {
        parse_fail("line " + std::to_string(no) + ": " + e.what());
      }
      if (sgn(v) < 0)
        throw Error(ErrorCode::negative_entry, "line " + std::to_string(no) + ": negative entry " + t[j]);
      m.set(i, j, v);
    }
  }
  return m;
}

std::string emit_matrix(const NonnegMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_rational(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

PatternMatrix parse_pattern_grid(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) parse_fail("empty pattern file");
  std::size_t first = 0;
  std::size_t want_rows = 0, want_cols = 0;
  auto head = tokens(lines[0].second);
  if (head.size() == 2 && all_digits(head[0]) && all_digits(head[1]) && head[0] != "0" && head[1] != "0") {
    want_rows = parse_count(head[0], lines[0].first, "row count");
    want_cols = parse_count(head[1], lines[0].first, "column count");
    first = 1;
  }
  std::vector<std::string> rows;
  for (std::size_t l = first; l < lines.size(); ++l) {
    std::string r;
    for (char c : lines[l].second) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c != '*' && c != '0')
        parse_fail("line " + std::to_string(lines[l].first) + ": pattern cells must be '*' or '0'");
      r += c;
    }
    if (!rows.empty() && r.size() != rows[0].size())
      parse_fail("line " + std::to_string(lines[l].first) + ": row length differs from the first row");
    rows.push_back(r);
  }
  if (rows.empty()) parse_fail("pattern has no rows");
  if (first == 1 && (rows.size() != want_rows || rows[0].size() != want_cols))
    parse_fail("pattern does not match its header");
  PatternMatrix p(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == '*') p.set(i, j);
  return p;
}

std::string emit_pattern_grid(const PatternMatrix& p) {
  std::string out;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) out += p.get(i, j) ? '*' : '0';
    out += '\n';
  }
  return out;
}

Graph parse_graph(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) parse_fail("empty graph file");
  auto head = tokens(lines[0].second);
  if (head.size() != 1) parse_fail("line " + std::to_string(lines[0].first) + ": expected the vertex count");
  std::size_t n = parse_count(head[0], lines[0].first, "vertex count");
  if (n == 0) parse_fail("graph needs at least one vertex");
  Graph g(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    auto t = tokens(lines[l].second);
    int no = lines[l].first;
    if (t.size() != 2) parse_fail("line " + std::to_string(no) + ": expected 'u v'");
    std::size_t u = parse_count(t[0], no, "vertex"), v = parse_count(t[1], no, "vertex");
    if (u < 1 || u > n || v < 1 || v > n)
      parse_fail("line " + std::to_string(no) + ": vertex outside 1.." + std::to_string(n));
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

std::string emit_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

IndexSet parse_index_set(const std::string& text, std::size_t universe) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') parse_fail("index set must look like {1,2,3}");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::size_t> members;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!all_digits(item) || item.size() > 9) parse_fail("bad index '" + item + "' in " + text);
    members.push_back(static_cast<std::size_t>(std::stoul(item)));
  }
  if (!body.empty() && body.back() == ',') parse_fail("trailing comma in " + text);
  return IndexSet::from_one_based(universe, members);
}

Partition parse_partition(const std::string& text, std::size_t universe) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "singletons") return Partition::singletons(universe);
  if (s == "full") return Partition::full(universe);
  std::vector<IndexSet> blocks;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '{') parse_fail("partition must look like {1,2}{3}");
    auto close = s.find('}', pos);
    if (close == std::string::npos) parse_fail("unclosed block in " + text);
    blocks.push_back(parse_index_set(s.substr(pos, close - pos + 1), universe));
    pos = close + 1;
  }
  if (blocks.empty()) parse_fail("empty partition literal");
  return Partition(universe, std::move(blocks));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace posmat
