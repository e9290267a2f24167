#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "posmat/generators.hpp"
#include "posmat/matrix.hpp"

namespace support {

using posmat::NonnegMatrix;
using posmat::PatternMatrix;
using posmat::Rational;

// Rows of '*' and '0'.
inline PatternMatrix pat(const std::vector<std::string>& rows) {
  std::vector<std::vector<int>> r;
  for (const auto& s : rows) {
    std::vector<int> v;
    for (char c : s) v.push_back(c == '*' ? 1 : 0);
    r.push_back(v);
  }
  return PatternMatrix::from_rows(r);
}

inline NonnegMatrix num(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> v;
    for (int x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return NonnegMatrix::from_rows(r);
}

inline oracle::Grid grid(const PatternMatrix& p) {
  oracle::Grid g = oracle::zeros(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) g[i][j] = p.get(i, j);
  return g;
}

inline oracle::QGrid qgrid(const NonnegMatrix& m) {
  oracle::QGrid g(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j);
  return g;
}

// Pattern number `code` among the 2^(n*n) patterns of order n.
inline PatternMatrix from_code(std::size_t n, std::uint64_t code) {
  PatternMatrix p(n, n);
  for (std::size_t b = 0; b < n * n; ++b)
    if (code >> b & 1) p.set(b / n, b % n);
  return p;
}

inline PatternMatrix random_square(posmat::Rng& rng, std::size_t n) {
  Rational d(rng.between(1, 9), 10);
  return posmat::random_pattern(static_cast<int>(n), static_cast<int>(n), d, rng);
}

inline NonnegMatrix random_numeric(posmat::Rng& rng, std::size_t r, std::size_t c) {
  NonnegMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.below(2)) m.set(i, j, Rational(static_cast<long>(rng.between(1, 20)), static_cast<long>(rng.between(1, 7))));
  return m;
}

inline NonnegMatrix random_stochastic(posmat::Rng& rng, std::size_t n) {
  posmat::RandomSpec s;
  s.kind = posmat::RandomKind::stochastic;
  s.rows = s.cols = static_cast<int>(n);
  s.density = Rational(rng.between(2, 9), 10);
  return posmat::random_matrix(s, rng);
}

}  // namespace support
