#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "posmat/index_set.hpp"

namespace posmat {

using Rational = mpq_class;

// 0/1 matrix over the boolean semiring, one bitset per row.
class PatternMatrix {
 public:
  PatternMatrix() = default;
  PatternMatrix(std::size_t rows, std::size_t cols);

  static PatternMatrix identity(std::size_t n);
  static PatternMatrix ones(std::size_t rows, std::size_t cols);
  static PatternMatrix from_rows(const std::vector<std::vector<int>>& rows);
  // Square or rectangular with cols <= 64; bit j of masks[i] is entry (i,j).
  static PatternMatrix from_row_masks(std::size_t cols, const std::vector<std::uint64_t>& masks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v = true);

  IndexSet row(std::size_t i) const;
  IndexSet column(std::size_t j) const;
  std::size_t row_count(std::size_t i) const;
  std::size_t nonzeros() const;
  // Requires cols <= 64.
  std::uint64_t row_mask(std::size_t i) const;
  std::vector<std::uint64_t> row_masks() const;
  // Requires rows <= 64; bit i of result[j] is entry (i,j).
  std::vector<std::uint64_t> column_masks() const;

  const std::uint64_t* row_words(std::size_t i) const { return bits_.data() + i * wpr_; }
  std::size_t words_per_row() const { return wpr_; }

  PatternMatrix transpose() const;

  bool operator==(const PatternMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }
  bool operator!=(const PatternMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Dense matrix of exact nonnegative rationals.
class NonnegMatrix {
 public:
  NonnegMatrix() = default;
  NonnegMatrix(std::size_t rows, std::size_t cols);

  static NonnegMatrix identity(std::size_t n);
  static NonnegMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static NonnegMatrix from_pattern(const PatternMatrix& p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& v);

  NonnegMatrix transpose() const;
  NonnegMatrix operator*(const NonnegMatrix& o) const;
  NonnegMatrix operator+(const NonnegMatrix& o) const;

  bool operator==(const NonnegMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const NonnegMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

// A NonnegMatrix whose rows each sum to exactly 1.
class StochasticMatrix {
 public:
  explicit StochasticMatrix(NonnegMatrix m);
  const NonnegMatrix& matrix() const { return m_; }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  StochasticMatrix operator*(const StochasticMatrix& o) const { return StochasticMatrix(m_ * o.m_); }

 private:
  NonnegMatrix m_;
};

bool is_stochastic(const NonnegMatrix& m);

PatternMatrix indicator(const NonnegMatrix& m);
bool has_pattern(const NonnegMatrix& m, const PatternMatrix& b);

PatternMatrix submatrix(const PatternMatrix& p, const IndexSet& rows, const IndexSet& cols);
NonnegMatrix submatrix(const NonnegMatrix& p, const IndexSet& rows, const IndexSet& cols);

PatternMatrix bool_product(const PatternMatrix& a, const PatternMatrix& b);
PatternMatrix bool_power(const PatternMatrix& a, long e);
PatternMatrix with_identity(const PatternMatrix& a);  // I + A
PatternMatrix chain_product(const std::vector<PatternMatrix>& ps);

bool is_row_allowable(const PatternMatrix& p);
bool is_column_allowable(const PatternMatrix& p);
bool is_positive(const PatternMatrix& p);
IndexSet positive_columns(const PatternMatrix& p);
IndexSet positive_diagonal(const PatternMatrix& p);

inline bool is_row_allowable(const NonnegMatrix& p) { return is_row_allowable(indicator(p)); }
inline bool is_column_allowable(const NonnegMatrix& p) { return is_column_allowable(indicator(p)); }
inline bool is_positive(const NonnegMatrix& p) { return is_positive(indicator(p)); }
inline IndexSet positive_columns(const NonnegMatrix& p) { return positive_columns(indicator(p)); }

}  // namespace posmat
