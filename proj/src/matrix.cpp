#include "posmat/matrix.hpp"

#include <bit>
#include <string>

#include "posmat/error.hpp"

namespace posmat {

namespace {

void require_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0)
    throw Error(ErrorCode::invalid_argument, "matrix dimensions must be positive");
}

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_index_sets(const IndexSet& rows, const IndexSet& cols, std::size_t r, std::size_t c) {
  if (rows.universe() != r || cols.universe() != c)
    throw Error(ErrorCode::out_of_range, "index sets do not match a " + dims(r, c) + " matrix");
  if (rows.empty() || cols.empty()) throw Error(ErrorCode::empty_index_set, "empty index set");
}

}  // namespace

// ---- PatternMatrix

PatternMatrix::PatternMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
  require_dims(rows, cols);
  bits_.assign(rows_ * wpr_, 0);
}

PatternMatrix PatternMatrix::identity(std::size_t n) {
  PatternMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p.set(i, i);
  return p;
}

PatternMatrix PatternMatrix::ones(std::size_t rows, std::size_t cols) {
  PatternMatrix p(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) p.set(i, j);
  return p;
}

PatternMatrix PatternMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::invalid_argument, "matrix dimensions must be positive");
  PatternMatrix p(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != p.cols_) throw Error(ErrorCode::dimension_mismatch, "ragged rows");
    for (std::size_t j = 0; j < p.cols_; ++j)
      if (rows[i][j] != 0) p.set(i, j);
  }
  return p;
}

PatternMatrix PatternMatrix::from_row_masks(std::size_t cols, const std::vector<std::uint64_t>& masks) {
  if (cols > 64) throw Error(ErrorCode::invalid_argument, "row masks need cols <= 64");
  PatternMatrix p(masks.size(), cols);
  std::uint64_t keep = cols == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
  for (std::size_t i = 0; i < masks.size(); ++i) p.bits_[i] = masks[i] & keep;
  return p;
}

void PatternMatrix::set(std::size_t i, std::size_t j, bool v) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::out_of_range, "entry outside " + dims(rows_, cols_));
  auto& w = bits_[i * wpr_ + j / 64];
  auto bit = std::uint64_t{1} << (j % 64);
  if (v)
    w |= bit;
  else
    w &= ~bit;
}

IndexSet PatternMatrix::row(std::size_t i) const {
  IndexSet s(cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    if (get(i, j)) s.insert(j);
  return s;
}

IndexSet PatternMatrix::column(std::size_t j) const {
  IndexSet s(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    if (get(i, j)) s.insert(i);
  return s;
}

std::size_t PatternMatrix::row_count(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < wpr_; ++w) c += std::popcount(bits_[i * wpr_ + w]);
  return c;
}

std::size_t PatternMatrix::nonzeros() const {
  std::size_t c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

std::uint64_t PatternMatrix::row_mask(std::size_t i) const {
  if (cols_ > 64) throw Error(ErrorCode::invalid_argument, "row_mask needs cols <= 64");
  return bits_[i];
}

std::vector<std::uint64_t> PatternMatrix::row_masks() const {
  if (cols_ > 64) throw Error(ErrorCode::invalid_argument, "row_masks needs cols <= 64");
  return bits_;
}

std::vector<std::uint64_t> PatternMatrix::column_masks() const {
  if (rows_ > 64) throw Error(ErrorCode::invalid_argument, "column_masks needs rows <= 64");
  std::vector<std::uint64_t> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) out[j] |= std::uint64_t{1} << i;
  return out;
}

PatternMatrix PatternMatrix::transpose() const {
  PatternMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

// ---- NonnegMatrix

NonnegMatrix::NonnegMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_dims(rows, cols);
  e_.assign(rows * cols, Rational(0));
}

NonnegMatrix NonnegMatrix::identity(std::size_t n) {
  NonnegMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
  return m;
}

NonnegMatrix NonnegMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::invalid_argument, "matrix dimensions must be positive");
  NonnegMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::dimension_mismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

NonnegMatrix NonnegMatrix::from_pattern(const PatternMatrix& p) {
  NonnegMatrix m(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p.get(i, j)) m.e_[i * m.cols_ + j] = 1;
  return m;
}

void NonnegMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::out_of_range, "entry outside " + dims(rows_, cols_));
  if (sgn(v) < 0)
    throw Error(ErrorCode::negative_entry, "negative entry " + v.get_str() + " at (" +
                                               std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  e_[i * cols_ + j] = v;
  e_[i * cols_ + j].canonicalize();
}

NonnegMatrix NonnegMatrix::transpose() const {
  NonnegMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = at(i, j);
  return t;
}

NonnegMatrix NonnegMatrix::operator*(const NonnegMatrix& o) const {
  if (cols_ != o.rows_)
    throw Error(ErrorCode::dimension_mismatch, "cannot multiply " + dims(rows_, cols_) + " by " + dims(o.rows_, o.cols_));
  NonnegMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (sgn(o.at(k, j)) != 0) r.e_[i * o.cols_ + j] += a * o.at(k, j);
    }
  return r;
}

NonnegMatrix NonnegMatrix::operator+(const NonnegMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorCode::dimension_mismatch, "cannot add " + dims(rows_, cols_) + " and " + dims(o.rows_, o.cols_));
  NonnegMatrix r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

// ---- StochasticMatrix

bool is_stochastic(const NonnegMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j);
    if (s != 1) return false;
  }
  return true;
}

StochasticMatrix::StochasticMatrix(NonnegMatrix m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m_.cols(); ++j) s += m_.at(i, j);
    if (s != 1)
      throw Error(ErrorCode::not_stochastic,
                  "row " + std::to_string(i + 1) + " sums to " + s.get_str() + ", not 1");
  }
}

// ---- free functions

PatternMatrix indicator(const NonnegMatrix& m) {
  PatternMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m.at(i, j)) > 0) p.set(i, j);
  return p;
}

bool has_pattern(const NonnegMatrix& m, const PatternMatrix& b) {
  if (m.rows() != b.rows() || m.cols() != b.cols())
    throw Error(ErrorCode::dimension_mismatch, "pattern is " + dims(b.rows(), b.cols()) +
                                                   ", matrix is " + dims(m.rows(), m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (b.get(i, j) && sgn(m.at(i, j)) == 0) return false;
  return true;
}

PatternMatrix submatrix(const PatternMatrix& p, const IndexSet& rows, const IndexSet& cols) {
  require_index_sets(rows, cols, p.rows(), p.cols());
  auto rs = rows.members();
  auto cs = cols.members();
  PatternMatrix s(rs.size(), cs.size());
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b)
      if (p.get(rs[a], cs[b])) s.set(a, b);
  return s;
}

NonnegMatrix submatrix(const NonnegMatrix& p, const IndexSet& rows, const IndexSet& cols) {
  require_index_sets(rows, cols, p.rows(), p.cols());
  auto rs = rows.members();
  auto cs = cols.members();
  NonnegMatrix s(rs.size(), cs.size());
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) s.set(a, b, p.at(rs[a], cs[b]));
  return s;
}

PatternMatrix bool_product(const PatternMatrix& a, const PatternMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::dimension_mismatch, "cannot multiply " + dims(a.rows(), a.cols()) + " by " +
                                                   dims(b.rows(), b.cols()));
  PatternMatrix r(a.rows(), b.cols());
  const std::size_t wa = a.words_per_row(), wb = b.words_per_row();
  std::vector<std::uint64_t> acc(wb);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::uint64_t* ar = a.row_words(i);
    for (std::size_t w = 0; w < wa; ++w) {
      std::uint64_t x = ar[w];
      while (x) {
        std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(x));
        x &= x - 1;
        const std::uint64_t* br = b.row_words(k);
        for (std::size_t v = 0; v < wb; ++v) acc[v] |= br[v];
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j)
      if ((acc[j / 64] >> (j % 64)) & 1u) r.set(i, j);
  }
  return r;
}

PatternMatrix bool_power(const PatternMatrix& a, long e) {
  if (!a.square()) throw Error(ErrorCode::dimension_mismatch, "power of a non-square matrix");
  if (e < 1) throw Error(ErrorCode::invalid_argument, "exponent must be >= 1");
  PatternMatrix result = PatternMatrix::identity(a.rows());
  PatternMatrix base = a;
  while (e > 0) {
    if (e & 1) result = bool_product(result, base);
    e >>= 1;
    if (e) base = bool_product(base, base);
  }
  return result;
}

PatternMatrix with_identity(const PatternMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::dimension_mismatch, "I + P needs a square matrix");
  PatternMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) r.set(i, i);
  return r;
}

PatternMatrix chain_product(const std::vector<PatternMatrix>& ps) {
  if (ps.empty()) throw Error(ErrorCode::invalid_argument, "empty product");
  PatternMatrix r = ps[0];
  for (std::size_t l = 1; l < ps.size(); ++l) r = bool_product(r, ps[l]);
  return r;
}

bool is_row_allowable(const PatternMatrix& p) {
  for (std::size_t i = 0; i < p.rows(); ++i) {
    bool any = false;
    for (std::size_t w = 0; w < p.words_per_row() && !any; ++w) any = p.row_words(i)[w] != 0;
    if (!any) return false;
  }
  return true;
}

bool is_column_allowable(const PatternMatrix& p) { return is_row_allowable(p.transpose()); }

bool is_positive(const PatternMatrix& p) { return p.nonzeros() == p.rows() * p.cols(); }

IndexSet positive_columns(const PatternMatrix& p) {
  IndexSet s = IndexSet::full(p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) s = s & p.row(i);
  return s;
}

IndexSet positive_diagonal(const PatternMatrix& p) {
  if (!p.square()) throw Error(ErrorCode::dimension_mismatch, "diagonal of a non-square matrix");
  IndexSet s(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (p.get(i, i)) s.insert(i);
  return s;
}

}  // namespace posmat
