#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "rspec/intmat.hpp"

namespace rspec::intmat {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<IntVector>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const Integer> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::block_diagonal(std::span<const Matrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.square()) throw DimensionError("block_diagonal: blocks must be square");
    n += b.rows();
  }
  Matrix m(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return m;
}

IntVector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

IntVector Matrix::column_vector(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Integer Matrix::trace() const {
  if (!square()) throw DimensionError("trace of non-square matrix");
  Integer t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void Matrix::negate_row(std::size_t i) {
  for (auto& x : row(i)) x = -x;
}

void Matrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Integer& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << format_matrix(m); }

bool lex_less(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                      b.data_.end());
}

IntVector row_times(std::span<const Integer> x, const Matrix& m) {
  if (x.size() != m.rows()) throw DimensionError("row vector length differs from matrix rows");
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

Matrix parse_matrix(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) throw ParseError("empty matrix text");

  std::vector<IntVector> rows;
  std::stringstream row_stream(compact);
  std::string row_text;
  while (std::getline(row_stream, row_text, ';')) {
    IntVector row;
    std::stringstream entry_stream(row_text);
    std::string entry;
    while (std::getline(entry_stream, entry, ',')) {
      std::size_t start = (entry.size() > 0 && (entry[0] == '-' || entry[0] == '+')) ? 1 : 0;
      if (entry.size() == start ||
          !std::all_of(entry.begin() + static_cast<long>(start), entry.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad matrix entry '" + entry + "'");
      if (entry[0] == '+') entry.erase(0, 1);
      row.emplace_back(entry, 10);
    }
    if (row.empty() || (!row_text.empty() && row_text.back() == ','))
      throw ParseError("empty matrix entry in row '" + row_text + "'");
    rows.push_back(std::move(row));
  }
  if (compact.back() == ';') throw ParseError("trailing ';' in matrix text");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("rows of unequal length");
  return Matrix::from_rows(rows);
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
  }
  return out;
}

IndexValue::IndexValue(Integer value) : value_(std::move(value)) {
  if (*value_ < 1) throw DomainError("finite index must be positive");
}

IndexValue IndexValue::infinite() {
  IndexValue v;
  v.value_.reset();
  return v;
}

const Integer& IndexValue::value() const {
  if (!value_) throw DomainError("index is infinite");
  return *value_;
}

std::string IndexValue::to_string() const { return value_ ? value_->get_str() : "infinity"; }

IndexValue operator*(const IndexValue& a, const IndexValue& b) {
  if (a.is_infinite() || b.is_infinite()) return IndexValue::infinite();
  return IndexValue(a.value() * b.value());
}

}  // namespace rspec::intmat
