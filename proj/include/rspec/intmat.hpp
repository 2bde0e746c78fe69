#pragma once
//
// Exact integer matrix algebra over GMP integers.
//
// Convention: vectors are rows and matrices act on the right, x |-> x * m.
// Row i of a matrix is the image of the i-th basis vector.
//

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rspec/errors.hpp"

namespace rspec {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

namespace intmat {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<IntVector>& rows);
  static Matrix diagonal(std::span<const Integer> entries);
  // Block-diagonal matrix assembled from square blocks.
  static Matrix block_diagonal(std::span<const Matrix> blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  IntVector row_vector(std::size_t i) const;
  IntVector column_vector(std::size_t j) const;

  Matrix transposed() const;
  Integer trace() const;
  bool is_zero() const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Integer& scalar);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Integer& s) { return a *= s; }
  friend Matrix operator*(const Integer& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

  // Lexicographic comparison of shape, then entries in row-major order.
  friend bool lex_less(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// x * m for a row vector x.
IntVector row_times(std::span<const Integer> x, const Matrix& m);

// Text format: rows separated by ';', entries by ','; whitespace ignored.
Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& m);

// Either a positive integer or INFINITE.
class IndexValue {
 public:
  IndexValue() = default;  // 1
  explicit IndexValue(Integer value);
  static IndexValue infinite();

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  // Precondition: finite.
  const Integer& value() const;
  // Decimal value or the literal "infinity".
  std::string to_string() const;

  // INFINITE is absorbing.
  friend IndexValue operator*(const IndexValue& a, const IndexValue& b);
  friend bool operator==(const IndexValue& a, const IndexValue& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const IndexValue& v) { return os << v.to_string(); }

 private:
  std::optional<Integer> value_ = Integer(1);
};

struct HermiteForm {
  Matrix h;  // row echelon, positive pivots, entries above pivots in [0, pivot)
  Matrix u;  // unimodular, u * m == h
  std::size_t rank = 0;
};

struct SmithForm {
  Matrix d;  // diagonal, d_1 | d_2 | ... , nonnegative
  Matrix u;  // unimodular
  Matrix v;  // unimodular, u * m * v == d
};

struct IntegerSolution {
  IntVector particular;          // x with x * m == b
  std::vector<IntVector> kernel;  // basis of { x : x * m == 0 }
};

// Fraction-free (Bareiss) elimination.
Integer determinant(const Matrix& m);

HermiteForm hermite_form(const Matrix& m);
SmithForm smith_form(const Matrix& m);

// [Z^n : lattice spanned by m]; |det m| or INFINITE when det m == 0.
IndexValue lattice_index(const Matrix& m);

// Solves x * m == b over the integers (row convention).
std::optional<IntegerSolution> solve_integer(const Matrix& m, std::span<const Integer> b);

// True iff v - u lies in the image of x |-> x * m, i.e. the lattice spanned
// by the rows of m. With m = phi - id this is twisted conjugacy in Z^n.
bool abelian_twisted_equivalent(const Matrix& m, std::span<const Integer> u,
                                std::span<const Integer> v);

bool is_unimodular(const Matrix& m);

// ---- Independent oracles -------------------------------------------------

// Laplace expansion along the first row. Capped at 8x8.
Integer determinant_cofactor(const Matrix& m);

inline constexpr long kDefaultCosetBound = 64;

// Counts cosets of the column lattice of m by enumerating the subgroup
// generated by the columns inside (Z / 2|det m|)^n. Uses only the cofactor
// determinant to pick the modulus.
IndexValue coset_count_oracle(const Matrix& m, long det_bound = kDefaultCosetBound);

}  // namespace intmat
}  // namespace rspec
