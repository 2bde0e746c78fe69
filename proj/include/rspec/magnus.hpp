#pragma once
//
// Magnus embedding x_i |-> 1 + X_i of the free group into the degree-
// truncated free associative ring Z<X_1..X_r>/(degree > c). Serves as an
// oracle for the induced layer matrices: it never touches the Hall
// rewriting in freelie, only the list of Hall words.
//

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rspec/intmat.hpp"

namespace rspec::magnus {

using intmat::Matrix;

// Generator indices are 1-based. A word over generators is stored as the
// sequence of indices; the empty word is the unit monomial.
using Monomial = std::vector<int>;

class TruncatedSeries {
 public:
  TruncatedSeries(int rank, int cutoff);  // zero series
  static TruncatedSeries one(int rank, int cutoff);

  int rank() const { return rank_; }
  int cutoff() const { return cutoff_; }

  const Integer& coefficient(std::span<const int> word) const;
  Integer& coefficient(std::span<const int> word);
  // Coefficients of all words of length d, in base-r order (first letter
  // most significant).
  std::span<const Integer> homogeneous(int d) const;
  std::span<Integer> homogeneous(int d);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
  friend TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v);
  friend TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v);

 private:
  std::size_t offset(int d) const { return offsets_[static_cast<std::size_t>(d)]; }
  std::size_t index(std::span<const int> word) const;

  int rank_;
  int cutoff_;
  std::vector<std::size_t> offsets_;  // offsets_[d] = first index of length-d words
  std::vector<Integer> coeffs_;

  friend TruncatedSeries multiply(const TruncatedSeries& u, const TruncatedSeries& v);
};

struct Letter {
  int generator = 1;  // 1-based
  int exponent = 1;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using GroupWord = std::vector<Letter>;

TruncatedSeries unit_of_generator(int generator, int rank, int cutoff);
TruncatedSeries multiply(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries invert(const TruncatedSeries& u);
// u^{-1} v^{-1} u v
TruncatedSeries group_commutator(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries evaluate_group_word(const GroupWord& w, int rank, int cutoff);

// x_1^{a_i1} x_2^{a_i2} ... x_r^{a_ir}: the default lift of row i.
GroupWord lift_word(const Matrix& a, std::size_t row);

// Layer matrix computed through the embedding with the default lifts.
Matrix layer_matrix_via_magnus(const Matrix& a, int degree);

// Same, with explicit lift words for the generators; lifts[i] must
// abelianize to row i of a.
Matrix layer_matrix_via_magnus(const Matrix& a, int degree, std::span<const GroupWord> lifts);

// Coefficients of the Lie polynomial of the d-th Hall word (brackets
// expanded as UV - VU) in the word basis of length d.
IntVector hall_word_tensor(int rank, int degree, std::size_t position);

}  // namespace rspec::magnus
