#include "rspec/magnus.hpp"

namespace rspec::magnus {

TruncatedSeries::TruncatedSeries(int rank, int cutoff) : rank_(rank), cutoff_(cutoff) {
  if (rank < 1) throw DomainError("truncated series: rank must be positive");
  if (cutoff < 0) throw DomainError("truncated series: cutoff must be nonnegative");
  std::size_t total = 0;
  std::size_t block = 1;
  for (int d = 0; d <= cutoff; ++d) {
    offsets_.push_back(total);
    total += block;
    block *= static_cast<std::size_t>(rank);
  }
  offsets_.push_back(total);
  coeffs_.resize(total);
}

TruncatedSeries TruncatedSeries::one(int rank, int cutoff) {
  TruncatedSeries s(rank, cutoff);
  s.coeffs_[0] = 1;
  return s;
}

std::size_t TruncatedSeries::index(std::span<const int> word) const {
  if (static_cast<int>(word.size()) > cutoff_) throw DimensionError("word longer than cutoff");
  std::size_t idx = 0;
  for (int g : word) {
    if (g < 1 || g > rank_) throw DomainError("generator index outside rank");
    idx = idx * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(g - 1);
  }
  return offset(static_cast<int>(word.size())) + idx;
}

const Integer& TruncatedSeries::coefficient(std::span<const int> word) const { return coeffs_[index(word)]; }
Integer& TruncatedSeries::coefficient(std::span<const int> word) { return coeffs_[index(word)]; }

std::span<const Integer> TruncatedSeries::homogeneous(int d) const {
  return {coeffs_.data() + offset(d), offset(d + 1) - offset(d)};
}

std::span<Integer> TruncatedSeries::homogeneous(int d) {
  return {coeffs_.data() + offset(d), offset(d + 1) - offset(d)};
}

TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v) {
  if (u.rank_ != v.rank_ || u.cutoff_ != v.cutoff_) throw DimensionError("series rank/cutoff mismatch");
  TruncatedSeries s = u;
  for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] += v.coeffs_[k];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v) {
  if (u.rank_ != v.rank_ || u.cutoff_ != v.cutoff_) throw DimensionError("series rank/cutoff mismatch");
  TruncatedSeries s = u;
  for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] -= v.coeffs_[k];
  return s;
}

TruncatedSeries unit_of_generator(int generator, int rank, int cutoff) {
  if (generator < 1 || generator > rank) throw DomainError("generator index outside rank");
  TruncatedSeries s = TruncatedSeries::one(rank, cutoff);
  if (cutoff >= 1) {
    const int w[1] = {generator};
    s.coefficient(w) = 1;
  }
  return s;
}

TruncatedSeries multiply(const TruncatedSeries& u, const TruncatedSeries& v) {
  if (u.rank_ != v.rank_ || u.cutoff_ != v.cutoff_) throw DimensionError("series rank/cutoff mismatch");
  TruncatedSeries out(u.rank_, u.cutoff_);
  const std::size_t r = static_cast<std::size_t>(u.rank_);
  for (int p = 0; p <= u.cutoff_; ++p) {
    const std::size_t np = u.offset(p + 1) - u.offset(p);
    for (int q = 0; p + q <= u.cutoff_; ++q) {
      const std::size_t nq = v.offset(q + 1) - v.offset(q);
      std::size_t shift = 1;
      for (int k = 0; k < q; ++k) shift *= r;
      const std::size_t base = out.offset(p + q);
      for (std::size_t i = 0; i < np; ++i) {
        const Integer& cu = u.coeffs_[u.offset(p) + i];
        if (sgn(cu) == 0) continue;
        for (std::size_t j = 0; j < nq; ++j) {
          const Integer& cv = v.coeffs_[v.offset(q) + j];
          if (sgn(cv) == 0) continue;
          out.coeffs_[base + i * shift + j] += cu * cv;
        }
      }
    }
  }
  return out;
}

TruncatedSeries invert(const TruncatedSeries& u) {
  if (u.coefficient(std::span<const int>{}) != 1)
    throw DomainError("invert: constant term must be 1");
  // (1 + n)^{-1} = sum_k (-n)^k, n nilpotent of order cutoff + 1
  TruncatedSeries one = TruncatedSeries::one(u.rank(), u.cutoff());
  TruncatedSeries minus_n = one - u;
  TruncatedSeries result = one;
  TruncatedSeries power = one;
  for (int k = 1; k <= u.cutoff(); ++k) {
    power = multiply(power, minus_n);
    result = result + power;
  }
  return result;
}

TruncatedSeries group_commutator(const TruncatedSeries& u, const TruncatedSeries& v) {
  return multiply(multiply(invert(u), invert(v)), multiply(u, v));
}

TruncatedSeries evaluate_group_word(const GroupWord& w, int rank, int cutoff) {
  TruncatedSeries result = TruncatedSeries::one(rank, cutoff);
  for (const Letter& l : w) {
    if (l.exponent != 1 && l.exponent != -1) throw DomainError("group word exponents must be +1 or -1");
    TruncatedSeries g = unit_of_generator(l.generator, rank, cutoff);
    result = multiply(result, l.exponent == 1 ? g : invert(g));
  }
  return result;
}

}  // namespace rspec::magnus
