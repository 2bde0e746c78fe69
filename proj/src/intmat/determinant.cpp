#include "rspec/intmat.hpp"

namespace rspec::intmat {

Integer determinant(const Matrix& m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  Matrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // exact division: Sylvester's identity
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const Matrix& m) {
  if (!m.square() || m.empty()) return false;
  return abs(determinant(m)) == 1;
}

IndexValue lattice_index(const Matrix& m) {
  if (!m.square()) throw DimensionError("lattice_index of non-square matrix");
  Integer d = determinant(m);
  if (sgn(d) == 0) return IndexValue::infinite();
  return IndexValue(abs(d));
}

}  // namespace rspec::intmat
