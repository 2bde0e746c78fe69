#include "rspec/intmat.hpp"

namespace rspec::intmat {

std::optional<IntegerSolution> solve_integer(const Matrix& m, std::span<const Integer> b) {
  if (b.size() != m.cols()) throw DimensionError("solve_integer: right-hand side length differs from columns");
  const HermiteForm hf = hermite_form(m);
  const Matrix& h = hf.h;

  // y * h == b; rows of h at or beyond the rank are zero, so y_j = 0 there.
  IntVector y(m.rows());
  std::size_t col = 0;
  for (std::size_t i = 0; i < hf.rank; ++i) {
    while (sgn(h(i, col)) == 0) ++col;
    Integer rhs = b[col];
    for (std::size_t j = 0; j < i; ++j) rhs -= y[j] * h(j, col);
    if (!mpz_divisible_p(rhs.get_mpz_t(), h(i, col).get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), rhs.get_mpz_t(), h(i, col).get_mpz_t());
    ++col;
  }
  if (row_times(y, h) != IntVector(b.begin(), b.end())) return std::nullopt;

  IntegerSolution sol;
  sol.particular = row_times(y, hf.u);
  for (std::size_t j = hf.rank; j < m.rows(); ++j) sol.kernel.push_back(hf.u.row_vector(j));
  return sol;
}

bool abelian_twisted_equivalent(const Matrix& m, std::span<const Integer> u,
                                std::span<const Integer> v) {
  if (!m.square()) throw DimensionError("abelian_twisted_equivalent: matrix must be square");
  if (u.size() != m.rows() || v.size() != m.rows())
    throw DimensionError("abelian_twisted_equivalent: vector length differs from matrix size");
  IntVector diff(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) diff[i] = v[i] - u[i];
  return solve_integer(m, diff).has_value();
}

}  // namespace rspec::intmat
