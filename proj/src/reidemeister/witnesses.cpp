#include <vector>

#include "rspec/reidemeister.hpp"

namespace rspec::reidemeister {
namespace {

Matrix abelian_block2(long k) { return Matrix{{-k, 1}, {1, 0}}; }
Matrix abelian_block3(long k) { return Matrix{{1, k, 1}, {1, 1, 0}, {1, 0, 0}}; }

// 2x2 minor of a 3x3 matrix deleting row i and column j (1-based).
Integer minor(const Matrix& a, std::size_t i, std::size_t j) {
  std::size_t rs[2], cs[2];
  for (std::size_t k = 0, n = 0; k < 3; ++k)
    if (k != i - 1) rs[n++] = k;
  for (std::size_t k = 0, n = 0; k < 3; ++k)
    if (k != j - 1) cs[n++] = k;
  return a(rs[0], cs[0]) * a(rs[1], cs[1]) - a(rs[0], cs[1]) * a(rs[1], cs[0]);
}

void require_3x3(const Matrix& a) {
  if (a.rows() != 3 || a.cols() != 3) throw DimensionError("expected a 3x3 matrix");
}

}  // namespace

Matrix abelian_witness(int rank, int k) {
  if (rank < 2) throw DomainError("abelian_witness: rank must be at least 2");
  if (k < 1) throw DomainError("abelian_witness: k must be positive");
  std::vector<Matrix> blocks;
  blocks.push_back(rank % 2 == 0 ? abelian_block2(k) : abelian_block3(k));
  for (int filled = rank % 2 == 0 ? 2 : 3; filled < rank; filled += 2) blocks.push_back(abelian_block2(1));
  return Matrix::block_diagonal(blocks);
}

Matrix witness_D(int n) {
  if (n < 1) throw DomainError("witness_D: n must be positive");
  return Matrix{{n, 1, 1}, {1, 1, 0}, {1, 0, 0}};
}

Matrix witness_F(int n) {
  if (n < 1) throw DomainError("witness_F: n must be positive");
  return Matrix{{n + 1, 1, 1}, {2, 1, 0}, {1, 0, 0}};
}

Matrix companion(long k) { return Matrix{{k, 1}, {1, 0}}; }

Matrix minor_matrix(const Matrix& a) {
  require_3x3(a);
  Matrix b(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = minor(a, 3 - i, 3 - j);
  return b;
}

DetIdentityResiduals det_identity_residuals(const Matrix& a) {
  require_3x3(a);
  const Matrix e = Matrix::identity(3);
  const Matrix b = minor_matrix(a);
  const Integer principal = minor(a, 1, 1) + minor(a, 2, 2) + minor(a, 3, 3);
  const Integer det_a = intmat::determinant(a);
  const Integer det_b = intmat::determinant(b);
  const Integer tr_a = a.trace();

  DetIdentityResiduals r;
  r.abelian_layer = intmat::determinant(a - e) - (det_a - principal + tr_a - 1);
  r.minor_layer = intmat::determinant(b - e) - (det_b - det_a * tr_a + principal - 1);
  return r;
}

bool has_prediction(int rank, int nil_class) {
  if (nil_class == 1) return rank >= 1;
  if (rank == 2) return nil_class >= 2;
  return rank == 3 && nil_class == 2;
}

bool predicted_member(int rank, int nil_class, const Integer& n) {
  if (!has_prediction(rank, nil_class))
    throw DomainError("no proven spectrum for N_{" + std::to_string(rank) + "," +
                      std::to_string(nil_class) + "}");
  if (n < 1) throw DomainError("predicted_member: n must be positive");
  if (nil_class == 1) return rank == 1 ? n == 2 : true;
  if (rank == 2 && nil_class == 2) return mpz_even_p(n.get_mpz_t()) != 0;
  if (rank == 2 && nil_class == 3) {
    if (mpz_odd_p(n.get_mpz_t())) return false;
    const Integer half = n / 2;
    return mpz_perfect_square_p(half.get_mpz_t()) != 0;
  }
  if (rank == 2) return false;  // class >= 4: R_infinity
  // rank 3, class 2: never 2 mod 4
  return mpz_fdiv_ui(n.get_mpz_t(), 4) != 2;
}

}  // namespace rspec::reidemeister
