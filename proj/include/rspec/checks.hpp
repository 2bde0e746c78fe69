#pragma once
//
// Verification suites and oracle comparisons. Each returns a CheckReport
// listing the number of cases examined and every counterexample found.
//

#include <cstdint>
#include <string>
#include <vector>

#include "rspec/intmat.hpp"
#include "rspec/parallel.hpp"

namespace rspec::checks {

using intmat::Matrix;

struct CheckReport {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

// Class 4, rank 2: every automorphism has R = infinity; on det a = -1 the
// degree-4 layer matrix B satisfies det(B - E) = 0.
CheckReport check_theorem1(int bound, Execution exec = Execution::parallel);
// degree-3 layer of rank 2 equals det(a) * a.
CheckReport check_layer3_scalar(int bound, Execution exec = Execution::parallel);
// det a = -1: det(A_3) = -1 and det(A_3 - E) = tr a.
CheckReport check_layer3_determinants(int bound, Execution exec = Execution::parallel);
// rank 3: minor_matrix(a) equals the degree-2 layer matrix.
CheckReport check_minor_matrix(int bound, Execution exec = Execution::parallel);
// Determinant identities on random 3x3 matrices with entries in [-9, 9].
CheckReport check_abelian_det_identity(std::uint64_t samples, std::uint64_t seed);
CheckReport check_minor_det_identity(std::uint64_t samples, std::uint64_t seed);
// [[[x,y],y],x] == [[[x,y],x],y] in the free Lie ring.
CheckReport check_metabelian_identity();
// D_[n] -> 2n - 1 and F_[n] -> 4n on N_{3,2} for n <= n_max; A(r,k) -> k on
// Z^r for 2 <= r <= 6, k <= k_max.
CheckReport check_witnesses(int n_max, int k_max);
// N_{2,2}: R = 2|tr a|, N_{2,3}: R = 2 tr(a)^2 for det a = -1, tr a != 0;
// infinite otherwise.
CheckReport check_closed_forms(int bound, Execution exec = Execution::parallel);

// coset_count_oracle against lattice_index.
CheckReport oracle_index(const Matrix& m);
CheckReport oracle_index_random(std::uint64_t samples, std::uint64_t seed);
// layer_matrix_via_magnus against induced_layer_matrix, exhaustively.
CheckReport oracle_magnus(int rank, int degree, int bound, Execution exec = Execution::parallel);
// count_twisted_classes against reidemeister_number(2, 2, .).
CheckReport oracle_heisenberg(const Matrix& a);
// The companions [[k,1],[1,0]], k = 1..6, plus `samples` random det -1
// matrices with 1 <= |trace| <= 6.
CheckReport oracle_heisenberg_suite(std::uint64_t samples, std::uint64_t seed);

// Seeded samplers used by the suites.
std::vector<Matrix> random_nonsingular(std::uint64_t count, std::uint64_t seed, long det_bound = 64);
std::vector<Matrix> random_det_minus_one(std::uint64_t count, std::uint64_t seed, long max_trace = 6);
Matrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi, std::uint64_t seed);

}  // namespace rspec::checks
