#pragma once
//
// Reidemeister numbers of automorphisms of free nilpotent groups N_{r,c},
// computed from the abelianization matrix as the product of the lattice
// indices [A_d : Im(phi_d - id)] over the lower-central layers d = 1..c.
//

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rspec/intmat.hpp"
#include "rspec/parallel.hpp"

namespace rspec::reidemeister {

using intmat::IndexValue;
using intmat::Matrix;

inline constexpr int kMaxRank = 6;
inline constexpr int kMaxClass = 8;

struct AutoSpec {
  int rank = 2;
  int nil_class = 1;
  Matrix a;
};

// Throws DimensionError / DomainError when the spec is not an automorphism
// of a supported N_{r,c}.
void validate(const AutoSpec& spec);

struct LayerReport {
  int degree = 1;
  Matrix matrix;  // induced action on the degree-d layer
  IndexValue q;   // lattice_index(matrix - E)
};

struct ReidemeisterResult {
  std::vector<LayerReport> layers;
  IndexValue r_value;
};

ReidemeisterResult reidemeister_number(const AutoSpec& spec);
inline ReidemeisterResult reidemeister_number(int rank, int nil_class, const Matrix& a) {
  return reidemeister_number(AutoSpec{rank, nil_class, a});
}

// ---- witnesses -----------------------------------------------------------

// Block-diagonal unimodular matrix with |det(result - E)| = k.
Matrix abelian_witness(int rank, int k);
// [[n,1,1],[1,1,0],[1,0,0]]: R = 2n - 1 on N_{3,2}.
Matrix witness_D(int n);
// [[n+1,1,1],[2,1,0],[1,0,0]]: R = 4n on N_{3,2}.
Matrix witness_F(int n);
// [[k,1],[1,0]]: det -1, trace k.
Matrix companion(long k);

// [[M33,M32,M31],[M23,M22,M21],[M13,M12,M11]] for a 3x3 matrix, M_ij the
// (unsigned) minor deleting row i and column j. This is the action on the
// degree-2 layer of N_{3,2} in the basis [x,y], [x,z], [y,z].
Matrix minor_matrix(const Matrix& a);

// Characteristic-polynomial identities at t = 1 for a 3x3 matrix A and
// B = minor_matrix(A), written as lhs - rhs:
//   det(A-E) = det A - (M11+M22+M33) + tr A - 1
//   det(B-E) = det B - det A tr A + (M11+M22+M33) - 1
struct DetIdentityResiduals {
  Integer abelian_layer;
  Integer minor_layer;
};
DetIdentityResiduals det_identity_residuals(const Matrix& a);

// ---- spectra -------------------------------------------------------------

// Whether the (rank, class) pair has a proven finite-spectrum description.
bool has_prediction(int rank, int nil_class);
// Membership of n >= 1 in the proven finite part of Spec_R(N_{r,c}):
//   (1,1): {2}; (r>=2,1): N; (2,2): 2N; (2,3): {2k^2}; (3,2): odd or 4N;
//   (2,c>=4): empty. Throws DomainError for other pairs.
bool predicted_member(int rank, int nil_class, const Integer& n);

inline constexpr std::uint64_t kSpectrumGuard = 100'000'000;

struct SpectrumReport {
  int rank = 0;
  int nil_class = 0;
  int entry_bound = 0;
  std::optional<int> det_filter;
  bool predictions_checked = false;
  std::uint64_t candidates = 0;     // matrices in the entry box
  std::uint64_t automorphisms = 0;  // unimodular ones passing the filter
  std::uint64_t infinite = 0;       // of which R = infinity
  std::map<Integer, Matrix> attained;  // value -> lexicographically least witness
  std::vector<std::string> violations;
};

// Exhaustive search over all rank x rank matrices with entries in
// [-bound, bound], |det| = 1 (or det = det_filter).
SpectrumReport spectrum_search(int rank, int nil_class, int entry_bound,
                               std::optional<int> det_filter = std::nullopt,
                               bool check_predictions = true,
                               Execution exec = Execution::parallel);

// All unimodular matrices in the box, in lexicographic order.
std::vector<Matrix> unimodular_matrices(int rank, int entry_bound,
                                        std::optional<int> det_filter = std::nullopt,
                                        Execution exec = Execution::parallel);

// Number of matrices in the box; throws BoundError above the guard.
std::uint64_t box_size(int rank, int entry_bound, std::uint64_t guard = kSpectrumGuard);

// ---- N_{2,4} ---------------------------------------------------------------

struct Theorem1Report {
  int entry_bound = 0;
  std::uint64_t det_plus = 0;   // centre of the class-2 quotient fixed: q_2 infinite
  std::uint64_t det_minus = 0;  // det(layer-4 matrix - E) = 0
  std::uint64_t infinite = 0;   // automorphisms with R = infinity on N_{2,4}
  std::vector<Matrix> counterexamples;

  bool passed() const { return counterexamples.empty() && infinite == det_plus + det_minus; }
};

Theorem1Report verify_theorem1(int entry_bound, Execution exec = Execution::parallel);

}  // namespace rspec::reidemeister
