#include <cstdint>
#include <vector>

#include "rspec/intmat.hpp"

namespace rspec::intmat {
namespace {

Integer cofactor_rec(const Matrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t k = cols.size();
  if (k == 0) return 1;
  if (k == 1) return m(row, cols[0]);
  Integer total = 0;
  for (std::size_t idx = 0; idx < k; ++idx) {
    const std::size_t c = cols[idx];
    if (sgn(m(row, c)) == 0) continue;
    cols.erase(cols.begin() + static_cast<long>(idx));
    Integer minor = cofactor_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<long>(idx), c);
    if (idx % 2 == 0)
      total += m(row, c) * minor;
    else
      total -= m(row, c) * minor;
  }
  return total;
}

// Largest group (Z/M)^n we are willing to walk.
constexpr std::uint64_t kMaxAmbientOrder = std::uint64_t{1} << 28;

}  // namespace

Integer determinant_cofactor(const Matrix& m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  if (m.rows() > 8) throw BoundError("cofactor determinant capped at 8x8");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_rec(m, cols, 0);
}

IndexValue coset_count_oracle(const Matrix& m, long det_bound) {
  if (!m.square()) throw DimensionError("coset_count_oracle: matrix must be square");
  const std::size_t n = m.rows();
  const Integer det = abs(determinant_cofactor(m));
  if (sgn(det) == 0) throw DomainError("coset_count_oracle: singular matrix");
  if (det > det_bound) throw BoundError("coset_count_oracle: |det| exceeds bound");

  const std::uint64_t modulus = 2 * det.get_ui();
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= modulus;
    if (order > kMaxAmbientOrder) throw BoundError("coset_count_oracle: ambient group too large");
  }

  // generators: columns reduced into [0, modulus), encoded in mixed radix
  std::vector<std::vector<std::uint64_t>> gens(n, std::vector<std::uint64_t>(n));
  const Integer mod_z(static_cast<unsigned long>(modulus));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), m(i, j).get_mpz_t(), mod_z.get_mpz_t());
      gens[j][i] = r.get_ui();
    }

  std::vector<bool> seen(order, false);
  std::vector<std::uint64_t> frontier{0};
  seen[0] = true;
  std::uint64_t subgroup = 1;
  std::vector<std::uint64_t> digits(n);
  while (!frontier.empty()) {
    const std::uint64_t code = frontier.back();
    frontier.pop_back();
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      digits[i] = rest % modulus;
      rest /= modulus;
    }
    for (const auto& g : gens) {
      std::uint64_t next = 0;
      for (std::size_t i = n; i-- > 0;) next = next * modulus + (digits[i] + g[i]) % modulus;
      if (!seen[next]) {
        seen[next] = true;
        ++subgroup;
        frontier.push_back(next);
      }
    }
  }
  if (order % subgroup != 0) throw InternalError("coset_count_oracle: subgroup order does not divide group order");
  return IndexValue(Integer(static_cast<unsigned long>(order / subgroup)));
}

}  // namespace rspec::intmat
