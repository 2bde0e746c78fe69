#include "rspec/freelie.hpp"

namespace rspec::freelie {

Matrix induced_layer_matrix(const Matrix& a, int degree) {
  if (!a.square() || a.empty()) throw DimensionError("induced_layer_matrix: matrix must be square");
  if (!intmat::is_unimodular(a))
    throw DomainError("induced_layer_matrix: matrix is not unimodular (not an automorphism)");
  if (degree < 1) throw DomainError("induced_layer_matrix: degree must be positive");
  if (degree == 1) return a;

  const int rank = static_cast<int>(a.rows());
  LieRing ring(rank, degree);
  const HallTable& t = ring.table();

  // images of every Hall word up to `degree`, built bottom-up
  std::vector<LieElement> image(t.size());
  for (int g = 1; g <= rank; ++g) {
    LieElement& e = image[t.generator_id(g)];
    for (int j = 1; j <= rank; ++j) {
      const Integer& c = a(static_cast<std::size_t>(g - 1), static_cast<std::size_t>(j - 1));
      if (sgn(c) != 0) e.emplace(t.generator_id(j), c);
    }
  }
  for (int d = 2; d <= degree; ++d)
    for (std::size_t id : t.degree_ids(d)) {
      const HallWord& w = t.word(id);
      image[id] = ring.bracket(image[w.left], image[w.right]);
    }

  auto ids = t.degree_ids(degree);
  Matrix m(ids.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (const auto& [id, c] : image[ids[i]]) m(i, t.word(id).position) = c;
  return m;
}

}  // namespace rspec::freelie
