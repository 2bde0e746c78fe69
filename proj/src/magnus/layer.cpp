#include "rspec/freelie.hpp"
#include "rspec/magnus.hpp"

namespace rspec::magnus {
namespace {

// Homogeneous Lie polynomial of a Hall word, held in a series of cutoff d.
TruncatedSeries lie_polynomial(const freelie::HallTable& t, std::size_t id, int cutoff) {
  const freelie::HallWord& w = t.word(id);
  if (w.is_generator()) {
    TruncatedSeries s(t.rank(), cutoff);
    const int word[1] = {w.generator};
    s.coefficient(word) = 1;
    return s;
  }
  TruncatedSeries u = lie_polynomial(t, w.left, cutoff);
  TruncatedSeries v = lie_polynomial(t, w.right, cutoff);
  return multiply(u, v) - multiply(v, u);
}

TruncatedSeries commutator_image(const freelie::HallTable& t, std::size_t id,
                                 std::span<const TruncatedSeries> generator_images) {
  const freelie::HallWord& w = t.word(id);
  if (w.is_generator()) return generator_images[static_cast<std::size_t>(w.generator - 1)];
  return group_commutator(commutator_image(t, w.left, generator_images),
                          commutator_image(t, w.right, generator_images));
}

}  // namespace

GroupWord lift_word(const Matrix& a, std::size_t row) {
  GroupWord w;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Integer& e = a(row, j);
    if (!e.fits_slong_p()) throw DomainError("lift exponent too large");
    const long n = e.get_si();
    for (long k = 0; k < (n < 0 ? -n : n); ++k)
      w.push_back({static_cast<int>(j + 1), n < 0 ? -1 : 1});
  }
  return w;
}

IntVector hall_word_tensor(int rank, int degree, std::size_t position) {
  auto table = freelie::HallTable::get(rank, degree);
  TruncatedSeries p = lie_polynomial(*table, table->id_at(degree, position), degree);
  auto h = p.homogeneous(degree);
  return {h.begin(), h.end()};
}

Matrix layer_matrix_via_magnus(const Matrix& a, int degree) {
  std::vector<GroupWord> lifts;
  for (std::size_t i = 0; i < a.rows(); ++i) lifts.push_back(lift_word(a, i));
  return layer_matrix_via_magnus(a, degree, lifts);
}

Matrix layer_matrix_via_magnus(const Matrix& a, int degree, std::span<const GroupWord> lifts) {
  if (!a.square() || a.empty()) throw DimensionError("layer_matrix_via_magnus: matrix must be square");
  if (!intmat::is_unimodular(a)) throw DomainError("layer_matrix_via_magnus: matrix is not unimodular");
  if (degree < 1) throw DomainError("layer_matrix_via_magnus: degree must be positive");
  const int rank = static_cast<int>(a.rows());
  if (lifts.size() != a.rows()) throw DimensionError("one lift word per generator required");
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    IntVector ab(a.cols());
    for (const Letter& l : lifts[i]) {
      if (l.generator < 1 || l.generator > rank) throw DomainError("lift letter outside rank");
      ab[static_cast<std::size_t>(l.generator - 1)] += l.exponent;
    }
    if (ab != a.row_vector(i)) throw DomainError("lift word does not abelianize to its matrix row");
  }

  auto table = freelie::HallTable::get(rank, degree);
  auto ids = table->degree_ids(degree);

  std::vector<IntVector> tensor_rows;
  for (std::size_t id : ids) {
    const TruncatedSeries p = lie_polynomial(*table, id, degree);
    auto h = p.homogeneous(degree);
    tensor_rows.emplace_back(h.begin(), h.end());
  }
  const Matrix tensors = Matrix::from_rows(tensor_rows);

  std::vector<TruncatedSeries> images;
  for (const GroupWord& w : lifts) images.push_back(evaluate_group_word(w, rank, degree));

  Matrix out(ids.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    TruncatedSeries s = commutator_image(*table, ids[i], images);
    for (int low = 1; low < degree; ++low)
      for (const Integer& c : s.homogeneous(low))
        if (sgn(c) != 0) throw InternalError("commutator image has terms below its weight");
    auto top = s.homogeneous(degree);
    auto sol = intmat::solve_integer(tensors, top);
    if (!sol || !sol->kernel.empty())
      throw InternalError("top component is not a unique integer combination of Hall words");
    for (std::size_t j = 0; j < ids.size(); ++j) out(i, j) = sol->particular[j];
  }
  return out;
}

}  // namespace rspec::magnus
