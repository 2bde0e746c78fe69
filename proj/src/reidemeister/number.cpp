#include "rspec/freelie.hpp"
#include "rspec/reidemeister.hpp"

namespace rspec::reidemeister {

void validate(const AutoSpec& spec) {
  if (spec.rank < 1 || spec.rank > kMaxRank)
    throw DomainError("rank must be between 1 and " + std::to_string(kMaxRank));
  if (spec.nil_class < 1 || spec.nil_class > kMaxClass)
    throw DomainError("class must be between 1 and " + std::to_string(kMaxClass));
  const auto r = static_cast<std::size_t>(spec.rank);
  if (spec.a.rows() != r || spec.a.cols() != r)
    throw DimensionError("matrix must be " + std::to_string(r) + "x" + std::to_string(r));
  if (!intmat::is_unimodular(spec.a)) throw DomainError("matrix is not unimodular (|det| != 1)");
}

ReidemeisterResult reidemeister_number(const AutoSpec& spec) {
  validate(spec);
  ReidemeisterResult result;
  for (int d = 1; d <= spec.nil_class; ++d) {
    LayerReport layer;
    layer.degree = d;
    if (freelie::witt_dimension(spec.rank, d) == 0) {
      // rank 1: the layers above degree 1 are trivial
      layer.q = IndexValue();
    } else {
      layer.matrix = freelie::induced_layer_matrix(spec.a, d);
      layer.q = intmat::lattice_index(layer.matrix - Matrix::identity(layer.matrix.rows()));
    }
    result.r_value = result.r_value * layer.q;
    result.layers.push_back(std::move(layer));
  }
  return result;
}

}  // namespace rspec::reidemeister
