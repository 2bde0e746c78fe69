#include "rspec/freelie.hpp"
#include "rspec/reidemeister.hpp"

namespace rspec::reidemeister {
namespace {

struct Theorem1State {
  std::uint64_t det_plus = 0;
  std::uint64_t det_minus = 0;
  std::uint64_t infinite = 0;
  std::vector<Matrix> counterexamples;
};

}  // namespace

Theorem1Report verify_theorem1(int entry_bound, Execution exec) {
  if (entry_bound < 1) throw DomainError("verify_theorem1: entry bound must be at least 1");
  const std::vector<Matrix> candidates = unimodular_matrices(2, entry_bound, std::nullopt, exec);

  Theorem1State state = reduce_range<Theorem1State>(
      candidates.size(), exec,
      [&](Theorem1State& s, std::uint64_t i) {
        const Matrix& a = candidates[i];
        const Integer det = intmat::determinant(a);
        bool ok;
        if (det == 1) {
          // the degree-2 layer is [det a] = [1]: the centre of N_{2,2} is fixed
          const Matrix layer2 = freelie::induced_layer_matrix(a, 2);
          ok = intmat::lattice_index(layer2 - Matrix::identity(1)).is_infinite();
          if (ok) ++s.det_plus;
        } else {
          const Matrix layer4 = freelie::induced_layer_matrix(a, 4);
          ok = sgn(intmat::determinant(layer4 - Matrix::identity(3))) == 0;
          if (ok) ++s.det_minus;
        }
        if (reidemeister_number(2, 4, a).r_value.is_infinite()) ++s.infinite;
        else ok = false;
        if (!ok) s.counterexamples.push_back(a);
      },
      [](Theorem1State& into, Theorem1State&& from) {
        into.det_plus += from.det_plus;
        into.det_minus += from.det_minus;
        into.infinite += from.infinite;
        for (auto& m : from.counterexamples) into.counterexamples.push_back(std::move(m));
      });

  Theorem1Report report;
  report.entry_bound = entry_bound;
  report.det_plus = state.det_plus;
  report.det_minus = state.det_minus;
  report.infinite = state.infinite;
  report.counterexamples = std::move(state.counterexamples);
  return report;
}

}  // namespace rspec::reidemeister
