#include <algorithm>
#include <array>

#include "rspec/reidemeister.hpp"

namespace rspec::reidemeister {
namespace {

// Box entry i of a candidate is digit - bound; the first entry is the most
// significant digit, so index order is lexicographic order on entries.
struct Box {
  int rank;
  int bound;
  std::uint64_t size;

  void decode(std::uint64_t index, std::span<long> out) const {
    const auto base = static_cast<std::uint64_t>(2 * bound + 1);
    for (std::size_t k = out.size(); k-- > 0;) {
      out[k] = static_cast<long>(index % base) - bound;
      index /= base;
    }
  }

  Matrix matrix(std::uint64_t index) const {
    std::array<long, kMaxRank * kMaxRank> e{};
    const auto n = static_cast<std::size_t>(rank);
    decode(index, std::span<long>(e.data(), n * n));
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = e[i * n + j];
    return m;
  }

  // Determinant if the candidate is unimodular, 0 otherwise.
  long unimodular_det(std::uint64_t index) const {
    std::array<long, kMaxRank * kMaxRank> e{};
    const auto n = static_cast<std::size_t>(rank);
    decode(index, std::span<long>(e.data(), n * n));
    long d;
    switch (rank) {
      case 1:
        d = e[0];
        break;
      case 2:
        d = e[0] * e[3] - e[1] * e[2];
        break;
      case 3:
        d = e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
            e[2] * (e[3] * e[7] - e[4] * e[6]);
        break;
      default: {
        Integer big = intmat::determinant(matrix(index));
        d = big.fits_slong_p() ? big.get_si() : 0;
      }
    }
    return (d == 1 || d == -1) ? d : 0;
  }
};

Box make_box(int rank, int bound) {
  if (rank < 1 || rank > kMaxRank) throw DomainError("rank outside supported range");
  if (bound < 0) throw DomainError("entry bound must be nonnegative");
  return Box{rank, bound, box_size(rank, bound)};
}

void check_filter(std::optional<int> det_filter) {
  if (det_filter && *det_filter != 1 && *det_filter != -1)
    throw DomainError("determinant filter must be +1 or -1");
}

struct SearchState {
  std::uint64_t automorphisms = 0;
  std::uint64_t infinite = 0;
  std::map<Integer, std::uint64_t> first;  // value -> least box index
};

}  // namespace

std::uint64_t box_size(int rank, int entry_bound, std::uint64_t guard) {
  const auto base = static_cast<std::uint64_t>(2 * entry_bound + 1);
  std::uint64_t size = 1;
  for (int k = 0; k < rank * rank; ++k) {
    size *= base;
    if (size > guard)
      throw BoundError("enumeration of " + std::to_string(rank) + "x" + std::to_string(rank) +
                       " matrices with entries in [-" + std::to_string(entry_bound) + ", " +
                       std::to_string(entry_bound) + "] exceeds the candidate guard");
  }
  return size;
}

std::vector<Matrix> unimodular_matrices(int rank, int entry_bound, std::optional<int> det_filter,
                                        Execution exec) {
  check_filter(det_filter);
  const Box box = make_box(rank, entry_bound);
  auto indices = reduce_range<std::vector<std::uint64_t>>(
      box.size, exec,
      [&](std::vector<std::uint64_t>& out, std::uint64_t i) {
        const long d = box.unimodular_det(i);
        if (d != 0 && (!det_filter || d == *det_filter)) out.push_back(i);
      },
      [](std::vector<std::uint64_t>& into, std::vector<std::uint64_t>&& from) {
        into.insert(into.end(), from.begin(), from.end());
      });
  std::vector<Matrix> out;
  out.reserve(indices.size());
  for (std::uint64_t i : indices) out.push_back(box.matrix(i));
  return out;
}

SpectrumReport spectrum_search(int rank, int nil_class, int entry_bound,
                               std::optional<int> det_filter, bool check_predictions,
                               Execution exec) {
  check_filter(det_filter);
  if (check_predictions && !has_prediction(rank, nil_class))
    throw DomainError("no proven spectrum for this rank and class; disable prediction checks");
  const Box box = make_box(rank, entry_bound);

  SearchState state = reduce_range<SearchState>(
      box.size, exec,
      [&](SearchState& s, std::uint64_t i) {
        const long d = box.unimodular_det(i);
        if (d == 0 || (det_filter && d != *det_filter)) return;
        ++s.automorphisms;
        const auto result = reidemeister_number(rank, nil_class, box.matrix(i));
        if (result.r_value.is_infinite())
          ++s.infinite;
        else
          s.first.try_emplace(result.r_value.value(), i);
      },
      [](SearchState& into, SearchState&& from) {
        into.automorphisms += from.automorphisms;
        into.infinite += from.infinite;
        for (auto& [value, index] : from.first) {
          auto [it, inserted] = into.first.try_emplace(value, index);
          if (!inserted) it->second = std::min(it->second, index);
        }
      });

  SpectrumReport report;
  report.rank = rank;
  report.nil_class = nil_class;
  report.entry_bound = entry_bound;
  report.det_filter = det_filter;
  report.predictions_checked = check_predictions;
  report.candidates = box.size;
  report.automorphisms = state.automorphisms;
  report.infinite = state.infinite;
  for (const auto& [value, index] : state.first) {
    Matrix witness = box.matrix(index);
    const auto again = reidemeister_number(rank, nil_class, witness).r_value;
    if (again != IndexValue(value))
      report.violations.push_back("witness " + intmat::format_matrix(witness) + " recomputes to " +
                                  again.to_string() + ", recorded " + value.get_str());
    if (check_predictions && !predicted_member(rank, nil_class, value))
      report.violations.push_back("value " + value.get_str() + " (witness " +
                                  intmat::format_matrix(witness) + ") is outside the predicted spectrum");
    report.attained.emplace(value, std::move(witness));
  }
  return report;
}

}  // namespace rspec::reidemeister
