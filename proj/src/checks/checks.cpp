#include "rspec/checks.hpp"

#include <optional>
#include <random>

#include "rspec/freelie.hpp"
#include "rspec/magnus.hpp"
#include "rspec/nilgroup.hpp"
#include "rspec/reidemeister.hpp"

namespace rspec::checks {
namespace {

using intmat::format_matrix;
using reidemeister::reidemeister_number;

constexpr std::size_t kMaxListedFailures = 20;

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;

  void fail(std::string what) {
    ++failed;
    if (failures.size() < kMaxListedFailures) failures.push_back(std::move(what));
  }
};

// Applies `probe` to every matrix; probe returns a failure description or
// nullopt. Failures keep enumeration order.
template <typename Probe>
CheckReport run_over(std::string name, const std::vector<Matrix>& matrices, Execution exec, Probe probe) {
  Tally t = reduce_range<Tally>(
      matrices.size(), exec,
      [&](Tally& s, std::uint64_t i) {
        ++s.cases;
        if (auto f = probe(matrices[i])) s.fail(*f);
      },
      [](Tally& into, Tally&& from) {
        into.cases += from.cases;
        into.failed += from.failed;
        for (auto& f : from.failures)
          if (into.failures.size() < kMaxListedFailures) into.failures.push_back(std::move(f));
      });
  CheckReport r{std::move(name), t.cases, std::move(t.failures), {}};
  if (t.failed > r.failures.size())
    r.failures.push_back("... " + std::to_string(t.failed - r.failures.size()) + " more");
  return r;
}

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Matrix random_matrix_from(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

}  // namespace

Matrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_matrix_from(rng, rows, cols, lo, hi);
}

std::vector<Matrix> random_nonsingular(std::uint64_t count, std::uint64_t seed, long det_bound) {
  std::mt19937_64 rng(seed);
  std::vector<Matrix> out;
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    Matrix m = random_matrix_from(rng, n, n, -5, 5);
    const Integer d = abs(intmat::determinant(m));
    if (sgn(d) != 0 && d <= det_bound) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> random_det_minus_one(std::uint64_t count, std::uint64_t seed, long max_trace) {
  std::mt19937_64 rng(seed);
  std::vector<Matrix> out;
  while (out.size() < count) {
    Matrix m = random_matrix_from(rng, 2, 2, -max_trace, max_trace);
    const Integer tr = m.trace();
    if (intmat::determinant(m) == -1 && sgn(tr) != 0 && abs(tr) <= max_trace) out.push_back(std::move(m));
  }
  return out;
}

CheckReport check_theorem1(int bound, Execution exec) {
  const auto rep = reidemeister::verify_theorem1(bound, exec);
  CheckReport r;
  r.name = "theorem1";
  r.cases = rep.det_plus + rep.det_minus + rep.counterexamples.size();
  for (const auto& m : rep.counterexamples) r.failures.push_back("counterexample " + format_matrix(m));
  if (rep.infinite != r.cases)
    r.failures.push_back(std::to_string(r.cases - rep.infinite) + " automorphisms with finite R on N_{2,4}");
  r.notes.push_back("det = +1 branch: " + std::to_string(rep.det_plus) + " matrices");
  r.notes.push_back("det = -1 branch: " + std::to_string(rep.det_minus) + " matrices");
  return r;
}

CheckReport check_layer3_scalar(int bound, Execution exec) {
  return run_over("eq19", reidemeister::unimodular_matrices(2, bound, std::nullopt, exec), exec,
                  [](const Matrix& a) -> std::optional<std::string> {
                    const Matrix layer = freelie::induced_layer_matrix(a, 3);
                    if (layer == intmat::determinant(a) * a) return std::nullopt;
                    return "a = " + format_matrix(a) + ": layer-3 matrix " + format_matrix(layer);
                  });
}

CheckReport check_layer3_determinants(int bound, Execution exec) {
  return run_over("eq20", reidemeister::unimodular_matrices(2, bound, -1, exec), exec,
                  [](const Matrix& a) -> std::optional<std::string> {
                    const Matrix layer = freelie::induced_layer_matrix(a, 3);
                    const Integer d = intmat::determinant(layer);
                    const Integer ds = intmat::determinant(layer - Matrix::identity(2));
                    if (d == -1 && ds == a.trace()) return std::nullopt;
                    return "a = " + format_matrix(a) + ": det = " + d.get_str() +
                           ", det(A3 - E) = " + ds.get_str();
                  });
}

CheckReport check_minor_matrix(int bound, Execution exec) {
  return run_over("eq23", reidemeister::unimodular_matrices(3, bound, std::nullopt, exec), exec,
                  [](const Matrix& a) -> std::optional<std::string> {
                    const Matrix b = reidemeister::minor_matrix(a);
                    const Matrix layer = freelie::induced_layer_matrix(a, 2);
                    if (b == layer) return std::nullopt;
                    return "a = " + format_matrix(a) + ": minors " + format_matrix(b) + " vs layer " +
                           format_matrix(layer);
                  });
}

namespace {

CheckReport det_identity(std::string name, std::uint64_t samples, std::uint64_t seed, bool minor_layer) {
  std::mt19937_64 rng(seed);
  CheckReport r;
  r.name = std::move(name);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Matrix a = random_matrix_from(rng, 3, 3, -9, 9);
    const auto res = reidemeister::det_identity_residuals(a);
    const Integer& v = minor_layer ? res.minor_layer : res.abelian_layer;
    ++r.cases;
    if (sgn(v) != 0 && r.failures.size() < kMaxListedFailures)
      r.failures.push_back("a = " + format_matrix(a) + ": residual " + v.get_str());
  }
  return r;
}

}  // namespace

CheckReport check_abelian_det_identity(std::uint64_t samples, std::uint64_t seed) {
  return det_identity("eq24", samples, seed, false);
}

CheckReport check_minor_det_identity(std::uint64_t samples, std::uint64_t seed) {
  return det_identity("eq25", samples, seed, true);
}

CheckReport check_metabelian_identity() {
  CheckReport r;
  r.name = "eq28";
  const auto lhs = freelie::normalize_bracket(*freelie::parse_bracket("[[[x,y],y],x]", 2), 2, 4);
  const auto rhs = freelie::normalize_bracket(*freelie::parse_bracket("[[[x,y],x],y]", 2), 2, 4);
  r.cases = 1;
  if (!(lhs == rhs)) r.failures.push_back("[[[x,y],y],x] and [[[x,y],x],y] normalize differently");
  return r;
}

CheckReport check_witnesses(int n_max, int k_max) {
  CheckReport r;
  r.name = "witnesses";
  auto expect = [&](const std::string& label, const Matrix& a, int rank, int cls, long want) {
    ++r.cases;
    const auto got = reidemeister_number(rank, cls, a).r_value;
    if (got != intmat::IndexValue(Integer(want)))
      r.failures.push_back(label + " = " + format_matrix(a) + ": R = " + got.to_string() +
                           ", expected " + std::to_string(want));
  };
  for (int n = 1; n <= n_max; ++n) {
    expect("D_[" + std::to_string(n) + "]", reidemeister::witness_D(n), 3, 2, 2L * n - 1);
    expect("F_[" + std::to_string(n) + "]", reidemeister::witness_F(n), 3, 2, 4L * n);
  }
  for (int rank = 2; rank <= 6; ++rank)
    for (int k = 1; k <= k_max; ++k)
      expect("A(" + std::to_string(rank) + "," + std::to_string(k) + ")",
             reidemeister::abelian_witness(rank, k), rank, 1, k);
  return r;
}

CheckReport check_closed_forms(int bound, Execution exec) {
  return run_over("closed-forms", reidemeister::unimodular_matrices(2, bound, std::nullopt, exec), exec,
                  [](const Matrix& a) -> std::optional<std::string> {
                    const Integer tr = a.trace();
                    const bool finite = intmat::determinant(a) == -1 && sgn(tr) != 0;
                    const auto r2 = reidemeister_number(2, 2, a).r_value;
                    const auto r3 = reidemeister_number(2, 3, a).r_value;
                    const auto want2 = finite ? intmat::IndexValue(2 * abs(tr)) : intmat::IndexValue::infinite();
                    const auto want3 = finite ? intmat::IndexValue(2 * tr * tr) : intmat::IndexValue::infinite();
                    if (r2 == want2 && r3 == want3) return std::nullopt;
                    return "a = " + format_matrix(a) + ": R(N22) = " + r2.to_string() + " (want " +
                           want2.to_string() + "), R(N23) = " + r3.to_string() + " (want " +
                           want3.to_string() + ")";
                  });
}

CheckReport oracle_index(const Matrix& m) {
  CheckReport r;
  r.name = "index";
  r.cases = 1;
  const auto fast = intmat::lattice_index(m);
  const auto slow = intmat::coset_count_oracle(m);
  r.notes.push_back(format_matrix(m) + ": lattice_index = " + fast.to_string() +
                    ", coset count = " + slow.to_string());
  if (fast != slow) r.failures.push_back("mismatch on " + format_matrix(m));
  return r;
}

CheckReport oracle_index_random(std::uint64_t samples, std::uint64_t seed) {
  CheckReport r;
  r.name = "index";
  for (const Matrix& m : random_nonsingular(samples, seed)) {
    ++r.cases;
    const auto fast = intmat::lattice_index(m);
    const auto slow = intmat::coset_count_oracle(m);
    if (fast != slow)
      r.failures.push_back(format_matrix(m) + ": lattice_index = " + fast.to_string() +
                           ", coset count = " + slow.to_string());
  }
  return r;
}

CheckReport oracle_magnus(int rank, int degree, int bound, Execution exec) {
  return run_over("magnus", reidemeister::unimodular_matrices(rank, bound, std::nullopt, exec), exec,
                  [degree](const Matrix& a) -> std::optional<std::string> {
                    const Matrix lie = freelie::induced_layer_matrix(a, degree);
                    const Matrix mag = magnus::layer_matrix_via_magnus(a, degree);
                    if (lie == mag) return std::nullopt;
                    return "a = " + format_matrix(a) + ": Hall rewriting " + format_matrix(lie) +
                           " vs Magnus " + format_matrix(mag);
                  });
}

CheckReport oracle_heisenberg(const Matrix& a) {
  CheckReport r;
  r.name = "heisenberg";
  r.cases = 1;
  const Integer counted = nilgroup::count_twisted_classes(a);
  const auto product = reidemeister_number(2, 2, a).r_value;
  r.notes.push_back(format_matrix(a) + ": class count = " + counted.get_str() +
                    ", layer product = " + product.to_string());
  if (product != intmat::IndexValue(counted)) r.failures.push_back("mismatch on " + format_matrix(a));
  return r;
}

CheckReport oracle_heisenberg_suite(std::uint64_t samples, std::uint64_t seed) {
  CheckReport r;
  r.name = "heisenberg";
  std::vector<Matrix> cases;
  for (long k = 1; k <= 6; ++k) cases.push_back(reidemeister::companion(k));
  for (auto& m : random_det_minus_one(samples, seed)) cases.push_back(std::move(m));
  for (const Matrix& a : cases) {
    auto one = oracle_heisenberg(a);
    r.cases += one.cases;
    for (auto& f : one.failures) r.failures.push_back(std::move(f));
  }
  return r;
}

}  // namespace rspec::checks
