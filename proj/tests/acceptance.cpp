// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "json.hpp"
#include "rspec/checks.hpp"
#include "rspec/freelie.hpp"
#include "rspec/reidemeister.hpp"

using namespace rspec;
using intmat::IndexValue;
using intmat::Matrix;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Runs `compute` through the command-line front end and returns R.
std::string cli_r(int rank, int cls, const Matrix& a) {
  std::ostringstream out, err;
  const int code = cli::run({"compute", "--rank", std::to_string(rank), "--class", std::to_string(cls),
                             "--matrix", intmat::format_matrix(a)},
                            out, err);
  if (code != 0) return "exit " + std::to_string(code) + ": " + err.str();
  return nlohmann::json::parse(out.str())["R"].dump();
}

Outcome closed_form(int cls) {
  Outcome o;
  for (long k = 1; k <= 20; ++k) {
    const long want = cls == 2 ? 2 * k : 2 * k * k;
    const std::string got = cli_r(2, cls, reidemeister::companion(k));
    if (got != std::to_string(want)) {
      o.ok = false;
      o.detail += " k=" + std::to_string(k) + ": got " + got;
    }
  }
  if (o.ok) o.detail = "k = 1..20 via `compute`";
  return o;
}

Outcome from_check(const checks::CheckReport& r) {
  Outcome o{r.passed(), std::to_string(r.cases) + " cases"};
  for (const auto& n : r.notes) o.detail += "; " + n;
  for (const auto& f : r.failures) o.detail += "; " + f;
  return o;
}

Outcome theorem1() {
  const auto rep = reidemeister::verify_theorem1(3);
  Outcome o{rep.passed() && rep.det_plus > 0 && rep.det_minus > 0,
            std::to_string(reidemeister::box_size(2, 3)) + " candidates, " +
                std::to_string(rep.det_plus + rep.det_minus) + " automorphisms (" +
                std::to_string(rep.det_plus) + " det +1, " + std::to_string(rep.det_minus) +
                " det -1), " + std::to_string(rep.infinite) + " with R = infinity"};
  for (const auto& m : rep.counterexamples) o.detail += "; counterexample " + intmat::format_matrix(m);
  return o;
}

Outcome abelian_witnesses() {
  Outcome o;
  int cases = 0;
  for (int r = 2; r <= 6; ++r)
    for (int k = 1; k <= 50; ++k) {
      ++cases;
      const Matrix a = reidemeister::abelian_witness(r, k);
      const auto idx = intmat::lattice_index(a - Matrix::identity(static_cast<std::size_t>(r)));
      if (!intmat::is_unimodular(a) || idx != IndexValue(Integer(k))) {
        o.ok = false;
        o.detail += " A(" + std::to_string(r) + "," + std::to_string(k) + ") -> " + idx.to_string();
      }
    }
  if (o.ok) o.detail = std::to_string(cases) + " witnesses";
  return o;
}

Outcome parity_exclusion() {
  const auto rep = reidemeister::spectrum_search(3, 2, 2);
  Outcome o{true, std::to_string(rep.candidates) + " candidates, " + std::to_string(rep.automorphisms) +
                      " automorphisms, " + std::to_string(rep.attained.size()) + " finite values"};
  for (const auto& [v, w] : rep.attained) {
    if (v % 4 == 2) {
      o.ok = false;
      o.detail += "; value " + v.get_str() + " attained by " + intmat::format_matrix(w);
    }
    if (reidemeister::reidemeister_number(3, 2, w).r_value != IndexValue(v)) {
      o.ok = false;
      o.detail += "; witness for " + v.get_str() + " does not recompute";
    }
  }
  for (const auto& v : rep.violations) {
    o.ok = false;
    o.detail += "; " + v;
  }
  if (rep.attained.empty()) o.ok = false;
  return o;
}

Outcome determinant_identities() {
  const auto a = checks::check_abelian_det_identity(10000, 2024);
  const auto b = checks::check_minor_det_identity(10000, 2024);
  Outcome o{a.passed() && b.passed() && a.cases == 10000 && b.cases == 10000,
            "10000 seeded matrices, both residuals zero"};
  if (!o.ok) o.detail = std::to_string(a.failures.size() + b.failures.size()) + " nonzero residuals";
  return o;
}

Outcome oracles() {
  Outcome o;
  auto fold = [&o](const checks::CheckReport& r) {
    o.detail += (o.detail.empty() ? "" : "; ") + r.name + " " + std::to_string(r.cases) + " cases";
    if (!r.passed()) {
      o.ok = false;
      for (const auto& f : r.failures) o.detail += " [" + f + "]";
    }
  };
  fold(checks::oracle_index_random(500, 2024));
  for (int d = 2; d <= 4; ++d) {
    auto r = checks::oracle_magnus(2, d, 2);
    r.name += " r=2 d=" + std::to_string(d);
    fold(r);
  }
  auto r3 = checks::oracle_magnus(3, 2, 2);
  r3.name += " r=3 d=2";
  fold(r3);
  fold(checks::oracle_heisenberg_suite(50, 2024));
  return o;
}

Outcome layer3_goldens() {
  const auto a = checks::check_layer3_scalar(3);
  const auto b = checks::check_layer3_determinants(3);
  Outcome o{a.passed() && b.passed() && a.cases > 0 && b.cases > 0,
            std::to_string(a.cases) + " matrices for the scalar law, " + std::to_string(b.cases) +
                " on the det -1 branch"};
  for (const auto& f : a.failures) o.detail += "; " + f;
  for (const auto& f : b.failures) o.detail += "; " + f;
  return o;
}

Outcome metabelian() {
  const auto lhs = freelie::normalize_bracket(*freelie::parse_bracket("[[[x,y],y],x]", 2), 2, 4);
  const auto rhs = freelie::normalize_bracket(*freelie::parse_bracket("[[[x,y],x],y]", 2), 2, 4);
  std::string coords;
  for (const auto& c : lhs.coords) coords += (coords.empty() ? "" : ",") + c.get_str();
  return {lhs == rhs, "both normalize to (" + coords + ")"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0: no runtime limit
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "N_22 closed form R = 2k on [[k,1],[1,0]]", 1.0, [] { return closed_form(2); }},
      {2, "N_23 closed form R = 2k^2 on [[k,1],[1,0]]", 1.0, [] { return closed_form(3); }},
      {3, "class 4 rank 2: R = infinity, det(B - E) = 0 on det -1", 10.0, theorem1},
      {4, "abelian witnesses index k for r = 2..6, k = 1..50", 5.0, abelian_witnesses},
      {5, "N_32 witnesses D_[n] -> 2n-1, F_[n] -> 4n", 0.0,
       [] { return from_check(checks::check_witnesses(20, 1)); }},
      {6, "N_32 spectrum at bound 2 avoids 2 mod 4", 0.0, parity_exclusion},
      {7, "characteristic-polynomial determinant identities", 0.0, determinant_identities},
      {8, "oracle equivalences (index, Magnus, Heisenberg)", 60.0, oracles},
      {9, "degree-3 layer equals det(a) a; det(A3 - E) = tr a", 0.0, layer3_goldens},
      {10, "[[[x,y],y],x] = [[[x,y],x],y]", 0.0, metabelian},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    if (c.limit_s > 0 && took.count() >= c.limit_s) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(c.limit_s) + " s limit";
    }
    if (!o.ok) ++failed;
    std::printf("[%s] %2d. %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, took.count(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
