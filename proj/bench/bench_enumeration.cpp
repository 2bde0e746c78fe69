// Serial vs OpenMP timings for the enumeration kernels.
//
//   bench_enumeration [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "rspec/checks.hpp"
#include "rspec/parallel.hpp"
#include "rspec/reidemeister.hpp"

using namespace rspec;

namespace {

double seconds(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, const std::function<void(Execution)>& kernel) {
  const double s = seconds([&] { kernel(Execution::serial); });
  const double p = seconds([&] { kernel(Execution::parallel); });
  std::printf("%-34s %9.3f %9.3f %8.2fx\n", name, s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) set_threads(std::atoi(argv[1]));
  std::printf("threads: %d\n", max_threads());
  std::printf("%-34s %9s %9s %9s\n", "kernel", "serial s", "omp s", "speedup");
  row("spectrum_search(3, 2, bound 2)", [](Execution e) { reidemeister::spectrum_search(3, 2, 2, std::nullopt, true, e); });
  row("spectrum_search(2, 3, bound 12)", [](Execution e) { reidemeister::spectrum_search(2, 3, 12, std::nullopt, true, e); });
  row("verify_theorem1(bound 6)", [](Execution e) { reidemeister::verify_theorem1(6, e); });
  row("oracle_magnus(3, 2, bound 1)", [](Execution e) { checks::oracle_magnus(3, 2, 1, e); });
  row("check_closed_forms(bound 8)", [](Execution e) { checks::check_closed_forms(8, e); });
}
