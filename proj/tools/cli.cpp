#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "rspec/checks.hpp"
#include "rspec/freelie.hpp"
#include "rspec/reidemeister.hpp"
#include "rspec/report.hpp"

namespace rspec::cli {
namespace {

struct Options {
  int rank = 2;
  int nil_class = 2;
  std::string matrix;
  std::string output;
  int bound = -1;
  std::optional<int> det;
  std::string format = "csv";
  bool no_predict = false;
  int jobs = 0;
  std::string check;
  std::string oracle;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int n_max = 20;
  int k_max = 50;
};

// Writes to --output when given, otherwise to `out`.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw ParseError("cannot open output file '" + o.output + "'");
  file << text;
}

int print_check(const checks::CheckReport& r, std::ostream& out) {
  out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases << " cases)\n";
  for (const auto& n : r.notes) out << "  " << n << "\n";
  for (const auto& f : r.failures) out << "  counterexample: " << f << "\n";
  return r.passed() ? kExitOk : kExitCounterexample;
}

int bound_or(const Options& o, int fallback) { return o.bound >= 0 ? o.bound : fallback; }
std::uint64_t samples_or(const Options& o, std::uint64_t fallback) { return o.samples > 0 ? o.samples : fallback; }

int cmd_compute(const Options& o, std::ostream& out) {
  reidemeister::AutoSpec spec{o.rank, o.nil_class, intmat::parse_matrix(o.matrix)};
  const auto result = reidemeister::reidemeister_number(spec);
  emit(o, out, report::result_to_json(spec, result).dump(2) + "\n");
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.bound < 0) throw ParseError("--bound is required");
  const auto size = reidemeister::box_size(o.rank, o.bound);
  err << "spectrum: enumerating " << size << " candidate matrices on " << max_threads()
      << " thread(s)\n";
  const auto start = std::chrono::steady_clock::now();
  const auto rep = reidemeister::spectrum_search(o.rank, o.nil_class, o.bound, o.det, !o.no_predict);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  err << "spectrum: " << rep.automorphisms << " automorphisms, " << rep.attained.size()
      << " finite values, " << rep.infinite << " with R = infinity (" << took.count() << " s)\n";
  if (o.format == "json")
    emit(o, out, report::spectrum_to_json(rep).dump(2) + "\n");
  else
    emit(o, out, report::spectrum_to_csv(rep));
  for (const auto& v : rep.violations) err << "violation: " << v << "\n";
  return rep.violations.empty() ? kExitOk : kExitCounterexample;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string& c = o.check;
  if (c == "theorem1") return print_check(checks::check_theorem1(bound_or(o, 3)), out);
  if (c == "eq19") return print_check(checks::check_layer3_scalar(bound_or(o, 3)), out);
  if (c == "eq20") return print_check(checks::check_layer3_determinants(bound_or(o, 3)), out);
  if (c == "eq23") return print_check(checks::check_minor_matrix(bound_or(o, 1)), out);
  if (c == "eq24") return print_check(checks::check_abelian_det_identity(samples_or(o, 10000), o.seed), out);
  if (c == "eq25") return print_check(checks::check_minor_det_identity(samples_or(o, 10000), o.seed), out);
  if (c == "eq28") return print_check(checks::check_metabelian_identity(), out);
  if (c == "witnesses") return print_check(checks::check_witnesses(o.n_max, o.k_max), out);
  return print_check(checks::check_closed_forms(bound_or(o, 5)), out);
}

int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.oracle == "index") {
    if (!o.matrix.empty()) return print_check(checks::oracle_index(intmat::parse_matrix(o.matrix)), out);
    return print_check(checks::oracle_index_random(samples_or(o, 500), o.seed), out);
  }
  if (o.oracle == "heisenberg") {
    if (!o.matrix.empty())
      return print_check(checks::oracle_heisenberg(intmat::parse_matrix(o.matrix)), out);
    return print_check(checks::oracle_heisenberg_suite(samples_or(o, 50), o.seed), out);
  }
  int status = kExitOk;
  for (int d = 1; d <= o.nil_class; ++d) {
    auto r = checks::oracle_magnus(o.rank, d, bound_or(o, 2));
    r.name += " degree " + std::to_string(d);
    status = std::max(status, print_check(r, out));
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reidemeister numbers and spectra of free nilpotent groups", "rspec"};
  app.require_subcommand(1);
  app.add_option("--jobs", o.jobs, "worker threads (default: OpenMP default)")->check(CLI::NonNegativeNumber);

  auto* compute = app.add_subcommand("compute", "Reidemeister number of one automorphism (JSON)");
  compute->add_option("--rank", o.rank, "rank r")->required()->check(CLI::Range(1, reidemeister::kMaxRank));
  compute->add_option("--class", o.nil_class, "nilpotency class c")->required()->check(CLI::Range(1, reidemeister::kMaxClass));
  compute->add_option("--matrix", o.matrix, "abelianization matrix, e.g. \"1,1;1,0\"")->required();
  compute->add_option("--output", o.output, "write the report to this file");

  auto* spectrum = app.add_subcommand("spectrum", "exhaustive spectrum search over a box of matrices");
  spectrum->add_option("--rank", o.rank)->required()->check(CLI::Range(1, reidemeister::kMaxRank));
  spectrum->add_option("--class", o.nil_class)->required()->check(CLI::Range(1, reidemeister::kMaxClass));
  spectrum->add_option("--bound", o.bound, "entries range over [-bound, bound]")->required()->check(CLI::NonNegativeNumber);
  spectrum->add_option("--det", o.det, "keep only det = +1 or -1")->check(CLI::IsMember({1, -1}));
  spectrum->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  spectrum->add_flag("--no-predict", o.no_predict, "skip comparison with the proven spectrum");
  spectrum->add_option("--output", o.output);

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("check", o.check)->required()->check(CLI::IsMember(
      {"theorem1", "eq19", "eq20", "eq23", "eq24", "eq25", "eq28", "witnesses", "closed-forms"}));
  verify->add_option("--bound", o.bound)->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", o.samples);
  verify->add_option("--seed", o.seed);
  verify->add_option("--n-max", o.n_max)->check(CLI::PositiveNumber);
  verify->add_option("--k-max", o.k_max)->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "compare a computation with its independent oracle");
  oracle->add_option("name", o.oracle)->required()->check(CLI::IsMember({"index", "magnus", "heisenberg"}));
  oracle->add_option("--matrix", o.matrix);
  oracle->add_option("--rank", o.rank)->check(CLI::Range(1, reidemeister::kMaxRank));
  oracle->add_option("--class", o.nil_class)->check(CLI::Range(1, reidemeister::kMaxClass));
  oracle->add_option("--bound", o.bound)->check(CLI::NonNegativeNumber);
  oracle->add_option("--samples", o.samples);
  oracle->add_option("--seed", o.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.jobs > 0) set_threads(o.jobs);
  try {
    if (*compute) return cmd_compute(o, out);
    if (*spectrum) return cmd_spectrum(o, out, err);
    if (*verify) return cmd_verify(o, out);
    return cmd_oracle(o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rspec::cli
