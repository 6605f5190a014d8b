// immlift: immanants, lifted trace polynomials, and randomized verification.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
// 3 counterexample found by `falsify`.

#include <charconv>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "immlift/gmf.hpp"
#include "immlift/json_io.hpp"
#include "immlift/tracepoly.hpp"
#include "immlift/verifier.hpp"

namespace {

using namespace immlift;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string format_complex(Complex z) { return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]"; }

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// imm -----------------------------------------------------------------------

struct ImmArgs {
  std::string partition;
  bool det = false;
  bool per = false;
  std::string matrix;
};

int run_imm(const ImmArgs& args) {
  const int chosen = int(!args.partition.empty()) + int(args.det) + int(args.per);
  if (chosen != 1) throw UsageError("imm: give exactly one of --partition, --det, --per");
  const ComplexMatrix a = io::read_matrix_file(args.matrix);
  if (a.rows() != a.cols()) throw UsageError("imm: matrix is not square");
  Complex value;
  if (args.det) {
    value = determinant(a);
  } else if (args.per) {
    value = permanent(a);
  } else {
    const Partition shape = Partition::parse(args.partition);
    if (shape.size() != a.rows()) {
      throw UsageError("imm: partition of " + std::to_string(shape.size()) + " does not match a " +
                       std::to_string(a.rows()) + "x" + std::to_string(a.rows()) + " matrix");
    }
    value = immanant(shape, a);
  }
  std::cout << format_complex(value) << '\n';
  return kExitPass;
}

// lift ----------------------------------------------------------------------

struct LiftArgs {
  std::string fn;
  std::optional<int> n;
  std::string emit = "text";
  bool trace_one = false;
  bool full_traces = false;
};

struct ResolvedFunction {
  GroupFunction f;
  bool a4 = false;
};

Partition parse_shape(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("lift: ") + e.what());
  }
}

int require_degree(const LiftArgs& args, const std::string& fn) {
  if (!args.n) throw UsageError("lift: --fn " + fn + " needs --n");
  return *args.n;
}

ResolvedFunction resolve_function(const LiftArgs& args) {
  const std::string& fn = args.fn;
  if (fn == "det") return {sign_function(require_degree(args, fn))};
  if (fn == "per") return {constant_function(symmetric_group(require_degree(args, fn)), 1.0)};
  if (fn.starts_with("a4:")) {
    if (args.n && *args.n != 4) throw UsageError("lift: A4 functions live on S4, not S" + std::to_string(*args.n));
    const CharacterTable table = builtin_a4_table();
    const std::string label = fn.substr(3);
    for (std::size_t r = 0; r < table.labels.size(); ++r) {
      if (table.labels[r] == label) return {extend_by_zero(table.rows[r]), true};
    }
    throw UsageError("lift: unknown A4 character '" + label + "' (trivial, chi1, chi2, chi3)");
  }
  if (fn.starts_with("file:")) {
    GroupFunction f = io::function_from_json(io::read_json_file(fn.substr(5)));
    if (args.n && *args.n != f.degree()) throw UsageError("lift: function file is on S" + std::to_string(f.degree()));
    return {f.domain().is_full_symmetric() ? f : extend_by_zero(f)};
  }
  const bool idempotent = fn.starts_with("idem:");
  std::string shape_text = fn;
  if (idempotent) shape_text = fn.substr(5);
  if (fn.starts_with("lambda:")) shape_text = fn.substr(7);
  if (shape_text.empty() || shape_text.find_first_not_of("0123456789,") != std::string::npos) {
    throw UsageError("lift: unknown function '" + fn + "'");
  }
  const Partition shape = parse_shape(shape_text);
  if (args.n && *args.n != shape.size()) {
    throw UsageError("lift: " + shape.to_string() + " is not a partition of " + std::to_string(*args.n));
  }
  if (shape.size() > kMaxDegree) throw UsageError("lift: degree above " + std::to_string(kMaxDegree));
  const GroupFunction chi = symmetric_character(shape);
  return {idempotent ? idempotent_function(chi) : chi};
}

int run_lift(const LiftArgs& args) {
  if (args.n && (*args.n < 1 || *args.n > kMaxDegree)) {
    throw UsageError("lift: --n must be in [1, " + std::to_string(kMaxDegree) + "]");
  }
  if (args.trace_one && args.full_traces) throw UsageError("lift: --trace-one and --full-traces conflict");
  const ResolvedFunction resolved = resolve_function(args);
  const TracePolynomial p = lift_function(resolved.f);
  // A4 lifts are shown trace-one by default, the form they are usually quoted in.
  const bool trace_one = args.trace_one || (resolved.a4 && !args.full_traces);

  if (args.emit == "json") {
    std::cout << io::to_json(trace_one ? specialize_trace_one(p) : p).dump(2) << '\n';
    return kExitPass;
  }
  const RenderStyle style = args.emit == "latex" ? RenderStyle::latex : RenderStyle::text;
  if (trace_one && p.n() == 4) {
    std::cout << render_xyz(p, style) << '\n';
  } else {
    std::cout << render(p, {style, trace_one}) << '\n';
  }
  return kExitPass;
}

// verify / falsify ----------------------------------------------------------

struct RunArgs {
  std::string suite;
  int trials = kDefaultTrials;
  int m = kDefaultDim;
  std::optional<int> n;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  int threads = 0;
  std::string format = "text";
  std::string out;
};

RunOptions run_options(const RunArgs& args) {
  RunOptions options;
  options.trials = args.trials;
  options.m = args.m;
  options.seed = args.seed;
  options.tol = args.tol;
  options.threads = args.threads;
  return options;
}

std::string text_table(const SuiteReport& suite) {
  std::ostringstream out;
  out << "suite " << suite.suite << '\n';
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %-14s %-8s %-10s %s\n", "status", "min_statistic", "failures",
                "defect_max", "spec");
  out << line;
  int passed = 0;
  int gated = 0;
  for (const auto& r : suite.reports) {
    std::snprintf(line, sizeof line, "%-24s %-14.6g %-8d %-10.3g %s (trials %d, m %d)\n", to_string(r.status),
                  r.min_statistic, r.failures, r.hermiticity_defect_max, r.spec_name.c_str(), r.trials, r.dim);
    out << line;
    if (!r.conjecture) {
      ++gated;
      if (r.status == Status::pass) ++passed;
    }
  }
  out << passed << "/" << gated << " checks passed";
  const auto conjectures = suite.reports.size() - static_cast<std::size_t>(gated);
  if (conjectures > 0) out << ", " << conjectures << " conjecture searches";
  out << '\n';
  return out.str();
}

SuiteReport run_named_suite(const RunArgs& args, const std::string& name) {
  SuiteOptions suite_options;
  suite_options.n = args.n;
  std::vector<InequalitySpec> specs;
  try {
    specs = builtin_suite(name, suite_options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return run_suite(name, specs, run_options(args));
}

int run_verify(const RunArgs& args) {
  const SuiteReport report = run_named_suite(args, args.suite);
  write_output(args.format == "json" ? io::to_json(report).dump(2) + "\n" : text_table(report), args.out);
  return report.all_pass() ? kExitPass : kExitFailure;
}

int run_falsify(const RunArgs& args) {
  std::string suite;
  if (args.suite == "perm-dominance") {
    suite = "perm-dominance-scalar";
  } else if (args.suite == "perm-dominance-lifted") {
    suite = "perm-dominance-lifted";
  } else {
    throw UsageError("falsify: unknown conjecture '" + args.suite + "' (perm-dominance, perm-dominance-lifted)");
  }
  SuiteReport report = run_named_suite(args, suite);
  report.suite = args.suite;

  const VerificationReport* worst = nullptr;
  const VerificationReport* refuted = nullptr;
  for (const auto& r : report.reports) {
    if (!worst || r.min_statistic < worst->min_statistic) worst = &r;
    if (r.counterexample && (!refuted || r.counterexample->statistic < refuted->counterexample->statistic)) {
      refuted = &r;
    }
  }

  if (args.format == "json") {
    write_output(io::to_json(report).dump(2) + "\n", args.out);
  } else {
    std::ostringstream out;
    out << text_table(report);
    if (worst) {
      out << "worst margin " << format_double(worst->min_statistic) << " (" << worst->spec_name << ") over "
          << report.reports.size() << " specs x " << args.trials << " trials\n";
    }
    if (refuted) {
      out << "counterexample: " << refuted->spec_name << " trial " << refuted->counterexample->trial << " margin "
          << format_double(refuted->counterexample->statistic) << '\n';
      for (const auto& m : refuted->counterexample->inputs) out << io::to_json(m).dump() << '\n';
    } else {
      out << "no counterexample\n";
    }
    write_output(out.str(), args.out);
  }
  return refuted ? kExitCounterexample : kExitPass;
}

void add_run_flags(CLI::App* cmd, RunArgs& args) {
  cmd->add_option("--trials", args.trials, "Random trials per check")->check(CLI::PositiveNumber);
  cmd->add_option("--m", args.m, "Matrix size for lifted checks")->check(CLI::PositiveNumber);
  cmd->add_option("--n", args.n, "Restrict to degree n")->check(CLI::Range(1, 5));
  cmd->add_option("--seed", args.seed, "RNG seed");
  cmd->add_option("--tol", args.tol, "Tolerance relative to scale")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", args.threads, "Worker threads (0: IMMLIFT_THREADS or hardware)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", args.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", args.out, "Write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Immanants, lifted trace polynomials, and randomized inequality checks"};
  app.require_subcommand(1);

  ImmArgs imm_args;
  auto* imm = app.add_subcommand("imm", "Evaluate an immanant, determinant or permanent");
  imm->add_option("--partition", imm_args.partition, "Partition, e.g. 2,1");
  imm->add_flag("--det", imm_args.det, "Determinant");
  imm->add_flag("--per", imm_args.per, "Permanent");
  imm->add_option("--matrix", imm_args.matrix, "Matrix JSON file")->required();

  LiftArgs lift_args;
  auto* lift = app.add_subcommand("lift", "Print the lifted trace polynomial of a function on S_n");
  lift->add_option("--fn", lift_args.fn, "det | per | 2,1 | lambda:2,1 | idem:2,1 | a4:chi1 | file:path")
      ->required();
  lift->add_option("--n", lift_args.n, "Degree");
  lift->add_option("--emit", lift_args.emit, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
  lift->add_flag("--trace-one", lift_args.trace_one, "Display with tr(X_i) = 1");
  lift->add_flag("--full-traces", lift_args.full_traces, "Keep tr(X_i) factors for A4 functions");

  RunArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a built-in verification suite");
  verify->add_option("--suite", verify_args.suite, "Suite name")->required();
  add_run_flags(verify, verify_args);

  RunArgs falsify_args;
  falsify_args.trials = 10000;
  auto* falsify = app.add_subcommand("falsify", "Search for counterexamples to a conjecture");
  falsify->add_option("--conjecture", falsify_args.suite, "perm-dominance | perm-dominance-lifted")->required();
  add_run_flags(falsify, falsify_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "immlift: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*imm) return run_imm(imm_args);
    if (*lift) return run_lift(lift_args);
    if (*verify) return run_verify(verify_args);
    if (*falsify) return run_falsify(falsify_args);
  } catch (const UsageError& e) {
    std::cerr << "immlift: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "immlift: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "immlift: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "immlift: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
