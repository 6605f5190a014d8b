// Acceptance run: one line per criterion, nonzero exit if any fails.
//
// Expected values come from test-side oracles (direct matrix formulas,
// index sums, exact integer arithmetic) rather than from the library paths
// under test wherever the criterion allows it.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <cstdlib>
#include <limits>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "immlift/gmf.hpp"
#include "immlift/json_io.hpp"
#include "immlift/tracepoly.hpp"
#include "immlift/verifier.hpp"
#include "oracles.hpp"

using namespace immlift;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double min_hermitian_eigenvalue(const ComplexMatrix& e) { return hermitian_eigen(hermitian_part(e)).values.front(); }

const Complex kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

// 1. gmf_value against the tensor-trace oracle on Gram matrices of random vectors.
Outcome tensor_trace_oracle() {
  const auto start = std::chrono::steady_clock::now();
  const CharacterTable a4 = builtin_a4_table();
  double worst = 0.0;
  int evaluations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    const int m = 1 + (trial / 3) % 4;  // Gram dimension
    const ComplexMatrix vectors = [&] {
      ComplexMatrix v(m, n);
      CounterRng rng(derive_key(1001, static_cast<std::uint64_t>(trial)));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) v(i, j) = rng.next_complex_normal();
      return v;
    }();
    const ComplexMatrix a = vectors.adjoint() * vectors;

    std::vector<GroupFunction> fs{sign_function(n), constant_function(symmetric_group(n), 1.0)};
    if (n == 3) fs.push_back(symmetric_character(Partition({2, 1})));
    if (n == 4) {
      for (const auto& chi : a4.rows) fs.push_back(extend_by_zero(chi));
    }
    const double magnitude = std::abs(diagonal_product(a));
    for (const auto& f : fs) {
      const Complex direct = gmf_value(f, a);
      const double denom = std::max(std::abs(direct), magnitude);
      worst = std::max(worst, std::abs(direct - gmf_tensor_oracle(f, a)) / denom);
      worst = std::max(worst, std::abs(direct - gmf_tensor_oracle_from_vectors(f, vectors)) / denom);
      ++evaluations;
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-8 && elapsed < 30.0,
          "max relative error " + fmt("%.3g", worst) + " over " + std::to_string(evaluations) +
              " (trial, f) pairs, " + fmt("%.2f", elapsed) + " s"};
}

// 2. Kostant and closure identities over S4 with 2x2 complex inputs.
Outcome kostant_and_closure() {
  double worst_kostant = 0.0;
  double worst_closure = 0.0;
  for (std::uint64_t tuple = 0; tuple < 50; ++tuple) {
    std::vector<ComplexMatrix> xs;
    double scale = 1.0;
    for (int i = 0; i < 4; ++i) {
      xs.push_back(random_complex(2, derive_key(2002, tuple, static_cast<std::uint64_t>(i))));
      scale *= xs.back().norm();
    }
    const ComplexMatrix big = tensor_product(xs);
    const std::vector<ComplexMatrix> first_three(xs.begin(), xs.end() - 1);
    for (const auto& sigma : enumerate_symmetric(4)) {
      const Complex t = evaluate_T_scalar(sigma, xs);
      const Complex kostant = trace_of_product(permutation_operator(inverse(sigma), 2), big);
      const ComplexMatrix open = evaluate(TracePolynomial(4, {lift_sigma(sigma)}), first_three);
      const Complex closure = oracle::trace(oracle::matmul(open, xs.back()));
      worst_kostant = std::max(worst_kostant, std::abs(t - kostant) / scale);
      worst_closure = std::max(worst_closure, std::abs(t - closure) / scale);
    }
  }
  return {worst_kostant <= 1e-10 && worst_closure <= 1e-10,
          "24 permutations x 50 tuples; max relative error Kostant " + fmt("%.3g", worst_kostant) + ", closure " +
              fmt("%.3g", worst_closure)};
}

// 3. Lifted nonnegativity for every S_n irreducible (n <= 5) and the A4 lifts.
Outcome lifted_nonnegativity() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<InequalitySpec> specs;
  for (const auto& spec : builtin_suite("gmf-nonneg")) {
    if (!spec.is_scalar()) specs.push_back(spec);
  }
  int checks = 0;
  int failed = 0;
  double worst_eig = std::numeric_limits<double>::infinity();
  double worst_defect = 0.0;
  std::string first_failure;
  for (const auto& spec : specs) {
    for (int m : {2, 3}) {
      RunOptions options;
      options.trials = 1000;
      options.m = m;
      options.seed = 3003;
      options.tol = 1e-8;
      const VerificationReport r = check(spec, options);
      ++checks;
      worst_eig = std::min(worst_eig, r.min_statistic);
      worst_defect = std::max(worst_defect, r.hermiticity_defect_max);
      if (r.status != Status::pass || r.hermiticity_defect_max > 1e-9) {
        ++failed;
        if (first_failure.empty()) first_failure = r.spec_name + " m=" + std::to_string(m);
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::string detail = std::to_string(specs.size()) + " lifts x m in {2,3} x 1000 trials; min eigenvalue/scale " +
                       fmt("%.3g", worst_eig) + ", max defect/scale " + fmt("%.3g", worst_defect) + ", " +
                       fmt("%.1f", elapsed) + " s";
  if (!first_failure.empty()) detail += "; first failure " + first_failure;
  return {failed == 0 && checks > 0 && elapsed < 300.0, detail};
}

// 4. A4 closed forms, built directly from X, Y, Z.
Outcome a4_closed_forms() {
  const CharacterTable a4 = builtin_a4_table();
  const TracePolynomial chi1 = lift_function(extend_by_zero(a4.row("chi1")));
  const TracePolynomial chi2 = lift_function(extend_by_zero(a4.row("chi2")));
  const TracePolynomial chi3 = lift_function(extend_by_zero(a4.row("chi3")));
  double worst_match = 0.0;
  double worst_eig = std::numeric_limits<double>::infinity();
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const int m = 2 + static_cast<int>(trial % 2);
    std::vector<ComplexMatrix> xs;
    for (std::uint64_t i = 0; i < 3; ++i) xs.push_back(random_psd(m, derive_key(4004, trial, i), true));
    const auto& x = xs[0];
    const auto& y = xs[1];
    const auto& z = xs[2];
    using oracle::matmul;
    using oracle::trace;
    const ComplexMatrix id = ComplexMatrix::identity(m);
    const ComplexMatrix L = trace(matmul(x, y)) * z + trace(matmul(x, z)) * y + trace(matmul(y, z)) * x;
    const ComplexMatrix M = trace(matmul(matmul(z, y), x)) * id + matmul(x, y) + matmul(y, z) + matmul(z, x);
    const ComplexMatrix form1 = Complex(3.0) * id - L;
    const ComplexMatrix form_w = id + L + kOmega * M + std::conj(kOmega) * M.adjoint();
    const ComplexMatrix form_wbar = id + L + std::conj(kOmega) * M + kOmega * M.adjoint();

    const ComplexMatrix v1 = evaluate(chi1, xs);
    const ComplexMatrix v2 = evaluate(chi2, xs);
    const ComplexMatrix v3 = evaluate(chi3, xs);
    worst_match = std::max({worst_match, max_abs_difference(v1, form1), max_abs_difference(v2, form_wbar),
                            max_abs_difference(v3, form_w)});
    for (const auto* v : {&v1, &v2, &v3}) {
      worst_eig = std::min(worst_eig, min_hermitian_eigenvalue(*v) / std::max(1.0, v->norm()));
    }
  }
  return {worst_match <= 1e-10 && worst_eig >= -1e-8,
          "chi1 = 3-L, chi2 = 1+L+w̄M+wM*, chi3 = 1+L+wM+w̄M*; max entry error " + fmt("%.3g", worst_match) +
              ", min eigenvalue/scale " + fmt("%.3g", worst_eig) + " over 1000 triples"};
}

// 5. Anticommutator sandwich on trace-one pairs.
Outcome anticommutator_sandwich() {
  double worst_lower = std::numeric_limits<double>::infinity();
  double worst_upper = std::numeric_limits<double>::infinity();
  for (int m : {2, 3}) {
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
      const ComplexMatrix x = random_psd(m, derive_key(5005, trial, 2 * static_cast<std::uint64_t>(m)), true);
      const ComplexMatrix y = random_psd(m, derive_key(5005, trial, 2 * static_cast<std::uint64_t>(m) + 1), true);
      const ComplexMatrix xy = oracle::matmul(x, y);
      const ComplexMatrix yx = oracle::matmul(y, x);
      const ComplexMatrix id = ComplexMatrix::identity(m);
      const Complex txy = oracle::trace(xy);
      const ComplexMatrix lower = xy + yx - x - y - (txy - 1.0) * id;
      const ComplexMatrix upper = Complex(2.0 / 3.0) * (x + y + txy * id) - xy - yx;
      worst_lower = std::min(worst_lower, min_hermitian_eigenvalue(lower));
      worst_upper = std::min(worst_upper, min_hermitian_eigenvalue(upper));
    }
  }
  return {worst_lower >= -1e-8 && worst_upper >= -1e-8,
          "2000 pairs; min eigenvalue lower " + fmt("%.3g", worst_lower) + ", upper " + fmt("%.3g", worst_upper)};
}

// 6. The (1,1,1) lift vanishes on 2x2 inputs but not on 3x3.
Outcome lew_identity() {
  const TracePolynomial p = lift_function(symmetric_character(Partition({1, 1, 1})));
  const VerificationReport r = check_identity(p, 2, 500, 6006, 1e-11);
  const double e11[] = {1.0, 0.0, 0.0};
  const double e22[] = {0.0, 1.0, 0.0};
  const std::vector<ComplexMatrix> probe{ComplexMatrix::diagonal(e11), ComplexMatrix::diagonal(e22)};
  const double probe_norm = evaluate(p, probe).operator_norm();
  return {r.status == Status::pass && probe_norm > 0.5,
          "500 complex 2x2 pairs, max normalized operator norm " + fmt("%.3g", -r.min_statistic) +
              "; 3x3 probe operator norm " + fmt("%.3g", probe_norm)};
}

// 7. Appendix scalar inequalities.
Outcome appendix_scalar() {
  RunOptions options;
  options.trials = 1000;
  options.seed = 7007;
  options.tol = 1e-9;
  const auto specs = builtin_suite("appendix-scalar");
  const SuiteReport report = run_suite("appendix-scalar", specs, options);
  double worst = std::numeric_limits<double>::infinity();
  std::string failing;
  for (const auto& r : report.reports) {
    worst = std::min(worst, r.min_statistic);
    if (r.status != Status::pass && failing.empty()) failing = r.spec_name;
  }
  std::string detail = std::to_string(report.reports.size()) + " inequalities x 1000 trials; min margin/scale " +
                       fmt("%.3g", worst);
  if (!failing.empty()) detail += "; first failure " + failing;
  return {report.all_pass(), detail};
}

// 8. Idempotents and orthogonality.
Outcome idempotents_and_orthogonality() {
  double worst = 0.0;
  int count = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& shape : partitions_of(n)) {
      const GroupFunction p = idempotent_function(symmetric_character(shape));
      worst = std::max(worst, convolve(p, p).max_abs_difference(p));
      ++count;
    }
  }
  const CharacterTable a4 = builtin_a4_table();
  for (const auto& chi : a4.rows) {
    const GroupFunction p = idempotent_function(chi);
    worst = std::max(worst, convolve(p, p).max_abs_difference(p));
    ++count;
  }

  bool integer_ok = true;
  for (int n = 1; n <= 8; ++n) {
    std::int64_t order = 1;
    for (int k = 2; k <= n; ++k) order *= k;
    const auto shapes = partitions_of(n);
    for (const auto& a : shapes) {
      for (const auto& b : shapes) {
        std::int64_t sum = 0;
        for (const auto& mu : shapes) sum += (order / centralizer_order(mu)) * mn_character(a, mu) * mn_character(b, mu);
        integer_ok = integer_ok && sum == (a == b ? order : 0);
      }
    }
  }

  double a4_worst = 0.0;
  for (std::size_t r = 0; r < a4.rows.size(); ++r) {
    for (std::size_t s = 0; s < a4.rows.size(); ++s) {
      Complex inner = 0.0;
      for (std::size_t k = 0; k < a4.rows[r].values().size(); ++k) {
        inner += a4.rows[r].values()[k] * std::conj(a4.rows[s].values()[k]);
      }
      inner /= 12.0;
      a4_worst = std::max(a4_worst, std::abs(inner - (r == s ? 1.0 : 0.0)));
    }
  }
  return {worst <= 1e-12 && integer_ok && a4_worst <= 1e-12,
          std::to_string(count) + " idempotents, max |p*p - p| " + fmt("%.3g", worst) +
              "; S_n (n<=8) integer orthogonality " + (integer_ok ? "exact" : "VIOLATED") + "; A4 max deviation " +
              fmt("%.3g", a4_worst)};
}

// 9. Byte-identical CLI reports across thread counts.
Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("immlift-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  for (int threads : {1, 1, 4, 8}) {
    const fs::path out = dir / ("report-" + std::to_string(outputs.size()) + ".json");
    const std::string cmd = std::string(IMMLIFT_CLI) +
                            " verify --suite watkins-a4 --trials 500 --m 3 --seed 9009 --format json --threads " +
                            std::to_string(threads) + " --out " + out.string();
    const int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {false, "verify exited abnormally"};
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    outputs.push_back(ss.str());
  }
  fs::remove_all(dir);
  bool same = !outputs.front().empty();
  for (const auto& o : outputs) same = same && o == outputs.front();
  return {same, "4 runs (threads 1,1,4,8), " + std::to_string(outputs.front().size()) + " bytes each, " +
                    (same ? "identical" : "DIFFERENT")};
}

// 10. Permanent dominance search; a negative margin is saved for replay.
Outcome permanent_dominance() {
  SuiteOptions suite_options;
  RunOptions options;
  options.trials = 10000;
  options.m = 3;
  options.seed = 10010;
  double worst = std::numeric_limits<double>::infinity();
  std::string worst_name;
  std::vector<VerificationReport> refuted;
  int specs = 0;
  for (int n : {3, 4, 5}) {
    suite_options.n = n;
    const auto report = run_suite("perm-dominance", builtin_suite("perm-dominance", suite_options), options);
    for (const auto& r : report.reports) {
      ++specs;
      if (r.min_statistic < worst) {
        worst = r.min_statistic;
        worst_name = r.spec_name;
      }
      if (r.counterexample) refuted.push_back(r);
    }
  }
  std::string detail = std::to_string(specs) + " scalar and lifted specs x 10^4 trials; worst margin " +
                       fmt("%.3g", worst) + " (" + worst_name + ")";
  if (!refuted.empty()) {
    const std::string path = "perm-dominance-counterexamples.json";
    nlohmann::json artifacts = nlohmann::json::array();
    for (const auto& r : refuted) artifacts.push_back(io::to_json(r));
    std::ofstream(path) << artifacts.dump(2) << '\n';
    detail += "; counterexamples written to " + path;
  }
  return {worst >= 0.0 && refuted.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "tensor-trace oracle equivalence", tensor_trace_oracle},
      {2, "Kostant and closure identities", kostant_and_closure},
      {3, "lifted nonnegativity", lifted_nonnegativity},
      {4, "A4 closed forms", a4_closed_forms},
      {5, "anticommutator bounds", anticommutator_sandwich},
      {6, "polarized Cayley-Hamilton identity", lew_identity},
      {7, "scalar appendix inequalities", appendix_scalar},
      {8, "idempotency and orthogonality", idempotents_and_orthogonality},
      {9, "determinism across thread counts", determinism},
      {10, "permanent dominance search", permanent_dominance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s  [%2d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
