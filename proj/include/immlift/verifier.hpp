#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "immlift/characters.hpp"
#include "immlift/matcore.hpp"
#include "immlift/tracepoly.hpp"

namespace immlift {

enum class InequalityKind {
  scalar_nonneg,       // d_f(A) >= 0
  scalar_difference,   // alpha d_f(A) - beta d_g(A) >= 0
  loewner_nonneg,      // P(X_1..X_{n-1}) >= 0 in the Loewner order
  loewner_difference,  // alpha P - beta Q >= 0
  matrix_identity,     // P(X_1..X_{n-1}) == 0
};

enum class Sampler {
  psd,      // random_psd, optionally trace one
  complex,  // i.i.d. complex Gaussian entries
};

struct WeightedFunction {
  Complex weight;
  GroupFunction function;
};

struct WeightedPolynomial {
  Complex weight;
  TracePolynomial polynomial;
};

/// A named inequality. Scalar kinds use `functions` (margin is the real part
/// of sum_k w_k d_{f_k}(A)); the other kinds use `polynomials`. Difference
/// kinds store beta as the negated weight of the second entry.
struct InequalitySpec {
  std::string name;
  InequalityKind kind = InequalityKind::scalar_nonneg;
  int n = 1;
  std::vector<WeightedFunction> functions;
  std::vector<WeightedPolynomial> polynomials;
  Sampler sampler = Sampler::psd;
  bool trace_one = false;
  std::optional<int> fixed_m;  // overrides the run's m (identity checks)
  bool conjecture = false;
  std::string statement;

  static InequalitySpec scalar(std::string name, const GroupFunction& f);
  static InequalitySpec scalar(std::string name, double alpha, const GroupFunction& f, double beta,
                               const GroupFunction& g);
  static InequalitySpec loewner(std::string name, TracePolynomial p);
  static InequalitySpec loewner(std::string name, double alpha, TracePolynomial p, double beta,
                                TracePolynomial q);
  static InequalitySpec identity(std::string name, TracePolynomial p);

  bool is_scalar() const;
  /// Number of random matrices drawn per trial.
  int variables() const;
};

const char* to_string(InequalityKind kind);

enum class Status { pass, fail, counterexample, no_counterexample };

const char* to_string(Status status);

struct Counterexample {
  int trial = 0;
  std::vector<ComplexMatrix> inputs;
  double statistic = 0.0;
};

/// `min_statistic` is the worst normalized margin over all trials: the
/// smallest eigenvalue (Loewner kinds) or scalar margin divided by the
/// trial's scale, or minus the normalized operator norm for identities. A
/// trial fails when it falls below -tolerance or, for Loewner and scalar
/// kinds, when the normalized Hermiticity/imaginary defect exceeds tolerance.
struct VerificationReport {
  std::string spec_name;
  std::string kind;
  int trials = 0;
  int dim = 0;
  std::uint64_t seed = 0;
  double min_statistic = 0.0;
  double hermiticity_defect_max = 0.0;
  int failures = 0;
  double tolerance = 0.0;
  Status status = Status::pass;
  bool conjecture = false;
  std::optional<Counterexample> counterexample;
};

inline constexpr int kDefaultTrials = 1000;
inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr int kDefaultDim = 3;

struct RunOptions {
  int trials = kDefaultTrials;
  int m = kDefaultDim;  // matrix size for Loewner and identity kinds
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  /// Worker count; 0 reads IMMLIFT_THREADS, falling back to the hardware count.
  int threads = 0;
};

struct TrialOutcome {
  double statistic = 0.0;  // normalized margin
  double defect = 0.0;     // normalized Hermiticity (or imaginary-part) defect
  double scale = 1.0;
};

/// Draws the inputs of one trial (deterministic in spec, dim, seed, trial).
std::vector<ComplexMatrix> draw_inputs(const InequalitySpec& spec, int dim, std::uint64_t seed, int trial);

/// Evaluates one trial on explicit inputs; also replays counterexamples.
/// `dim` is only consulted when the spec takes no matrices (n = 1).
TrialOutcome evaluate_trial(const InequalitySpec& spec, const std::vector<ComplexMatrix>& inputs, int dim = -1);

/// Dispatches on spec.kind.
VerificationReport check(const InequalitySpec& spec, const RunOptions& options);

/// Loewner kinds only; throws std::invalid_argument otherwise.
VerificationReport check_loewner(const InequalitySpec& spec, const RunOptions& options);
/// Scalar kinds only; matrices are spec.n x spec.n.
VerificationReport check_scalar(const InequalitySpec& spec, const RunOptions& options);
/// matrix_identity only.
VerificationReport check_identity(const InequalitySpec& spec, const RunOptions& options);

/// Identity check of a bare polynomial on complex m x m inputs.
VerificationReport check_identity(const TracePolynomial& p, int m, int trials, std::uint64_t seed, double tol);

int resolve_threads(int requested);

struct SuiteOptions {
  /// Restricts suites that range over n to this degree.
  std::optional<int> n;
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown name.
std::vector<InequalitySpec> builtin_suite(const std::string& name, const SuiteOptions& options = {});

struct SuiteReport {
  std::string suite;
  std::vector<VerificationReport> reports;
  /// True iff every non-conjecture report passed.
  bool all_pass() const;
  /// True iff some conjecture report holds a counterexample.
  bool conjecture_refuted() const;
};

SuiteReport run_suite(const std::string& name, const std::vector<InequalitySpec>& specs,
                      const RunOptions& options);

/// Closed forms from the A4 family, in X = X1, Y = X2, Z = X3 with trace one.
namespace closed_forms {
/// 3·𝟙 − L
TracePolynomial a4_chi1();
/// 𝟙 + L + a·M + b·M*
TracePolynomial a4_rotated(Complex a, Complex b);
/// (ω−1)M + (ω̄−1)M* + tr(L)𝟙 + X + Y + Z + X{Y,Z} + Y{Z,X} + Z{X,Y}
TracePolynomial watkins_a4();
/// XY + YX − X − Y − [tr(XY) − 1]𝟙
TracePolynomial anticommutator_lower();
/// (2/3)(X + Y + tr(XY)𝟙) − XY − YX
TracePolynomial anticommutator_upper();
}  // namespace closed_forms

Complex omega();

}  // namespace immlift
