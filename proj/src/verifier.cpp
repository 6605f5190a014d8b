#include "immlift/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "immlift/gmf.hpp"

namespace immlift {

namespace {

std::string label(const Partition& shape) {
  std::string out;
  for (std::size_t i = 0; i < shape.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(shape.parts()[i]);
  }
  return out;
}

std::vector<int> degrees(const SuiteOptions& options, int lo, int hi) {
  if (options.n) {
    if (*options.n < 1 || *options.n > 5) {
      throw std::invalid_argument("suite degree must be in [1, 5], got " + std::to_string(*options.n));
    }
    return {*options.n};
  }
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

bool wants(const SuiteOptions& options, int n) { return !options.n || *options.n == n; }

GroupFunction normalized_character(const Partition& shape) {
  return symmetric_character(shape) * Complex(1.0 / static_cast<double>(hook_degree(shape)), 0.0);
}

TracePolynomial identity_term(int n, Complex c) { return TracePolynomial(n, {TraceTerm(c, {}, {})}); }


struct Entry {
  std::string name;
  double alpha;
  GroupFunction f;
  double beta;
  GroupFunction g;
  bool conjecture = false;
  std::string statement;
};

// Appendix inequalities as alpha d_f - beta d_g >= 0.
std::vector<Entry> appendix_entries(const SuiteOptions& options, bool include_conjecture) {
  std::vector<Entry> out;
  for (int n : degrees(options, 2, 5)) {
    auto group = symmetric_group(n);
    const GroupFunction delta = identity_indicator(group);
    const GroupFunction sgn = sign_function(n);
    const GroupFunction ones = constant_function(group, 1.0);
    const std::string suffix = "/n" + std::to_string(n);

    out.push_back({"hadamard" + suffix, 1.0, delta, 1.0, sgn, false, "prod a_ii - det(A) >= 0"});
    for (const auto& shape : partitions_of(n)) {
      out.push_back({"schur" + suffix + "/" + label(shape), 1.0, normalized_character(shape), 1.0, sgn,
                     false, "imm_lambda(A)/chi_lambda(e) - det(A) >= 0"});
    }
    out.push_back({"marcus" + suffix, 1.0, ones, 1.0, delta, false, "per(A) - prod a_ii >= 0"});

    if (options.n || n >= 4) {
      for (int arm = 1; arm < n; ++arm) {
        const Partition lower = Partition::hook(n, arm);
        const Partition upper = Partition::hook(n, arm + 1);
        out.push_back({"heyfron" + suffix + "/" + label(upper) + "-vs-" + label(lower), 1.0,
                       normalized_character(upper), 1.0, normalized_character(lower), false,
                       "normalized immanants increase along the single-hook chain"});
      }
    }

    if (options.n ? n >= 2 : (n == 3 || n == 4)) {
      for (const auto& shape : partitions_of(n)) {
        const GroupFunction chi = symmetric_character(shape);
        const GroupFunction idem = idempotent_function(chi);
        out.push_back({"watkins" + suffix + "/chi" + label(shape), 1.0, chi, chi.at_identity().real(),
                       sgn, false, "d_f(A) - f(e) det(A) >= 0"});
        out.push_back({"watkins" + suffix + "/idempotent" + label(shape), 1.0, idem,
                       idem.at_identity().real(), sgn, false, "d_f(A) - f(e) det(A) >= 0"});
      }
    }

    if (include_conjecture) {
      for (const auto& shape : partitions_of(n)) {
        if (shape.rows() == 1) continue;
        out.push_back({"perm-dominance" + suffix + "/" + label(shape), 1.0, ones, 1.0,
                       normalized_character(shape), true, "per(A) - imm_lambda(A)/chi_lambda(e) >= 0"});
      }
    }
  }
  return out;
}

std::vector<InequalitySpec> perm_dominance_specs(const SuiteOptions& options, bool scalar, bool lifted) {
  std::vector<InequalitySpec> out;
  for (int n : degrees(options, 2, 5)) {
    auto group = symmetric_group(n);
    const GroupFunction ones = constant_function(group, 1.0);
    for (const auto& shape : partitions_of(n)) {
      if (shape.rows() == 1) continue;
      const std::string base = "perm-dominance/n" + std::to_string(n) + "/" + label(shape);
      const GroupFunction normalized = normalized_character(shape);
      if (scalar) {
        auto spec = InequalitySpec::scalar(base + "/scalar", 1.0, ones, 1.0, normalized);
        spec.conjecture = true;
        spec.statement = "per(A) - imm_lambda(A)/chi_lambda(e) >= 0 (open conjecture)";
        out.push_back(std::move(spec));
      }
      if (lifted) {
        auto spec = InequalitySpec::loewner(base + "/lifted", 1.0, lift_function(ones), 1.0,
                                            lift_function(normalized));
        spec.conjecture = true;
        spec.statement = "lift of per - imm_lambda/chi_lambda(e) >= 0 (open conjecture)";
        out.push_back(std::move(spec));
      }
    }
  }
  return out;
}

std::vector<InequalitySpec> gmf_nonneg_suite(const SuiteOptions& options) {
  std::vector<InequalitySpec> out;
  for (int n : degrees(options, 1, 5)) {
    for (const auto& shape : partitions_of(n)) {
      const GroupFunction chi = symmetric_character(shape);
      const std::string base = "gmf-nonneg/S" + std::to_string(n) + "/chi" + label(shape);
      auto scalar = InequalitySpec::scalar(base + "/scalar", chi);
      scalar.statement = "imm_lambda(A) >= 0";
      out.push_back(std::move(scalar));
      auto lifted = InequalitySpec::loewner(base + "/lifted", lift_function(chi));
      lifted.statement = "lifted immanant is PSD";
      out.push_back(std::move(lifted));
    }
  }
  if (wants(options, 4)) {
    const CharacterTable a4 = builtin_a4_table();
    for (std::size_t r = 0; r < a4.rows.size(); ++r) {
      const std::string base = "gmf-nonneg/A4/" + a4.labels[r];
      auto scalar = InequalitySpec::scalar(base + "/scalar", a4.rows[r]);
      scalar.statement = "d^{A4}_chi(A) >= 0";
      out.push_back(std::move(scalar));
      auto lifted = InequalitySpec::loewner(base + "/lifted", lift_function(extend_by_zero(a4.rows[r])));
      lifted.statement = "lift of the zero-extended A4 character is PSD";
      out.push_back(std::move(lifted));
    }
  }
  return out;
}

GroupFunction a4_character(const std::string& which) {
  return extend_by_zero(builtin_a4_table().row(which));
}

std::vector<InequalitySpec> a4_examples_suite() {
  const Complex w = omega();
  std::vector<InequalitySpec> out;
  auto add_psd = [&](std::string name, TracePolynomial p, std::string statement) {
    auto spec = InequalitySpec::loewner(std::move(name), std::move(p));
    spec.trace_one = true;
    spec.statement = std::move(statement);
    out.push_back(std::move(spec));
  };
  add_psd("a4-examples/chi1/closed-form-psd", closed_forms::a4_chi1(), "3·𝟙 − L >= 0");
  add_psd("a4-examples/chi2/closed-form-psd", closed_forms::a4_rotated(std::conj(w), w),
          "𝟙 + L + ω̄M + ωM* >= 0");
  add_psd("a4-examples/chi3/closed-form-psd", closed_forms::a4_rotated(w, std::conj(w)),
          "𝟙 + L + ωM + ω̄M* >= 0");

  auto equivalence = InequalitySpec::identity(
      "a4-examples/chi2/lift-equals-closed-form",
      lift_function(a4_character("chi2")) - closed_forms::a4_rotated(std::conj(w), w));
  equivalence.trace_one = true;
  equivalence.statement = "lift of chi2 (zero-extended) equals 𝟙 + L + ω̄M + ωM* on trace-one inputs";
  out.push_back(std::move(equivalence));
  return out;
}

std::vector<InequalitySpec> watkins_a4_suite() {
  std::vector<InequalitySpec> out;
  auto closed = InequalitySpec::loewner("watkins-a4/closed-form-psd", closed_forms::watkins_a4());
  closed.trace_one = true;
  closed.statement = "(ω−1)M + (ω̄−1)M* + tr(L)𝟙 + X + Y + Z + X{Y,Z} + Y{Z,X} + Z{X,Y} >= 0";
  out.push_back(std::move(closed));

  // With T~ built from the canonical cycle order, the omega-weighted M block
  // comes from the character taking the value omega-bar on (123).
  const GroupFunction chi3 = a4_character("chi3");
  auto cross = InequalitySpec::identity(
      "watkins-a4/closed-form-equals-lift",
      lift_function(chi3 - sign_function(4) * chi3.at_identity()) - closed_forms::watkins_a4());
  cross.trace_one = true;
  cross.statement = "closed form equals lift of chi3 - chi3(e)·sign on trace-one inputs";
  out.push_back(std::move(cross));

  const GroupFunction chi2 = a4_character("chi2");
  auto lifted = InequalitySpec::loewner("watkins-a4/chi2-lift-psd", 1.0, lift_function(chi2),
                                        chi2.at_identity().real(), lift_function(sign_function(4)));
  lifted.trace_one = true;
  lifted.statement = "lift of chi2 - chi2(e)·sign is PSD";
  out.push_back(std::move(lifted));
  return out;
}

std::vector<InequalitySpec> anticommutator_suite() {
  std::vector<InequalitySpec> out;
  auto lower = InequalitySpec::loewner("anticommutator/lower-bound", closed_forms::anticommutator_lower());
  lower.trace_one = true;
  lower.statement = "XY + YX >= X + Y + [tr(XY) − 1]𝟙";
  out.push_back(std::move(lower));

  auto upper = InequalitySpec::loewner("anticommutator/upper-bound", closed_forms::anticommutator_upper());
  upper.trace_one = true;
  upper.statement = "(2/3)(X + Y + tr(XY)𝟙) >= XY + YX";
  out.push_back(std::move(upper));

  const TracePolynomial det_lift = lift_function(sign_function(3));
  auto lower_src = InequalitySpec::identity("anticommutator/lower-bound-equals-det-lift",
                                            det_lift - closed_forms::anticommutator_lower());
  lower_src.trace_one = true;
  lower_src.statement = "lower bound is the lift of det";
  out.push_back(std::move(lower_src));

  const GroupFunction idem = idempotent_function(symmetric_character(Partition({2, 1})));
  const TracePolynomial watkins =
      lift_function(idem) - Complex(idem.at_identity().real(), 0.0) * det_lift;
  auto upper_src = InequalitySpec::identity("anticommutator/upper-bound-equals-watkins-lift",
                                            watkins - closed_forms::anticommutator_upper());
  upper_src.trace_one = true;
  upper_src.statement = "upper bound is the lift of p_(2,1) - (2/3) det";
  out.push_back(std::move(upper_src));
  return out;
}

std::vector<InequalitySpec> lew_suite() {
  auto spec = InequalitySpec::identity("lew-identity/chi1,1,1/m2",
                                       lift_function(symmetric_character(Partition({1, 1, 1}))));
  spec.sampler = Sampler::complex;
  spec.fixed_m = 2;
  spec.statement = "lift of chi_(1,1,1) vanishes on 2x2 complex matrices";
  return {spec};
}

std::vector<InequalitySpec> appendix_scalar_suite(const SuiteOptions& options) {
  std::vector<InequalitySpec> out;
  for (const auto& e : appendix_entries(options, false)) {
    auto spec = InequalitySpec::scalar("appendix-scalar/" + e.name, e.alpha, e.f, e.beta, e.g);
    spec.statement = e.statement;
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<InequalitySpec> appendix_lifted_suite(const SuiteOptions& options) {
  std::vector<InequalitySpec> out;
  for (const auto& e : appendix_entries(options, true)) {
    auto spec = InequalitySpec::loewner("appendix-lifted/" + e.name, e.alpha, lift_function(e.f), e.beta,
                                        lift_function(e.g));
    spec.conjecture = e.conjecture;
    spec.statement = "lift of: " + e.statement;
    out.push_back(std::move(spec));
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigen(hermitian_part(m)).values.front();
}

}  // namespace

Complex omega() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

InequalitySpec InequalitySpec::scalar(std::string name, const GroupFunction& f) {
  InequalitySpec spec;
  spec.name = std::move(name);
  spec.kind = InequalityKind::scalar_nonneg;
  spec.n = f.degree();
  spec.functions = {{Complex(1.0, 0.0), f}};
  return spec;
}

InequalitySpec InequalitySpec::scalar(std::string name, double alpha, const GroupFunction& f, double beta,
                                      const GroupFunction& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("scalar difference: degree mismatch");
  InequalitySpec spec;
  spec.name = std::move(name);
  spec.kind = InequalityKind::scalar_difference;
  spec.n = f.degree();
  spec.functions = {{Complex(alpha, 0.0), f}, {Complex(-beta, 0.0), g}};
  return spec;
}

InequalitySpec InequalitySpec::loewner(std::string name, TracePolynomial p) {
  InequalitySpec spec;
  spec.name = std::move(name);
  spec.kind = InequalityKind::loewner_nonneg;
  spec.n = p.n();
  spec.polynomials = {{Complex(1.0, 0.0), std::move(p)}};
  return spec;
}

InequalitySpec InequalitySpec::loewner(std::string name, double alpha, TracePolynomial p, double beta,
                                       TracePolynomial q) {
  if (p.n() != q.n()) throw std::invalid_argument("Loewner difference: arity mismatch");
  InequalitySpec spec;
  spec.name = std::move(name);
  spec.kind = InequalityKind::loewner_difference;
  spec.n = p.n();
  spec.polynomials = {{Complex(alpha, 0.0), std::move(p)}, {Complex(-beta, 0.0), std::move(q)}};
  return spec;
}

InequalitySpec InequalitySpec::identity(std::string name, TracePolynomial p) {
  InequalitySpec spec;
  spec.name = std::move(name);
  spec.kind = InequalityKind::matrix_identity;
  spec.n = p.n();
  spec.polynomials = {{Complex(1.0, 0.0), std::move(p)}};
  return spec;
}

bool InequalitySpec::is_scalar() const {
  return kind == InequalityKind::scalar_nonneg || kind == InequalityKind::scalar_difference;
}

int InequalitySpec::variables() const { return is_scalar() ? 1 : n - 1; }

const char* to_string(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::scalar_nonneg: return "scalar-nonneg";
    case InequalityKind::scalar_difference: return "scalar-difference";
    case InequalityKind::loewner_nonneg: return "loewner-nonneg";
    case InequalityKind::loewner_difference: return "loewner-difference";
    case InequalityKind::matrix_identity: return "matrix-identity";
  }
  return "unknown";
}

const char* to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::counterexample: return "counterexample";
    case Status::no_counterexample: return "no counterexample found";
  }
  return "unknown";
}

std::vector<ComplexMatrix> draw_inputs(const InequalitySpec& spec, int dim, std::uint64_t seed, int trial) {
  std::vector<ComplexMatrix> inputs;
  const int count = spec.variables();
  for (int slot = 0; slot < count; ++slot) {
    const std::uint64_t key = derive_key(seed, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(slot));
    if (spec.sampler == Sampler::complex) {
      inputs.push_back(random_complex(dim, key));
    } else {
      inputs.push_back(random_psd(dim, key, spec.trace_one));
    }
  }
  return inputs;
}

TrialOutcome evaluate_trial(const InequalitySpec& spec, const std::vector<ComplexMatrix>& inputs, int dim) {
  TrialOutcome out;
  if (spec.is_scalar()) {
    if (inputs.size() != 1) throw std::invalid_argument("scalar trial takes one matrix");
    const ComplexMatrix& a = inputs.front();
    Complex value{};
    double weight_norm = 0.0;
    for (const auto& [weight, f] : spec.functions) {
      value += weight * gmf_value(f, a);
      weight_norm += std::abs(weight) * f.l1_norm();
    }
    // |prod_t a(t, s(t))| <= prod_i a_ii for PSD A bounds every summand.
    const double diag = std::abs(diagonal_product(a));
    out.scale = std::max(weight_norm * diag, std::numeric_limits<double>::min());
    out.statistic = value.real() / out.scale;
    out.defect = std::abs(value.imag()) / out.scale;
    return out;
  }

  if (static_cast<int>(inputs.size()) != spec.n - 1) {
    throw std::invalid_argument("spec " + spec.name + " takes " + std::to_string(spec.n - 1) +
                                " matrices, got " + std::to_string(inputs.size()));
  }
  if (!inputs.empty()) dim = inputs.front().rows();
  if (dim < 1) throw std::invalid_argument("spec " + spec.name + " has no inputs; a dimension is required");
  ComplexMatrix total(dim, dim);
  double magnitude = 0.0;
  for (const auto& [weight, p] : spec.polynomials) {
    total += evaluate(p, inputs, dim) * weight;
    magnitude += std::abs(weight) * evaluate_magnitude(p, inputs, dim);
  }
  out.scale = std::max(1.0, magnitude);
  if (spec.kind == InequalityKind::matrix_identity) {
    out.statistic = -total.operator_norm() / out.scale;
    return out;
  }
  out.defect = (total - total.adjoint()).norm() / out.scale;
  out.statistic = min_eigenvalue(total) / out.scale;
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IMMLIFT_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

VerificationReport run_trials(const InequalitySpec& spec, const RunOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be positive");
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const int dim = spec.is_scalar() ? spec.n : spec.fixed_m.value_or(options.m);
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(options.trials));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (int t = next++; t < options.trials && !failed; t = next++) {
      try {
        outcomes[static_cast<std::size_t>(t)] = evaluate_trial(spec, draw_inputs(spec, dim, options.seed, t), dim);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  const int workers = std::min(resolve_threads(options.threads), options.trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  VerificationReport report;
  report.spec_name = spec.name;
  report.kind = to_string(spec.kind);
  report.trials = options.trials;
  report.dim = dim;
  report.seed = options.seed;
  report.tolerance = options.tol;
  report.conjecture = spec.conjecture;
  report.min_statistic = std::numeric_limits<double>::infinity();
  int worst = -1;
  for (int t = 0; t < options.trials; ++t) {
    const auto& o = outcomes[static_cast<std::size_t>(t)];
    const bool bad = o.statistic < -options.tol || o.defect > options.tol;
    if (bad) {
      ++report.failures;
      if (worst < 0 || o.statistic < outcomes[static_cast<std::size_t>(worst)].statistic) worst = t;
    }
    report.min_statistic = std::min(report.min_statistic, o.statistic);
    report.hermiticity_defect_max = std::max(report.hermiticity_defect_max, o.defect);
  }
  if (worst >= 0) {
    report.counterexample = Counterexample{worst, draw_inputs(spec, dim, options.seed, worst),
                                           outcomes[static_cast<std::size_t>(worst)].statistic};
  }
  if (report.failures == 0) {
    report.status = spec.conjecture ? Status::no_counterexample : Status::pass;
  } else if (spec.kind == InequalityKind::matrix_identity) {
    report.status = Status::fail;
  } else {
    report.status = Status::counterexample;
  }
  return report;
}

}  // namespace

VerificationReport check(const InequalitySpec& spec, const RunOptions& options) {
  if (spec.is_scalar()) return check_scalar(spec, options);
  if (spec.kind == InequalityKind::matrix_identity) return check_identity(spec, options);
  return check_loewner(spec, options);
}

VerificationReport check_loewner(const InequalitySpec& spec, const RunOptions& options) {
  if (spec.kind != InequalityKind::loewner_nonneg && spec.kind != InequalityKind::loewner_difference) {
    throw std::invalid_argument("check_loewner: spec " + spec.name + " is " + to_string(spec.kind));
  }
  if (spec.polynomials.empty()) throw std::invalid_argument("check_loewner: spec has no polynomial");
  for (const auto& wp : spec.polynomials) {
    if (wp.polynomial.n() != spec.n) throw std::invalid_argument("check_loewner: arity mismatch in " + spec.name);
  }
  return run_trials(spec, options);
}

VerificationReport check_scalar(const InequalitySpec& spec, const RunOptions& options) {
  if (!spec.is_scalar()) {
    throw std::invalid_argument("check_scalar: spec " + spec.name + " is " + to_string(spec.kind));
  }
  if (spec.functions.empty()) throw std::invalid_argument("check_scalar: spec has no function");
  for (const auto& wf : spec.functions) {
    if (wf.function.degree() != spec.n) throw std::invalid_argument("check_scalar: arity mismatch in " + spec.name);
  }
  return run_trials(spec, options);
}

VerificationReport check_identity(const InequalitySpec& spec, const RunOptions& options) {
  if (spec.kind != InequalityKind::matrix_identity) {
    throw std::invalid_argument("check_identity: spec " + spec.name + " is " + to_string(spec.kind));
  }
  for (const auto& wp : spec.polynomials) {
    if (wp.polynomial.n() != spec.n) throw std::invalid_argument("check_identity: arity mismatch in " + spec.name);
  }
  return run_trials(spec, options);
}

VerificationReport check_identity(const TracePolynomial& p, int m, int trials, std::uint64_t seed, double tol) {
  auto spec = InequalitySpec::identity("identity", p);
  spec.sampler = Sampler::complex;
  RunOptions options;
  options.trials = trials;
  options.m = m;
  options.seed = seed;
  options.tol = tol;
  return check_identity(spec, options);
}

std::vector<std::string> suite_names() {
  return {"gmf-nonneg",      "a4-examples",     "watkins-a4",     "anticommutator",
          "lew-identity",    "appendix-scalar", "appendix-lifted", "perm-dominance"};
}

std::vector<InequalitySpec> builtin_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "gmf-nonneg") return gmf_nonneg_suite(options);
  if (name == "a4-examples") return a4_examples_suite();
  if (name == "watkins-a4") return watkins_a4_suite();
  if (name == "anticommutator") return anticommutator_suite();
  if (name == "lew-identity") return lew_suite();
  if (name == "appendix-scalar") return appendix_scalar_suite(options);
  if (name == "appendix-lifted") return appendix_lifted_suite(options);
  if (name == "perm-dominance") return perm_dominance_specs(options, true, true);
  if (name == "perm-dominance-scalar") return perm_dominance_specs(options, true, false);
  if (name == "perm-dominance-lifted") return perm_dominance_specs(options, false, true);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

bool SuiteReport::all_pass() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.conjecture || r.status == Status::pass; });
}

bool SuiteReport::conjecture_refuted() const {
  return std::any_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
    return r.conjecture && r.status == Status::counterexample;
  });
}

SuiteReport run_suite(const std::string& name, const std::vector<InequalitySpec>& specs,
                      const RunOptions& options) {
  SuiteReport out{name, {}};
  for (const auto& spec : specs) out.reports.push_back(check(spec, options));
  return out;
}

namespace closed_forms {

TracePolynomial a4_chi1() { return identity_term(4, 3.0) - block_L(); }

TracePolynomial a4_rotated(Complex a, Complex b) {
  return identity_term(4, 1.0) + block_L() + a * block_M() + b * block_M_adjoint();
}

TracePolynomial watkins_a4() {
  const Complex w = omega();
  TracePolynomial out = (w - 1.0) * block_M() + (std::conj(w) - 1.0) * block_M_adjoint();
  out += TracePolynomial(4, {
                                TraceTerm(1.0, {{1, 2}}, {}),  // tr(L) with tr(X) = tr(Y) = tr(Z) = 1
                                TraceTerm(1.0, {{1, 3}}, {}),
                                TraceTerm(1.0, {{2, 3}}, {}),
                                TraceTerm(1.0, {}, {1}),
                                TraceTerm(1.0, {}, {2}),
                                TraceTerm(1.0, {}, {3}),
                                TraceTerm(1.0, {}, {1, 2, 3}),  // X{Y,Z}
                                TraceTerm(1.0, {}, {1, 3, 2}),
                                TraceTerm(1.0, {}, {2, 3, 1}),  // Y{Z,X}
                                TraceTerm(1.0, {}, {2, 1, 3}),
                                TraceTerm(1.0, {}, {3, 1, 2}),  // Z{X,Y}
                                TraceTerm(1.0, {}, {3, 2, 1}),
                            });
  return out;
}

TracePolynomial anticommutator_lower() {
  return TracePolynomial(3, {TraceTerm(1.0, {}, {1, 2}), TraceTerm(1.0, {}, {2, 1}),
                             TraceTerm(-1.0, {}, {1}), TraceTerm(-1.0, {}, {2}),
                             TraceTerm(-1.0, {{1, 2}}, {}), TraceTerm(1.0, {}, {})});
}

TracePolynomial anticommutator_upper() {
  const double two_thirds = 2.0 / 3.0;
  return TracePolynomial(3, {TraceTerm(two_thirds, {}, {1}), TraceTerm(two_thirds, {}, {2}),
                             TraceTerm(two_thirds, {{1, 2}}, {}), TraceTerm(-1.0, {}, {1, 2}),
                             TraceTerm(-1.0, {}, {2, 1})});
}

}  // namespace closed_forms

}  // namespace immlift
