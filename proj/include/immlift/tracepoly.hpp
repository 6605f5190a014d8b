#pragma once

#include <span>
#include <string>
#include <vector>

#include "immlift/characters.hpp"
#include "immlift/matcore.hpp"

namespace immlift {

/// One monomial  c * tr(w_1) ... tr(w_k) * X_{o_1} ... X_{o_r}  of a trace
/// polynomial in X_1..X_{n-1}. An empty open word stands for the identity.
struct TraceTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<std::vector<int>> traced;  // each word in least rotation; words sorted
  std::vector<int> open;                 // order significant

  TraceTerm() = default;
  /// Normalizes the traced words (cyclic rotation + sort). Empty traced words are rejected.
  TraceTerm(Complex coefficient, std::vector<std::vector<int>> traced, std::vector<int> open);

  bool same_monomial(const TraceTerm& other) const {
    return traced == other.traced && open == other.open;
  }
};

/// Least lexicographic rotation of a cyclic word.
std::vector<int> canonical_rotation(std::vector<int> word);

inline constexpr double kTermDropThreshold = 1e-14;

/// Formal sum of trace terms in n-1 matrix variables.
class TracePolynomial {
 public:
  explicit TracePolynomial(int n = 1) : n_(n) {}
  /// Collects `terms`: equal monomials merge in order of first occurrence and
  /// coefficients with |c| <= kTermDropThreshold are dropped.
  TracePolynomial(int n, std::vector<TraceTerm> terms);

  int n() const { return n_; }
  int arity() const { return n_ - 1; }
  const std::vector<TraceTerm>& terms() const { return terms_; }

  TracePolynomial& operator+=(const TracePolynomial& other);
  TracePolynomial& operator-=(const TracePolynomial& other);
  TracePolynomial& operator*=(Complex scale);
  friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
  friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
  friend TracePolynomial operator*(Complex s, TracePolynomial p) { return p *= s; }

  /// Coefficient of the given monomial (zero if absent).
  Complex coefficient_of(const TraceTerm& monomial) const;

  /// Term-wise comparison: every monomial's coefficients agree within tol.
  bool approx_equal(const TracePolynomial& other, double tol) const;

 private:
  int n_;
  std::vector<TraceTerm> terms_;
};

/// T~_sigma: from the canonical cycle form, each cycle without n becomes a
/// traced word and the cycle (xi_1 ... xi_v n) becomes the open word xi_1..xi_v.
TraceTerm lift_sigma(const Permutation& sigma);

/// d~_f = sum_sigma f(sigma) T~_sigma. f must be defined on all of S_n;
/// zero-extend subgroup functions first.
TracePolynomial lift_function(const GroupFunction& f);

/// Substitutes tr(X_i) = 1 for every single-letter traced word.
TracePolynomial specialize_trace_one(const TracePolynomial& p);

/// sum_terms c * prod tr(word) * open product. `dim` is needed only when
/// there are no variables (n = 1).
ComplexMatrix evaluate(const TracePolynomial& p, std::span<const ComplexMatrix> xs, int dim = -1);

/// sum_terms |c| * prod |tr(word)| * ||open product||_F, a roundoff scale
/// for comparisons against evaluate().
double evaluate_magnitude(const TracePolynomial& p, std::span<const ComplexMatrix> xs, int dim = -1);

/// T_sigma: product of the traces of all canonical cycles, the final cycle
/// closed with X_n. xs holds n matrices.
Complex evaluate_T_scalar(const Permutation& sigma, std::span<const ComplexMatrix> xs);

enum class RenderStyle { text, latex };

struct RenderOptions {
  RenderStyle style = RenderStyle::text;
  /// Drop tr(X_i) factors (display of a trace-one specialization).
  bool trace_one = false;
};

/// e.g. "tr(X1)·1 − X1"
std::string render(const TracePolynomial& p, const RenderOptions& options = {});

/// Three-variable display with X, Y, Z and the blocks
///   L = tr(XY)Z + tr(XZ)Y + tr(YZ)X,  M = tr(ZYX)𝟙 + XY + YZ + ZX  and M*,
/// applied after trace-one specialization, e.g. "3𝟙 − L". n must be 4.
std::string render_xyz(const TracePolynomial& p, RenderStyle style = RenderStyle::text);

/// The blocks used by render_xyz, as polynomials with n = 4.
TracePolynomial block_L();
TracePolynomial block_M();
TracePolynomial block_M_adjoint();

/// Formats a coefficient for display: integers, small rationals, and real
/// multiples of omega = exp(2 pi i/3) or its conjugate are recognized.
std::string format_coefficient(Complex c, RenderStyle style = RenderStyle::text);

}  // namespace immlift
