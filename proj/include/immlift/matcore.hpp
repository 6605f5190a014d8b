#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "immlift/permgroup.hpp"

namespace immlift {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  /// Throws std::invalid_argument if entries.size() != rows * cols or any entry is not finite.
  ComplexMatrix(int rows, int cols, std::vector<Complex> entries);
  /// Row-major nested initializer, mostly for tests.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(int n);
  static ComplexMatrix zeros(int rows, int cols) { return ComplexMatrix(rows, cols); }
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><v| for a column vector v.
  static ComplexMatrix outer(std::span<const Complex> v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(int i, int j) { return data_[index(i, j)]; }
  const Complex& operator()(int i, int j) const { return data_[index(i, j)]; }
  const std::vector<Complex>& entries() const { return data_; }

  std::vector<Complex> column(int j) const;

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// Frobenius norm; used as the scale ||M|| in relative tolerances.
  double norm() const;
  /// Largest singular value.
  double operator_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// tr(a * b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);
/// Largest |a_ij - b_ij|.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary; column k pairs with values[k]
};

/// Cyclic complex Jacobi. Throws std::invalid_argument for non-square input
/// or a Hermiticity defect above 1e-10 * max(1, ||M||).
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

inline constexpr double kDefaultPsdTolerance = 1e-9;

struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;       // of the Hermitian part
  double hermiticity_defect = 0.0;   // ||M - M^dagger||
  double scale = 1.0;                // max(1, ||M||)
};

/// PSD up to tol * max(1, ||M||), both in Hermiticity and in the smallest
/// eigenvalue of (M + M^dagger)/2.
PsdReport is_psd(const ComplexMatrix& m, double tol = kDefaultPsdTolerance);

/// (M + M^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// Unique PSD square root. Eigenvalues within the PSD tolerance of zero are
/// clamped; throws std::domain_error if m is not PSD.
ComplexMatrix matrix_sqrt(const ComplexMatrix& m, double tol = kDefaultPsdTolerance);

/// Gram vectors of a PSD matrix: A(i,j) = <v_i, v_j> with the inner product
/// antilinear in its first slot.
struct GramDecomposition {
  ComplexMatrix source;
  ComplexMatrix vectors;  // column i is v_i

  std::vector<Complex> vector(int i) const { return vectors.column(i); }
  /// Largest |<v_i, v_j> - A(i,j)|.
  double reconstruction_error() const;
};

GramDecomposition gram_vectors(const ComplexMatrix& a, double tol = kDefaultPsdTolerance);

inline constexpr std::int64_t kMaxTensorDimension = 4096;

/// Operator on (C^m)^{(x)n} mapping e_{i_1}(x)...(x)e_{i_n} to
/// e_{i_{s^-1(1)}}(x)...(x)e_{i_{s^-1(n)}}; the first tensor factor is the
/// most significant digit of the basis index. Throws std::length_error when
/// m^n > kMaxTensorDimension.
ComplexMatrix permutation_operator(const Permutation& sigma, int m);

/// X_1 (x) ... (x) X_n
ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors);

/// v_1 (x) ... (x) v_n
std::vector<Complex> tensor_product(std::span<const std::vector<Complex>> factors);

std::vector<Complex> apply_to(const ComplexMatrix& m, std::span<const Complex> v);

/// Counter-based generator: the k-th draw is a pure function of (key, k),
/// so per-trial streams are independent of scheduling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next_u64();
  /// Uniform in (0, 1).
  double next_uniform();
  /// Standard normal via Box-Muller.
  double next_normal();
  /// Standard complex Gaussian: (x + iy)/sqrt(2), E|z|^2 = 1.
  Complex next_complex_normal();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Mixes (seed, trial, slot) into a stream key.
std::uint64_t derive_key(std::uint64_t seed, std::uint64_t trial, std::uint64_t slot = 0);

/// G G^dagger with i.i.d. standard complex Gaussian G (m x m), optionally
/// divided by its trace. Deterministic in (m, key, trace_one).
ComplexMatrix random_psd(int m, std::uint64_t key, bool trace_one);

/// Matrix of i.i.d. standard complex Gaussians.
ComplexMatrix random_complex(int m, std::uint64_t key);

/// Random Hermitian (G + G^dagger)/2.
ComplexMatrix random_hermitian(int m, std::uint64_t key);

/// Random unit vector in C^m.
std::vector<Complex> random_unit_vector(int m, std::uint64_t key);

}  // namespace immlift
