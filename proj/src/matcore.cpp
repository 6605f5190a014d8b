#include "immlift/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace immlift {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw std::invalid_argument(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) + ", expected square");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
}

double off_diagonal_norm2(const ComplexMatrix& a) {
  double total = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) total += std::norm(a(i, j));
    }
  }
  return total;
}

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Complex{});
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw std::invalid_argument("matrix entry count does not match its shape");
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  const int n = static_cast<int>(values.size());
  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = values[static_cast<std::size_t>(i)];
  return out;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  const int n = static_cast<int>(v.size());
  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = v[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]);
  }
  return out;
}

std::vector<Complex> ComplexMatrix::column(int j) const {
  std::vector<Complex> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  require_square(*this, "trace");
  Complex total{};
  for (int i = 0; i < rows_; ++i) total += (*this)(i, i);
  return total;
}

double ComplexMatrix::norm() const {
  double total = 0.0;
  for (const auto& z : data_) total += std::norm(z);
  return std::sqrt(total);
}

double ComplexMatrix::operator_norm() const {
  if (data_.empty()) return 0.0;
  const auto gram = hermitian_eigen(adjoint() * (*this));
  return std::sqrt(std::max(0.0, gram.values.back()));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw std::invalid_argument("trace_of_product shape mismatch");
  }
  Complex total{};
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) total += a(i, k) * b(k, i);
  }
  return total;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  require_square(m, "hermitian_part");
  return (m + m.adjoint()) * Complex(0.5, 0.0);
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigen");
  const int n = m.rows();
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > 1e-10 * scale) {
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  }

  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double total = a.norm() * a.norm();
  const double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm2(a) <= eps * eps * total) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double magnitude = std::abs(a(p, q));
        if (magnitude == 0.0) continue;
        // Phase e^{i phi} of a_pq makes the 2x2 block real symmetric; then a
        // real rotation with tan(2 theta) = 2|a_pq| / (a_qq - a_pp) zeroes it.
        const Complex phase = a(p, q) / magnitude;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * magnitude);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = [[c, s], [-s conj(phase), c conj(phase)]] on columns (p, q).
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });
  EigenDecomposition out{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n, n)};
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = a(src, src).real();
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, src);
  }
  return out;
}

PsdReport is_psd(const ComplexMatrix& m, double tol) {
  require_square(m, "is_psd");
  PsdReport report;
  report.scale = std::max(1.0, m.norm());
  report.hermiticity_defect = (m - m.adjoint()).norm();
  report.min_eigenvalue = m.rows() == 0 ? 0.0 : hermitian_eigen(hermitian_part(m)).values.front();
  report.psd = report.hermiticity_defect <= tol * report.scale &&
               report.min_eigenvalue >= -tol * report.scale;
  return report;
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& m, double tol) {
  const PsdReport check = is_psd(m, tol);
  if (!check.psd) {
    throw std::domain_error("matrix_sqrt: matrix is not positive semidefinite (min eigenvalue " +
                            std::to_string(check.min_eigenvalue) + ")");
  }
  const auto eig = hermitian_eigen(hermitian_part(m));
  const int n = m.rows();
  ComplexMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(0.0, eig.values[static_cast<std::size_t>(k)]));
    if (root == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * root;
      for (int j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

double GramDecomposition::reconstruction_error() const {
  return max_abs_difference(vectors.adjoint() * vectors, source);
}

GramDecomposition gram_vectors(const ComplexMatrix& a, double tol) {
  return GramDecomposition{a, matrix_sqrt(a, tol)};
}

ComplexMatrix permutation_operator(const Permutation& sigma, int m) {
  const int n = sigma.degree();
  if (m < 1) throw std::invalid_argument("permutation_operator: m must be positive");
  std::int64_t dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= m;
    if (dim > kMaxTensorDimension) {
      throw std::length_error("permutation_operator: m^n exceeds " +
                              std::to_string(kMaxTensorDimension));
    }
  }
  const Permutation inv = inverse(sigma);
  ComplexMatrix out(static_cast<int>(dim), static_cast<int>(dim));
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (std::int64_t col = 0; col < dim; ++col) {
    std::int64_t rest = col;
    for (int t = n - 1; t >= 0; --t) {
      digits[static_cast<std::size_t>(t)] = static_cast<int>(rest % m);
      rest /= m;
    }
    std::int64_t row = 0;
    for (int t = 1; t <= n; ++t) row = row * m + digits[static_cast<std::size_t>(inv(t) - 1)];
    out(static_cast<int>(row), static_cast<int>(col)) = 1.0;
  }
  return out;
}

ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

std::vector<Complex> tensor_product(std::span<const std::vector<Complex>> factors) {
  std::vector<Complex> out{Complex(1.0, 0.0)};
  for (const auto& f : factors) {
    std::vector<Complex> next;
    next.reserve(out.size() * f.size());
    for (const auto& x : out) {
      for (const auto& y : f) next.push_back(x * y);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Complex> apply_to(const ComplexMatrix& m, std::span<const Complex> v) {
  if (static_cast<std::size_t>(m.cols()) != v.size()) throw std::invalid_argument("apply_to: size mismatch");
  std::vector<Complex> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Complex total{};
    for (int j = 0; j < m.cols(); ++j) total += m(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = total;
  }
  return out;
}

std::uint64_t CounterRng::next_u64() { return mix64(key_ ^ mix64(counter_++)); }

double CounterRng::next_uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_normal() {
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex CounterRng::next_complex_normal() {
  const double re = next_normal();
  const double im = next_normal();
  return Complex(re, im) * (1.0 / std::numbers::sqrt2);
}

std::uint64_t derive_key(std::uint64_t seed, std::uint64_t trial, std::uint64_t slot) {
  return mix64(mix64(mix64(seed) ^ trial) ^ (slot * 0xd1b54a32d192ed03ULL));
}

ComplexMatrix random_complex(int m, std::uint64_t key) {
  if (m < 1) throw std::invalid_argument("random matrix dimension must be positive");
  CounterRng rng(key);
  ComplexMatrix g(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) g(i, j) = rng.next_complex_normal();
  }
  return g;
}

ComplexMatrix random_psd(int m, std::uint64_t key, bool trace_one) {
  const ComplexMatrix g = random_complex(m, key);
  ComplexMatrix out = g * g.adjoint();
  // Exact Hermitian symmetry keeps downstream defects at zero.
  out = hermitian_part(out);
  if (trace_one) out *= Complex(1.0 / out.trace().real(), 0.0);
  return out;
}

ComplexMatrix random_hermitian(int m, std::uint64_t key) { return hermitian_part(random_complex(m, key)); }

std::vector<Complex> random_unit_vector(int m, std::uint64_t key) {
  if (m < 1) throw std::invalid_argument("random vector dimension must be positive");
  CounterRng rng(key);
  std::vector<Complex> v(static_cast<std::size_t>(m));
  double norm2 = 0.0;
  for (auto& z : v) {
    z = rng.next_complex_normal();
    norm2 += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm2);
  return v;
}

}  // namespace immlift
