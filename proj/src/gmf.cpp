#include "immlift/gmf.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace immlift {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

void require_size(const ComplexMatrix& a, int n, const char* what) {
  require_square(a, what);
  if (a.rows() != n) {
    throw std::invalid_argument(std::string(what) + ": matrix is " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.rows()) + " but the function has degree " +
                                std::to_string(n));
  }
}

Complex diagonal_term(const Permutation& sigma, const ComplexMatrix& a) {
  Complex term(1.0, 0.0);
  for (int t = 1; t <= sigma.degree(); ++t) term *= a(t - 1, sigma(t) - 1);
  return term;
}

}  // namespace

Complex determinant(const ComplexMatrix& a) {
  require_square(a, "determinant");
  ComplexMatrix lu = a;
  const int n = lu.rows();
  Complex det(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    }
    if (lu(pivot, k) == Complex{}) return Complex{};
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      det = -det;
    }
    det *= lu(k, k);
    for (int i = k + 1; i < n; ++i) {
      const Complex factor = lu(i, k) / lu(k, k);
      for (int j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
    }
  }
  return det;
}

Complex permanent(const ComplexMatrix& a) {
  require_square(a, "permanent");
  const int n = a.rows();
  if (n > 20) throw std::invalid_argument("permanent: n > 20 is not supported");
  if (n == 0) return Complex(1.0, 0.0);
  // per(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij, walking the
  // subsets in Gray-code order so each step adds or removes one column.
  std::vector<Complex> row_sums(static_cast<std::size_t>(n));
  Complex total{};
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < (1u << n); ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const std::uint32_t flipped = next ^ gray;
    const int column = std::countr_zero(flipped);
    const double direction = (next & flipped) ? 1.0 : -1.0;
    gray = next;
    Complex product(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
      row_sums[static_cast<std::size_t>(i)] += direction * a(i, column);
      product *= row_sums[static_cast<std::size_t>(i)];
    }
    total += (std::popcount(gray) % 2 == 0) ? product : -product;
  }
  return (n % 2 == 0) ? total : -total;
}

Complex immanant(const Partition& shape, const ComplexMatrix& a) {
  require_size(a, shape.size(), "immanant");
  std::map<Partition, std::int64_t> by_class;
  Complex total{};
  for (const auto& sigma : symmetric_group(shape.size())->elements()) {
    const Partition type = cycle_type(sigma);
    auto it = by_class.find(type);
    if (it == by_class.end()) it = by_class.emplace(type, mn_character(shape, type)).first;
    if (it->second == 0) continue;
    total += static_cast<double>(it->second) * diagonal_term(sigma, a);
  }
  return total;
}

Complex normalized_immanant(const Partition& shape, const ComplexMatrix& a) {
  return immanant(shape, a) / static_cast<double>(hook_degree(shape));
}

Complex gmf_value(const GroupFunction& f, const ComplexMatrix& a) {
  require_size(a, f.degree(), "gmf_value");
  const auto& elements = f.domain().elements();
  Complex total{};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Complex weight = f.values()[k];
    if (weight == Complex{}) continue;
    total += weight * diagonal_term(elements[k], a);
  }
  return total;
}

Complex gmf_tensor_oracle_from_vectors(const GroupFunction& f, const ComplexMatrix& vectors) {
  const int n = f.degree();
  if (vectors.cols() != n) throw std::invalid_argument("oracle: need one Gram vector per index");
  if (n > 4) throw std::length_error("oracle: n > 4 is beyond the tensor oracle's range");
  std::vector<ComplexMatrix> projectors;
  for (int i = 0; i < n; ++i) {
    const auto v = vectors.column(i);
    projectors.push_back(ComplexMatrix::outer(v));
  }
  const ComplexMatrix product = tensor_product(projectors);
  const auto& elements = f.domain().elements();
  Complex total{};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Complex weight = f.values()[k];
    if (weight == Complex{}) continue;
    total += weight * trace_of_product(permutation_operator(inverse(elements[k]), vectors.rows()), product);
  }
  return total;
}

Complex gmf_tensor_oracle(const GroupFunction& f, const ComplexMatrix& a) {
  require_size(a, f.degree(), "gmf_tensor_oracle");
  return gmf_tensor_oracle_from_vectors(f, gram_vectors(a).vectors);
}

double idempotent_projection_norm2(const GroupFunction& character, const ComplexMatrix& vectors) {
  const int n = character.degree();
  if (vectors.cols() != n) throw std::invalid_argument("need one vector per tensor factor");
  std::vector<std::vector<Complex>> factors;
  for (int i = 0; i < n; ++i) factors.push_back(vectors.column(i));
  const std::vector<Complex> v = tensor_product(factors);

  const GroupFunction coefficients = idempotent_function(character);
  std::vector<Complex> projected(v.size());
  const auto& elements = character.domain().elements();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Complex c = coefficients.values()[k];
    if (c == Complex{}) continue;
    const auto image = apply_to(permutation_operator(elements[k], vectors.rows()), v);
    for (std::size_t i = 0; i < v.size(); ++i) projected[i] += c * image[i];
  }
  double norm2 = 0.0;
  for (const auto& z : projected) norm2 += std::norm(z);
  return norm2;
}

Complex diagonal_product(const ComplexMatrix& a) {
  require_square(a, "diagonal_product");
  Complex out(1.0, 0.0);
  for (int i = 0; i < a.rows(); ++i) out *= a(i, i);
  return out;
}

}  // namespace immlift
