#pragma once

#include "immlift/characters.hpp"
#include "immlift/matcore.hpp"

namespace immlift {

/// LU with partial pivoting.
Complex determinant(const ComplexMatrix& a);

/// Ryser inclusion-exclusion with Gray-code column updates; n <= 20.
Complex permanent(const ComplexMatrix& a);

/// sum_sigma chi_shape(sigma) prod_t a(t, sigma(t)); |shape| == a.rows() <= 8.
Complex immanant(const Partition& shape, const ComplexMatrix& a);

/// imm_shape(A) / chi_shape(e)
Complex normalized_immanant(const Partition& shape, const ComplexMatrix& a);

/// d_f(A) = sum_{sigma in H} f(sigma) prod_t a(t, sigma(t)), H = f.domain().
Complex gmf_value(const GroupFunction& f, const ComplexMatrix& a);

/// The same sum evaluated on the tensor side: with Gram vectors v_i of A and
/// X_i = |v_i><v_i|, returns sum_sigma f(sigma) tr[sigma^{-1} X_1 (x) ... (x) X_n]
/// using explicit permutation operators. Requires A PSD, n <= 4 and m^n <= 4096.
Complex gmf_tensor_oracle(const GroupFunction& f, const ComplexMatrix& a);

/// Oracle variant on caller-supplied Gram vectors (columns of `vectors`, m x n).
Complex gmf_tensor_oracle_from_vectors(const GroupFunction& f, const ComplexMatrix& vectors);

/// ||p v||^2 for v = v_1 (x) ... (x) v_n and p the operator image of the
/// centrally primitive idempotent of `character`. Scaled by |H| / chi(e)
/// this reproduces d_chi(A) for the Gram matrix A of the v_i.
double idempotent_projection_norm2(const GroupFunction& character, const ComplexMatrix& vectors);

/// prod_i a_ii
Complex diagonal_product(const ComplexMatrix& a);

}  // namespace immlift
