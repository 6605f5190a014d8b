#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "immlift/partition.hpp"
#include "immlift/permgroup.hpp"

namespace immlift {

using Complex = std::complex<double>;

/// Shared, lazily built S_n element list (1 <= n <= kMaxDegree).
std::shared_ptr<const Subgroup> symmetric_group(int n);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// Dimension of the irreducible S_n representation: n! / prod(hook lengths).
std::int64_t hook_degree(const Partition& shape);

/// chi_shape evaluated on the class of cycle type `cycle_type`, by the
/// Murnaghan-Nakayama rim-hook recursion. Exact integer arithmetic.
std::int64_t mn_character(const Partition& shape, const Partition& cycle_type);

/// z_mu = prod_k k^{m_k} m_k!, the centralizer order; |class| = n!/z_mu.
std::int64_t centralizer_order(const Partition& cycle_type);

/// A complex-valued function on the elements of a finite permutation group.
class GroupFunction {
 public:
  /// values[i] belongs to domain->elements()[i].
  GroupFunction(std::shared_ptr<const Subgroup> domain, std::vector<Complex> values);

  static GroupFunction from(std::shared_ptr<const Subgroup> domain,
                            const std::function<Complex(const Permutation&)>& value);

  const Subgroup& domain() const { return *domain_; }
  const std::shared_ptr<const Subgroup>& domain_ptr() const { return domain_; }
  int degree() const { return domain_->degree(); }
  const std::vector<Complex>& values() const { return values_; }

  /// Throws std::out_of_range when p lies outside the domain.
  Complex operator()(const Permutation& p) const;
  Complex at_identity() const;

  GroupFunction& operator+=(const GroupFunction& other);
  GroupFunction& operator-=(const GroupFunction& other);
  GroupFunction& operator*=(Complex scale);

  friend GroupFunction operator+(GroupFunction a, const GroupFunction& b) { return a += b; }
  friend GroupFunction operator-(GroupFunction a, const GroupFunction& b) { return a -= b; }
  friend GroupFunction operator*(Complex s, GroupFunction f) { return f *= s; }
  friend GroupFunction operator*(GroupFunction f, Complex s) { return f *= s; }

  /// Sum of |f(sigma)| over the domain.
  double l1_norm() const;
  /// max |f(sigma) - g(sigma)|; domains must coincide.
  double max_abs_difference(const GroupFunction& other) const;

 private:
  void require_same_domain(const GroupFunction& other) const;

  std::shared_ptr<const Subgroup> domain_;
  std::vector<Complex> values_;
};

GroupFunction symmetric_character(const Partition& shape);
GroupFunction sign_function(int n);
GroupFunction constant_function(std::shared_ptr<const Subgroup> domain, Complex value);
/// delta_e: 1 on the identity, 0 elsewhere.
GroupFunction identity_indicator(std::shared_ptr<const Subgroup> domain);

/// Extends f from a subgroup H to all of S_n by zero outside H.
GroupFunction extend_by_zero(const GroupFunction& f);

/// Coefficients c(sigma) of the centrally primitive idempotent
/// p = (chi(e)/|H|) sum_sigma chi(sigma) sigma^{-1}, i.e.
/// c(sigma) = (chi(e)/|H|) chi(sigma^{-1}).
GroupFunction idempotent_function(const GroupFunction& character);

/// Group-algebra product: (f*g)(sigma) = sum_tau f(tau) g(tau^{-1} sigma).
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

struct CharacterTable {
  std::shared_ptr<const Subgroup> group;
  std::vector<Permutation> class_representatives;
  std::vector<std::string> labels;
  std::vector<GroupFunction> rows;

  /// Row by label; throws std::out_of_range if absent.
  const GroupFunction& row(const std::string& label) const;
};

/// Extends per-class values to a class function on the group. Every element
/// must be conjugate (within the group) to exactly one representative.
GroupFunction class_function(std::shared_ptr<const Subgroup> group,
                             const std::vector<Permutation>& representatives,
                             const std::vector<Complex>& class_values);

/// Rows labelled "trivial", "chi1", "chi2", "chi3" on the classes
/// (e), (12)(34), (123), (132); omega = exp(2 pi i / 3).
CharacterTable builtin_a4_table();

/// Irreducible S_n characters, one row per partitions_of(n) entry, labelled
/// by the partition; class representatives are one per cycle type.
CharacterTable symmetric_character_table(int n);

}  // namespace immlift
