#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace immlift {

// Maximum degree for which full symmetric-group sums are supported.
inline constexpr int kMaxDegree = 8;

class Partition;

/// A permutation of {1..n} stored in one-line notation.
///
/// Entry t (1-based) of the one-line form is sigma(t). Values are immutable
/// after construction and compare lexicographically by their one-line form.
class Permutation {
 public:
  Permutation() = default;

  /// Builds from 1-based images; throws std::invalid_argument unless the
  /// images form a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Builds from disjoint cycles over {1..n}; unmentioned points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }

  /// sigma(t) for 1-based t.
  int operator()(int t) const { return images_[static_cast<std::size_t>(t - 1)]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Cycle notation such as "(143)(2)"; the identity prints as "e".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p o q)(t) = p(q(t)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
int sign(const Permutation& p);
Partition cycle_type(const Permutation& p);

/// Disjoint cycles with fixed points written as 1-cycles. Each cycle is
/// rotated so its largest element is written last and cycles are ordered by
/// that largest element, so the cycle holding n comes last and ends in n.
struct CanonicalCycles {
  int degree = 0;
  std::vector<std::vector<int>> cycles;

  Permutation to_permutation() const { return Permutation::from_cycles(degree, cycles); }
};

CanonicalCycles canonical_cycles(const Permutation& p);

/// All n! permutations of {1..n} in lexicographic order of one-line form.
std::vector<Permutation> enumerate_symmetric(int n);

/// A finite permutation group, stored as its sorted element list.
class Subgroup {
 public:
  /// Takes an element list that must already be closed; validated.
  Subgroup(int degree, std::vector<Permutation> elements);

  static Subgroup symmetric(int n);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }

  /// Position of p in elements(), or order() when p is not a member.
  std::size_t index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) != order(); }

  bool is_full_symmetric() const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  struct Trusted {};
  Subgroup(Trusted, int degree, std::vector<Permutation> sorted_elements)
      : degree_(degree), elements_(std::move(sorted_elements)) {}

  friend Subgroup generate_subgroup(int n, std::span<const Permutation> generators);

  int degree_;
  std::vector<Permutation> elements_;
};

/// Closure of the generators under composition. Always contains the identity.
Subgroup generate_subgroup(int n, std::span<const Permutation> generators);
Subgroup generate_subgroup(int n, std::initializer_list<Permutation> generators);

struct ConjugacyClass {
  Permutation representative;  // lexicographically smallest one-line form
  std::vector<Permutation> members;
};

/// Orbits of H under conjugation by H, ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const Subgroup& group);

}  // namespace immlift
