#pragma once

#include <compare>
#include <string>
#include <vector>

namespace immlift {

/// An integer partition (weakly decreasing positive parts), i.e. a Young
/// diagram. Also used for cycle types.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if parts are not positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "2,1,1" (whitespace tolerated).
  static Partition parse(const std::string& text);

  /// [first, 1^(n - first)].
  static Partition hook(int n, int first);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool is_hook() const { return parts_.size() <= 1 || parts_[1] == 1; }

  /// "(2,1,1)"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

}  // namespace immlift
