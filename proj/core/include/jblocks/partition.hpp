#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jblocks {

/// Jordan-block sizes of an operator, stored weakly decreasing.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into decreasing order; zero parts are rejected.
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  /// n copies of the part 1.
  static Partition ones(unsigned n) { return Partition(std::vector<unsigned>(n, 1)); }

  /// Accepts "3,2,2", "(3,2^2)", "[3, 2, 2]" and "3 2 2".
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t length() const noexcept { return parts_.size(); }
  /// Sum of the parts, i.e. the dimension of the underlying space.
  unsigned size() const noexcept;
  unsigned largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  unsigned multiplicity(unsigned part) const noexcept;
  /// Number of distinct part sizes, in decreasing order, with multiplicities.
  std::vector<std::pair<unsigned, unsigned>> grouped() const;

  /// Conjugate (transpose) partition.
  Partition conjugate() const;

  /// Compressed notation "(8^2,5)"; the empty partition prints "()".
  std::string to_string() const;

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Multiset union.
Partition partition_union(const Partition& a, const Partition& b);

/// Multiset difference a \ b; throws NotContained unless b is a sub-multiset of a.
Partition partition_difference(const Partition& a, const Partition& b);

/// True when b is a sub-multiset of a.
bool contains(const Partition& a, const Partition& b);

}  // namespace jblocks
