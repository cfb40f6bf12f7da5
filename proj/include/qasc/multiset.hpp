#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qasc/group.hpp"

namespace qasc {

/// A multiset of elements of one group, stored as a dense multiplicity
/// vector indexed by element. Sets are multisets with multiplicities in {0,1}.
class GMultiset {
 public:
  GMultiset() = default;
  explicit GMultiset(GroupPtr group);
  GMultiset(GroupPtr group, const std::vector<int>& elements);

  static GMultiset from_class(GroupPtr group, int class_index);
  static GMultiset from_classes(GroupPtr group, const std::vector<int>& class_indices);
  static GMultiset whole_group(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  std::int64_t count(int g) const { return counts_[g]; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  void set_count(int g, std::int64_t c);
  void add(int g, std::int64_t c = 1);

  std::int64_t size() const;
  bool empty() const;
  bool is_set() const;
  /// Elements with positive multiplicity, ascending.
  std::vector<int> support() const;

  /// Multiplicity is constant on every conjugacy class.
  bool is_conjugate_closed() const;
  /// First element whose class carries a different multiplicity, or -1.
  int split_class_witness() const;
  /// Indices of the classes contained in the support (conjugate-closed input).
  std::vector<int> class_decomposition() const;

  /// [x^-1 : x in X].
  GMultiset inverse() const;

  std::string to_string() const;

  friend bool operator==(const GMultiset& a, const GMultiset& b);
  friend bool operator!=(const GMultiset& a, const GMultiset& b) { return !(a == b); }

 private:
  GroupPtr group_;
  std::vector<std::int64_t> counts_;
};

/// XY = [xy : x in X, y in Y].
GMultiset mset_product(const GMultiset& x, const GMultiset& y);
/// X^t = [x^t : x in X].
GMultiset mset_power(const GMultiset& x, std::int64_t t);
/// Per-element max(count_X - count_Y, 0).
GMultiset mset_diff(const GMultiset& x, const GMultiset& y);
/// Multiset union: multiplicities add.
GMultiset mset_union(const GMultiset& x, const GMultiset& y);
/// k*X.
GMultiset mset_scale(const GMultiset& x, std::int64_t k);

}  // namespace qasc
