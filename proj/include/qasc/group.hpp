#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qasc {

/// Orbits of G acting on itself by conjugation. Classes are ordered by their
/// least element, which is also the class representative, so the identity
/// class is always first.
struct ConjugacyClassSet {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> representatives;

  int size() const { return static_cast<int>(classes.size()); }
  int class_size(int c) const { return static_cast<int>(classes[c].size()); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its multiplication table. Element 0 is the
/// identity. Immutable once built; share it through GroupPtr.
class FiniteGroup {
 public:
  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// a^t for any integer t (negative exponents allowed).
  int pow(int a, std::int64_t t) const;
  int element_order(int a) const { return orders_[a]; }
  /// Least common multiple of the element orders.
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  const std::string& name() const { return name_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Element with the given label; "e", "1", "1_G" and "id" also name the
  /// identity when no element carries that label.
  std::optional<int> find(const std::string& label) const;

  const ConjugacyClassSet& classes() const { return classes_; }
  /// The conjugacy class g^G of an element, sorted.
  const std::vector<int>& class_of_element(int g) const {
    return classes_.classes[classes_.class_of[g]];
  }

  /// Builds and validates a group from a full multiplication table.
  static GroupPtr from_table(const std::vector<std::vector<int>>& table,
                             std::vector<std::string> labels, std::string name);

 private:
  FiniteGroup() = default;
  void finish();

  int order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  int exponent_ = 1;
  bool abelian_ = true;
  std::string name_;
  std::vector<std::string> labels_;
  ConjugacyClassSet classes_;
};

struct GroupOptions {
  int max_order = 512;
};

/// Points are 0-based images; composition is left to right, (pq)(x) = q(p(x)).
using Permutation = std::vector<int>;

/// Parses cycle notation such as "(1 2)(3 4)", "(1,2,3)" or "(123)" on
/// points 1..degree. "()", "1", "e" denote the identity.
Permutation parse_permutation(const std::string& text, int degree);
/// Cycle notation; compact "(123)" form when degree <= 9.
std::string format_permutation(const Permutation& p);

/// Conjugacy classes computed as orbits under conjugation.
ConjugacyClassSet conjugacy_classes(const FiniteGroup& g);

int exponent(const FiniteGroup& g);

// Built-in families. Non-table sources order elements breadth-first from the
// generators, identity first.

GroupPtr cyclic_group(int n, const GroupOptions& options = {});
GroupPtr abelian_group(const std::vector<int>& factors,
                       const GroupOptions& options = {});
/// D_{2n} = <a, b | a^n = b^2 = (ab)^2 = 1>, labels a^i and ba^i.
GroupPtr dihedral_group(int n, const GroupOptions& options = {});
GroupPtr symmetric_group(int n, const GroupOptions& options = {});
GroupPtr alternating_group(int n, const GroupOptions& options = {});
/// Dic_n = <a, x | a^{2n} = 1, x^2 = a^n, x^-1 a x = a^-1>, order 4n.
GroupPtr dicyclic_group(int n, const GroupOptions& options = {});
/// Z_n x| Z_k with b a b^-1 = a^r; requires r^k = 1 (mod n).
GroupPtr metacyclic_group(int n, int k, int r, const GroupOptions& options = {});
GroupPtr permutation_group(int degree, const std::vector<Permutation>& generators,
                           const GroupOptions& options = {});
GroupPtr table_group(const std::vector<std::vector<int>>& table,
                     std::vector<std::string> labels = {},
                     const GroupOptions& options = {});
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b,
                        const GroupOptions& options = {});

}  // namespace qasc
