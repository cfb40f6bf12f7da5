#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qasc/chartable.hpp"
#include "qasc/multiset.hpp"

namespace qasc {

/// A set that is not a union of conjugacy classes: which connection set, and
/// an element whose class it splits.
struct QuasiAbelianViolation {
  std::string set_name;
  int witness = -1;
};

/// SC(G, T11, T22, T12, T21): vertices g_1 and g_2 for g in G, with an arc
/// h_i -> g_j whenever g h^-1 lies in T_ij. Construction checks that the four
/// connection sets are sets over one group and are conjugate-closed.
class SemiCayleyDigraph {
 public:
  static SemiCayleyDigraph create(GroupPtr group, GMultiset t11, GMultiset t22,
                                  GMultiset t12, GMultiset t21);
  /// Builds from class index lists for each connection set.
  static SemiCayleyDigraph from_classes(GroupPtr group, const std::vector<int>& t11,
                                        const std::vector<int>& t22,
                                        const std::vector<int>& t12,
                                        const std::vector<int>& t21);

  const GroupPtr& group() const { return group_; }
  const GMultiset& t11() const { return sets_[0]; }
  const GMultiset& t22() const { return sets_[1]; }
  const GMultiset& t12() const { return sets_[2]; }
  const GMultiset& t21() const { return sets_[3]; }
  /// T11, T22, T12, T21 in that order.
  const std::array<GMultiset, 4>& sets() const { return sets_; }
  int vertex_count() const { return 2 * group_->order(); }

 private:
  SemiCayleyDigraph(GroupPtr group, std::array<GMultiset, 4> sets)
      : group_(std::move(group)), sets_(std::move(sets)) {}

  GroupPtr group_;
  std::array<GMultiset, 4> sets_;
};

/// Names of the connection sets in the order used by sets().
inline const std::array<std::string, 4>& connection_set_names() {
  static const std::array<std::string, 4> names{"T11", "T22", "T12", "T21"};
  return names;
}

/// First connection set that is not conjugate-closed, if any.
std::optional<QuasiAbelianViolation> find_violation(const std::array<GMultiset, 4>& sets);

struct IMultisets {
  GMultiset i1;  // T11 u T22
  GMultiset i2;  // T11 T11 u T22 T22 u 4*T12 T21
  GMultiset i3;  // 2*T11 T22
};

IMultisets i_multisets(const SemiCayleyDigraph& graph);

/// The eigenvalue pair (A +- sqrt(r)) / 2d attached to one irreducible
/// character, each root with multiplicity d^2.
struct RadicalEigenvalue {
  int character = 0;
  int degree = 1;
  CycNum trace_part;  // chi(I1)
  CycNum radicand;    // d (chi(I2 \ I3) - chi(I3 \ I2))

  int multiplicity() const { return degree * degree; }
  /// r = 0: one eigenvalue A / 2d of multiplicity 2 d^2.
  bool collapsed() const { return radicand.is_zero(); }
  CycNum pair_sum() const;      // A / d
  CycNum pair_product() const;  // (A^2 - r) / 4d^2
  /// Both roots under the complex embedding w -> exp(2 pi i t / m). The first
  /// is the "+" branch: non-negative imaginary part first, then larger real
  /// part.
  std::pair<std::complex<double>, std::complex<double>> numeric(int t = 1) const;
};

std::vector<RadicalEigenvalue> eigenvalues(const SemiCayleyDigraph& graph,
                                           const CharacterTable& table);

/// Vertices g_1 in group order, then g_2; entry (u, v) = 1 for an arc u -> v.
Eigen::MatrixXi adjacency_matrix(const SemiCayleyDigraph& graph);

/// T11 = T11^-1, T22 = T22^-1 and T12^-1 = T21.
bool is_undirected(const SemiCayleyDigraph& graph);

}  // namespace qasc
