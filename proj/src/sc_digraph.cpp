#include "qasc/sc_digraph.hpp"

#include <algorithm>

#include "qasc/errors.hpp"

namespace qasc {

std::optional<QuasiAbelianViolation> find_violation(const std::array<GMultiset, 4>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const int w = sets[i].split_class_witness();
    if (w >= 0) return QuasiAbelianViolation{connection_set_names()[i], w};
  }
  return std::nullopt;
}

SemiCayleyDigraph SemiCayleyDigraph::create(GroupPtr group, GMultiset t11, GMultiset t22,
                                            GMultiset t12, GMultiset t21) {
  std::array<GMultiset, 4> sets{std::move(t11), std::move(t22), std::move(t12),
                                std::move(t21)};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].group() != group)
      throw InputError(connection_set_names()[i] + " belongs to a different group");
    if (!sets[i].is_set())
      throw InputError(connection_set_names()[i] + " has repeated elements");
  }
  if (const auto v = find_violation(sets))
    throw InputError(v->set_name + " is not a union of conjugacy classes: the class of " +
                     group->label(v->witness) + " is split");
  return SemiCayleyDigraph(std::move(group), std::move(sets));
}

SemiCayleyDigraph SemiCayleyDigraph::from_classes(GroupPtr group, const std::vector<int>& t11,
                                                  const std::vector<int>& t22,
                                                  const std::vector<int>& t12,
                                                  const std::vector<int>& t21) {
  return create(group, GMultiset::from_classes(group, t11), GMultiset::from_classes(group, t22),
                GMultiset::from_classes(group, t12), GMultiset::from_classes(group, t21));
}

IMultisets i_multisets(const SemiCayleyDigraph& graph) {
  IMultisets out;
  out.i1 = mset_union(graph.t11(), graph.t22());
  out.i2 = mset_union(mset_union(mset_product(graph.t11(), graph.t11()),
                                 mset_product(graph.t22(), graph.t22())),
                      mset_scale(mset_product(graph.t12(), graph.t21()), 4));
  out.i3 = mset_scale(mset_product(graph.t11(), graph.t22()), 2);
  return out;
}

CycNum RadicalEigenvalue::pair_sum() const { return trace_part * Rat(1, degree); }

CycNum RadicalEigenvalue::pair_product() const {
  return (trace_part * trace_part - radicand) * Rat(1, 4 * degree * degree);
}

std::pair<std::complex<double>, std::complex<double>> RadicalEigenvalue::numeric(int t) const {
  const std::complex<double> a = trace_part.embed(t);
  const std::complex<double> s = std::sqrt(radicand.embed(t));
  const double den = 2.0 * degree;
  std::complex<double> plus = (a + s) / den, minus = (a - s) / den;
  auto first = [](const std::complex<double>& x, const std::complex<double>& y) {
    const bool xi = x.imag() >= 0, yi = y.imag() >= 0;
    if (xi != yi) return xi;
    return x.real() >= y.real();
  };
  if (!first(plus, minus)) std::swap(plus, minus);
  return {plus, minus};
}

std::vector<RadicalEigenvalue> eigenvalues(const SemiCayleyDigraph& graph,
                                           const CharacterTable& table) {
  if (table.group != graph.group())
    throw std::invalid_argument("eigenvalues: character table of a different group");
  const IMultisets im = i_multisets(graph);
  const GMultiset d23 = mset_diff(im.i2, im.i3);
  const GMultiset d32 = mset_diff(im.i3, im.i2);
  std::vector<RadicalEigenvalue> out;
  for (int c = 0; c < table.size(); ++c) {
    RadicalEigenvalue e;
    e.character = c;
    e.degree = table.characters[c].degree;
    e.trace_part = char_on_multiset(table, c, im.i1);
    e.radicand = (char_on_multiset(table, c, d23) - char_on_multiset(table, c, d32)) *
                 Rat(e.degree);
    out.push_back(std::move(e));
  }
  return out;
}

Eigen::MatrixXi adjacency_matrix(const SemiCayleyDigraph& graph) {
  const auto& g = *graph.group();
  const int n = g.order();
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(2 * n, 2 * n);
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x) {
      const int q = g.mul(x, g.inv(h));
      a(h, x) = graph.t11().count(q) > 0;
      a(n + h, n + x) = graph.t22().count(q) > 0;
      a(h, n + x) = graph.t12().count(q) > 0;
      a(n + h, x) = graph.t21().count(q) > 0;
    }
  return a;
}

bool is_undirected(const SemiCayleyDigraph& graph) {
  return graph.t11() == graph.t11().inverse() && graph.t22() == graph.t22().inverse() &&
         graph.t12().inverse() == graph.t21();
}

}  // namespace qasc
