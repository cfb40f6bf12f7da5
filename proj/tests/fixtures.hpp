#pragma once

#include <string>
#include <vector>

#include "qasc/chartable.hpp"
#include "qasc/sc_digraph.hpp"

namespace qasc::testing {

inline int element(const FiniteGroup& g, const std::string& label) {
  const auto i = g.find(label);
  if (!i) throw std::invalid_argument("no element " + label);
  return *i;
}

inline GMultiset class_of(const GroupPtr& g, const std::string& label) {
  return GMultiset(g, g->class_of_element(element(*g, label)));
}

struct Fixture {
  SemiCayleyDigraph graph;
  CharacterTable table;
};

// S3 with T11 = T12 = T21 the transpositions and T22 the 3-cycles.
inline Fixture symmetric_fixture() {
  auto g = symmetric_group(3);
  auto graph = SemiCayleyDigraph::create(g, class_of(g, "(12)"), class_of(g, "(123)"),
                                         class_of(g, "(12)"), class_of(g, "(12)"));
  return {graph, char_table_dixon(g)};
}

// A4 with T11 = T22 the class of (123), T12 the class of (132), T21 = {1}.
inline Fixture alternating_fixture() {
  auto g = alternating_group(4);
  auto graph = SemiCayleyDigraph::create(g, class_of(g, "(123)"), class_of(g, "(123)"),
                                         class_of(g, "(132)"), GMultiset(g, {0}));
  return {graph, char_table_dixon(g)};
}

// D_2n, n odd, with T11 = <a> minus 1, T22 = b<a>, T12 = T21 = {1}.
inline Fixture dihedral_fixture(int n) {
  auto g = dihedral_group(n);
  GMultiset rot(g), refl(g);
  for (int x = 0; x < g->order(); ++x) {
    if (g->label(x)[0] == 'a') rot.add(x);
    if (g->label(x)[0] == 'b') refl.add(x);
  }
  auto graph = SemiCayleyDigraph::create(g, rot, refl, GMultiset(g, {0}), GMultiset(g, {0}));
  return {graph, char_table_dihedral(g)};
}

inline SemiCayleyDigraph empty_digraph(const GroupPtr& g) {
  return SemiCayleyDigraph::create(g, GMultiset(g), GMultiset(g), GMultiset(g), GMultiset(g));
}

}  // namespace qasc::testing
