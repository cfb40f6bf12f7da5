#include "qasc/group.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "qasc/catalog.hpp"
#include "qasc/errors.hpp"
#include "qasc/multiset.hpp"

namespace qasc {
namespace {

std::vector<int> class_sizes(const FiniteGroup& g) {
  std::vector<int> out;
  for (const auto& c : g.classes().classes) out.push_back(static_cast<int>(c.size()));
  return out;
}

int label_index(const FiniteGroup& g, const std::string& label) {
  auto i = g.find(label);
  EXPECT_TRUE(i.has_value()) << label;
  return i.value_or(0);
}

TEST(Group, Builders) {
  auto s3 = permutation_group(3, {parse_permutation("(12)", 3), parse_permutation("(123)", 3)});
  EXPECT_EQ(s3->order(), 6);
  EXPECT_EQ(s3->labels(),
            (std::vector<std::string>{"()", "(12)", "(123)", "(13)", "(23)", "(132)"}));
  auto d10 = dihedral_group(5);
  EXPECT_EQ(d10->order(), 10);
  const int a = label_index(*d10, "a"), b = label_index(*d10, "b");
  EXPECT_EQ(d10->element_order(a), 5);
  EXPECT_EQ(d10->element_order(b), 2);
  EXPECT_EQ(d10->element_order(d10->mul(a, b)), 2);
  EXPECT_EQ(d10->label(d10->mul(b, a)), "ba");
  auto z1 = cyclic_group(1);
  EXPECT_EQ(z1->order(), 1);
  EXPECT_EQ(z1->mul(0, 0), 0);
}

TEST(Group, ClassesAndExponent) {
  EXPECT_EQ(class_sizes(*symmetric_group(3)), (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(class_sizes(*alternating_group(4)), (std::vector<int>{1, 3, 4, 4}));
  EXPECT_EQ(class_sizes(*abelian_group({2, 4})), std::vector<int>(8, 1));
  EXPECT_EQ(symmetric_group(3)->exponent(), 6);
  EXPECT_EQ(alternating_group(4)->exponent(), 6);
  EXPECT_EQ(dihedral_group(5)->exponent(), 10);
}

TEST(Group, Errors) {
  EXPECT_THROW(table_group({{0, 1}, {1, 1}}), InputError);
  EXPECT_THROW(parse_permutation("(1 1 2)", 3), InputError);
  EXPECT_THROW(permutation_group(3, {{0, 0, 1}}), InputError);
  GroupOptions small;
  small.max_order = 10;
  EXPECT_THROW(symmetric_group(4, small), InputError);
  // A Latin square that is not associative: the loop of order 5 below.
  std::vector<std::vector<int>> loop{{0, 1, 2, 3, 4},
                                     {1, 0, 3, 4, 2},
                                     {2, 4, 0, 1, 3},
                                     {3, 2, 4, 0, 1},
                                     {4, 3, 1, 2, 0}};
  EXPECT_THROW(table_group(loop), InputError);
}

TEST(Group, PermutationRoundTrip) {
  const auto p = parse_permutation("(1 3)(2 4 5)", 5);
  EXPECT_EQ(format_permutation(p), "(13)(245)");
  EXPECT_EQ(format_permutation(parse_permutation("(1,10)", 10)), "(1,10)");
  // Left-to-right composition: (12)(13) sends 1 -> 2 -> 2, 2 -> 1 -> 3.
  EXPECT_EQ(format_permutation(parse_permutation("(12)(13)", 3)), "(123)");
}

// Invariants that separate the catalog groups from each other.
auto invariants(const FiniteGroup& g) {
  std::map<int, int> orders;
  int center = 0;
  std::set<int> squares;
  for (int x = 0; x < g.order(); ++x) {
    ++orders[g.element_order(x)];
    squares.insert(g.mul(x, x));
    if (g.class_of_element(x).size() == 1) ++center;
  }
  std::vector<int> sizes = class_sizes(g);
  std::sort(sizes.begin(), sizes.end());
  return std::make_tuple(g.order(), sizes, orders, center, static_cast<int>(squares.size()));
}

TEST(Catalog, GroupsAreDistinct) {
  const auto& cat = group_catalog();
  std::map<int, int> per_order;
  std::set<decltype(invariants(*cat.front().group))> seen;
  for (const auto& e : cat) {
    ++per_order[e.group->order()];
    EXPECT_TRUE(seen.insert(invariants(*e.group)).second) << e.name;
  }
  // Number of isomorphism types for each order up to 16.
  const std::map<int, int> known{{1, 1}, {2, 1}, {3, 1}, {4, 2},  {5, 1},  {6, 2},
                                 {7, 1}, {8, 5}, {9, 2}, {10, 2}, {11, 1}, {12, 5},
                                 {13, 1}, {14, 2}, {15, 1}, {16, 14}};
  for (const auto& [n, k] : known) EXPECT_EQ(per_order[n], k) << n;
  EXPECT_EQ(catalog_group("SL(2,3)")->order(), 24);
  EXPECT_FALSE(catalog_group("SL(2,3)")->is_abelian());
}

TEST(Catalog, ClassEquationAndLagrange) {
  for (const auto& e : group_catalog()) {
    const auto& g = *e.group;
    int total = 0;
    for (const auto& c : g.classes().classes) {
      total += static_cast<int>(c.size());
      EXPECT_EQ(g.order() % static_cast<int>(c.size()), 0);
      for (const int x : c)
        for (int h = 0; h < g.order(); ++h)
          EXPECT_EQ(g.classes().class_of[g.mul(g.mul(g.inv(h), x), h)], g.classes().class_of[x]);
    }
    EXPECT_EQ(total, g.order());
    EXPECT_EQ(g.order() % g.exponent(), 0);
    for (int x = 0; x < g.order(); ++x) EXPECT_EQ(g.mul(x, g.inv(x)), 0);
  }
}

TEST(Multiset, Product) {
  auto s3 = symmetric_group(3);
  const auto t = GMultiset::from_class(s3, s3->classes().class_of[label_index(*s3, "(12)")]);
  const auto tt = mset_product(t, t);
  EXPECT_EQ(tt.to_string(), "[3*(), 3*(123), 3*(132)]");
  EXPECT_TRUE(mset_product(t, GMultiset(s3)).empty());

  auto d10 = dihedral_group(5);
  GMultiset rot(d10), refl(d10);
  for (int x = 0; x < 10; ++x) {
    if (d10->label(x)[0] == 'a') rot.add(x);
    if (d10->label(x)[0] == 'b') refl.add(x);
  }
  const auto i3 = mset_scale(mset_product(rot, refl), 2);
  for (int x = 0; x < 10; ++x) EXPECT_EQ(i3.count(x), d10->label(x)[0] == 'b' ? 8 : 0);
}

TEST(Multiset, PowerDiffClosure) {
  auto s3 = symmetric_group(3);
  GMultiset nontrivial = GMultiset::whole_group(s3);
  nontrivial.set_count(0, 0);
  EXPECT_EQ(mset_power(nontrivial, 5), nontrivial);
  EXPECT_EQ(mset_power(nontrivial, 1), nontrivial);
  EXPECT_TRUE(mset_diff(nontrivial, nontrivial).empty());

  auto a4 = alternating_group(4);
  const auto c = mset_scale(GMultiset::from_class(a4, 2), 2);
  EXPECT_NE(mset_power(c, 5), c);
  EXPECT_EQ(mset_power(c, 5), mset_scale(GMultiset::from_class(a4, 3), 2));

  GMultiset single(s3, {label_index(*s3, "(12)")});
  EXPECT_FALSE(single.is_conjugate_closed());
  EXPECT_EQ(s3->label(single.split_class_witness()), "(13)");
  EXPECT_TRUE(GMultiset(abelian_group({2, 2}), {1, 3}).is_conjugate_closed());
}

TEST(Multiset, RandomClosureProperties) {
  std::mt19937_64 rng(17);
  for (const auto& e : catalog_up_to(24)) {
    const auto& g = e.group;
    const int k = g->classes().size();
    for (int trial = 0; trial < 5; ++trial) {
      GMultiset x(g), y(g);
      for (int c = 0; c < k; ++c) {
        const int cx = static_cast<int>(rng() % 3), cy = static_cast<int>(rng() % 3);
        for (const int el : g->classes().classes[c]) {
          x.set_count(el, cx);
          y.set_count(el, cy);
        }
      }
      const std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 50);
      const auto xy = mset_product(x, y);
      EXPECT_TRUE(xy.is_conjugate_closed()) << e.name;
      EXPECT_EQ(xy.size(), x.size() * y.size());
      EXPECT_TRUE(mset_power(x, t).is_conjugate_closed());
      EXPECT_TRUE(mset_scale(x, 3).is_conjugate_closed());
      EXPECT_TRUE(mset_diff(x, y).is_conjugate_closed());
      for (const int s : {2, 3})
        EXPECT_EQ(mset_power(mset_power(x, s), t), mset_power(x, s * t));
      const auto d1 = mset_diff(x, y), d2 = mset_diff(y, x);
      for (int el = 0; el < g->order(); ++el) EXPECT_TRUE(d1.count(el) == 0 || d2.count(el) == 0);
    }
  }
}

}  // namespace
}  // namespace qasc
