#include "qasc/catalog.hpp"

#include <algorithm>
#include <array>

#include "qasc/errors.hpp"

namespace qasc {

namespace {

// (Z4 x Z2) x| Z2 where the generator of the last factor sends (x, y) to
// (x, y + x mod 2).
GroupPtr g16_3() {
  auto index = [](int x, int y, int z) { return (z * 2 + y) * 4 + x; };
  std::vector<std::vector<int>> table(16, std::vector<int>(16));
  std::vector<std::string> labels(16);
  for (int z = 0; z < 2; ++z)
    for (int y = 0; y < 2; ++y)
      for (int x = 0; x < 4; ++x) {
        const int a = index(x, y, z);
        labels[a] = "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                    std::to_string(z) + ")";
        for (int w = 0; w < 2; ++w)
          for (int v = 0; v < 2; ++v)
            for (int u = 0; u < 4; ++u) {
              const int vv = (v + (z ? u : 0)) % 2;
              table[a][index(u, v, w)] = index((x + u) % 4, (y + vv) % 2, (z + w) % 2);
            }
      }
  return table_group(table, labels);
}

// Pauli group as monomial matrices acting on basis vector x phase, with point
// 4*b + k standing for i^k e_b.
GroupPtr pauli_group() {
  auto pt = [](int b, int k) { return 4 * b + (k % 4) + 1; };
  auto make = [&](auto f) {
    Permutation p(8);
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 4; ++k) {
        auto [b2, k2] = f(b, k);
        p[pt(b, k) - 1] = pt(b2, k2) - 1;
      }
    return p;
  };
  const Permutation x = make([](int b, int k) { return std::pair{1 - b, k}; });
  const Permutation z = make([](int b, int k) { return std::pair{b, b ? k + 2 : k}; });
  const Permutation i = make([](int b, int k) { return std::pair{b, k + 1}; });
  return permutation_group(8, {x, z, i});
}

// 2x2 matrices over F_3 with determinant 1, identity first.
GroupPtr sl23() {
  using M = std::array<int, 4>;
  std::vector<M> elems{{1, 0, 0, 1}};
  for (int a = 0; a < 81; ++a) {
    const M m{a % 3, a / 3 % 3, a / 9 % 3, a / 27};
    if ((m[0] * m[3] - m[1] * m[2] + 9) % 3 == 1 && m != elems[0]) elems.push_back(m);
  }
  auto mul = [](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
             (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    const M& m = elems[i];
    labels.push_back("[" + std::to_string(m[0]) + std::to_string(m[1]) + ";" +
                     std::to_string(m[2]) + std::to_string(m[3]) + "]");
    for (int j = 0; j < n; ++j)
      table[i][j] = static_cast<int>(
          std::find(elems.begin(), elems.end(), mul(m, elems[j])) - elems.begin());
  }
  return table_group(table, labels);
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, GroupPtr g) { c.push_back({std::move(name), std::move(g)}); };
  add("Z1", cyclic_group(1));
  add("Z2", cyclic_group(2));
  add("Z3", cyclic_group(3));
  add("Z4", cyclic_group(4));
  add("Z2xZ2", abelian_group({2, 2}));
  add("Z5", cyclic_group(5));
  add("Z6", cyclic_group(6));
  add("S3", symmetric_group(3));
  add("Z7", cyclic_group(7));
  add("Z8", cyclic_group(8));
  add("Z2xZ4", abelian_group({2, 4}));
  add("Z2xZ2xZ2", abelian_group({2, 2, 2}));
  add("D8", dihedral_group(4));
  add("Q8", dicyclic_group(2));
  add("Z9", cyclic_group(9));
  add("Z3xZ3", abelian_group({3, 3}));
  add("Z10", cyclic_group(10));
  add("D10", dihedral_group(5));
  add("Z11", cyclic_group(11));
  add("Z12", cyclic_group(12));
  add("Z2xZ6", abelian_group({2, 6}));
  add("D12", dihedral_group(6));
  add("A4", alternating_group(4));
  add("Dic3", dicyclic_group(3));
  add("Z13", cyclic_group(13));
  add("Z14", cyclic_group(14));
  add("D14", dihedral_group(7));
  add("Z15", cyclic_group(15));
  add("Z16", cyclic_group(16));
  add("Z2xZ8", abelian_group({2, 8}));
  add("Z4xZ4", abelian_group({4, 4}));
  add("Z2xZ2xZ4", abelian_group({2, 2, 4}));
  add("Z2^4", abelian_group({2, 2, 2, 2}));
  add("D16", dihedral_group(8));
  add("Q16", dicyclic_group(4));
  add("SD16", metacyclic_group(8, 2, 3));
  add("M16", metacyclic_group(8, 2, 5));
  add("Z4:Z4", metacyclic_group(4, 4, 3));
  add("Z2xD8", direct_product(*cyclic_group(2), *dihedral_group(4)));
  add("Z2xQ8", direct_product(*cyclic_group(2), *dicyclic_group(2)));
  add("(Z4xZ2):Z2", g16_3());
  add("Pauli", pauli_group());
  add("Z17", cyclic_group(17));
  add("Z18", cyclic_group(18));
  add("Z3xZ6", abelian_group({3, 6}));
  add("D18", dihedral_group(9));
  add("Z3xS3", direct_product(*cyclic_group(3), *symmetric_group(3)));
  add("Z19", cyclic_group(19));
  add("Z20", cyclic_group(20));
  add("Z2xZ10", abelian_group({2, 10}));
  add("D20", dihedral_group(10));
  add("Dic5", dicyclic_group(5));
  add("F20", metacyclic_group(5, 4, 2));
  add("Z21", cyclic_group(21));
  add("Z7:Z3", metacyclic_group(7, 3, 2));
  add("Z22", cyclic_group(22));
  add("D22", dihedral_group(11));
  add("Z23", cyclic_group(23));
  add("Z24", cyclic_group(24));
  add("Z2xZ12", abelian_group({2, 12}));
  add("D24", dihedral_group(12));
  add("Dic6", dicyclic_group(6));
  add("Z3:Z8", metacyclic_group(3, 8, 2));
  add("Z4xS3", direct_product(*cyclic_group(4), *symmetric_group(3)));
  add("Z2xA4", direct_product(*cyclic_group(2), *alternating_group(4)));
  add("S4", symmetric_group(4));
  add("SL(2,3)", sl23());
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& group_catalog() {
  static const std::vector<CatalogEntry> catalog = build();
  return catalog;
}

std::vector<CatalogEntry> catalog_up_to(int max_order) {
  std::vector<CatalogEntry> out;
  for (const auto& e : group_catalog())
    if (e.group->order() <= max_order) out.push_back(e);
  return out;
}

GroupPtr catalog_group(const std::string& name) {
  for (const auto& e : group_catalog())
    if (e.name == name) return e.group;
  throw InputError("unknown catalog group: " + name);
}

}  // namespace qasc
