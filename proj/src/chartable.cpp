#include "qasc/chartable.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qasc/embedding.hpp"
#include "qasc/errors.hpp"
#include "qasc/number_theory.hpp"

namespace qasc {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// ---- linear algebra over F_p ----

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

// Basis of {x : a x = 0} for an r x c matrix.
std::vector<Vec> nullspace(Mat a, u64 p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = invmod(a[r][c], p);
    for (auto& v : a[r]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = sub_mod(a[i][j], mulmod(f, a[r][j], p), p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (const int c : pivot_col) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      x[pivot_col[i]] = sub_mod(0, a[i][free], p);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Indices r such that the coordinates r of the basis vectors form an
// invertible d x d matrix.
std::vector<int> independent_rows(const std::vector<Vec>& basis, int k, u64 p) {
  const std::size_t d = basis.size();
  std::vector<Vec> reduced;
  std::vector<std::size_t> lead;
  std::vector<int> picked;
  for (int r = 0; r < k && picked.size() < d; ++r) {
    Vec v(d);
    for (std::size_t s = 0; s < d; ++s) v[s] = basis[s][r];
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      const u64 f = v[lead[i]];
      if (f == 0) continue;
      for (std::size_t s = 0; s < d; ++s) v[s] = sub_mod(v[s], mulmod(f, reduced[i][s], p), p);
    }
    std::size_t l = 0;
    while (l < d && v[l] == 0) ++l;
    if (l == d) continue;
    const u64 inv = invmod(v[l], p);
    for (auto& x : v) x = mulmod(x, inv, p);
    reduced.push_back(std::move(v));
    lead.push_back(l);
    picked.push_back(r);
  }
  if (picked.size() != d) throw std::logic_error("basis is rank deficient");
  return picked;
}

Mat invert(Mat a, u64 p) {
  const std::size_t n = a.size();
  Mat inv(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular matrix over F_p");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const u64 s = invmod(a[c][c], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = mulmod(a[c][j], s, p);
      inv[c][j] = mulmod(inv[c][j], s, p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = sub_mod(a[i][j], mulmod(f, a[c][j], p), p);
        inv[i][j] = sub_mod(inv[i][j], mulmod(f, inv[c][j], p), p);
      }
    }
  }
  return inv;
}

// Characteristic polynomial det(x I - b), ascending, by reduction to upper
// Hessenberg form.
Vec charpoly(Mat h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t c = 0; c + 2 <= n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][c + 1]);
    }
    const u64 inv = invmod(h[c + 1][c], p);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (h[i][c] == 0) continue;
      const u64 f = mulmod(h[i][c], inv, p);
      for (std::size_t j = 0; j < n; ++j)
        h[i][j] = sub_mod(h[i][j], mulmod(f, h[c + 1][j], p), p);
      for (std::size_t j = 0; j < n; ++j)
        h[j][c + 1] = (h[j][c + 1] + mulmod(f, h[j][i], p)) % p;
    }
  }
  // p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_ik prod_{j=i+1}^{k} h_{j,j-1} p_{i-1}
  std::vector<Vec> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec pk(k + 1, 0);
    const Vec& prev = polys[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pk[d + 1] = (pk[d + 1] + prev[d]) % p;
      pk[d] = sub_mod(pk[d], mulmod(h[k - 1][k - 1], prev[d], p), p);
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      const u64 f = mulmod(h[i][k - 1], prod, p);
      const Vec& q = polys[i];
      for (std::size_t d = 0; d < q.size(); ++d)
        pk[d] = sub_mod(pk[d], mulmod(f, q[d], p), p);
    }
    polys[k] = std::move(pk);
  }
  return polys[n];
}

u64 eval(const Vec& poly, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = (mulmod(acc, x, p) + poly[i]) % p;
  return acc;
}

// ---- abelian decomposition ----

struct CyclicBasis {
  std::vector<int> generators;
  std::vector<int> orders;
};

// Basis of an abelian q-group (given as its element list) by the greedy
// maximal-quotient-order method.
CyclicBasis sylow_basis(const FiniteGroup& g, const std::vector<int>& sylow, int q) {
  CyclicBasis basis;
  std::vector<std::vector<int>> coords(g.order());
  std::vector<char> in_h(g.order(), 0);
  std::vector<int> h{0};
  in_h[0] = 1;
  while (h.size() < sylow.size()) {
    int best = -1, best_order = 0;
    for (const int x : sylow) {
      int e = 1, y = x;
      while (!in_h[y]) {
        y = g.pow(y, q);
        e *= q;
      }
      if (e > best_order) {
        best_order = e;
        best = x;
      }
    }
    const int target = g.pow(best, best_order);
    int adjusted = best;
    const auto& a = coords[target];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] % best_order != 0)
        throw std::logic_error("abelian basis: coordinate not divisible");
      adjusted = g.mul(adjusted, g.pow(basis.generators[i], -(a[i] / best_order)));
    }
    basis.generators.push_back(adjusted);
    basis.orders.push_back(best_order);
    std::vector<int> next;
    std::vector<std::vector<int>> old;
    for (const int y : h) old.push_back(coords[y]);
    for (int c = 0; c < best_order; ++c) {
      const int gc = g.pow(adjusted, c);
      for (std::size_t i = 0; i < h.size(); ++i) {
        const int z = g.mul(h[i], gc);
        auto cz = old[i];
        cz.push_back(c);
        coords[z] = std::move(cz);
        in_h[z] = 1;
        next.push_back(z);
      }
    }
    h = std::move(next);
  }
  return basis;
}

CyclicBasis invariant_factor_basis(const FiniteGroup& g) {
  std::vector<CyclicBasis> parts;
  for (const auto q : prime_factors(g.order())) {
    std::vector<int> sylow;
    for (int x = 0; x < g.order(); ++x) {
      int o = g.element_order(x);
      while (o % q == 0) o /= static_cast<int>(q);
      if (o == 1) sylow.push_back(x);
    }
    auto b = sylow_basis(g, sylow, static_cast<int>(q));
    std::vector<int> idx(b.orders.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return b.orders[i] > b.orders[j]; });
    CyclicBasis sorted;
    for (const int i : idx) {
      sorted.generators.push_back(b.generators[i]);
      sorted.orders.push_back(b.orders[i]);
    }
    parts.push_back(std::move(sorted));
  }
  CyclicBasis out;
  std::size_t rank = 0;
  for (const auto& b : parts) rank = std::max(rank, b.orders.size());
  for (std::size_t i = 0; i < rank; ++i) {
    int gen = 0, order = 1;
    for (const auto& b : parts) {
      if (i >= b.orders.size()) continue;
      gen = g.mul(gen, b.generators[i]);
      order *= b.orders[i];
    }
    out.generators.push_back(gen);
    out.orders.push_back(order);
  }
  return out;
}

bool is_trivial(const Character& c) {
  if (c.degree != 1) return false;
  for (const auto& v : c.values)
    if (v != CycNum(v.modulus(), 1L)) return false;
  return true;
}

bool row_less(const Character& a, const Character& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  const bool ta = is_trivial(a), tb = is_trivial(b);
  if (ta != tb) return ta;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (lex_less(a.values[i], b.values[i])) return true;
    if (lex_less(b.values[i], a.values[i])) return false;
  }
  return false;
}

}  // namespace

void canonicalize_rows(CharacterTable& table) {
  std::stable_sort(table.characters.begin(), table.characters.end(), row_less);
}

CharacterTable char_table_abelian(const GroupPtr& group) {
  const auto& g = *group;
  if (!g.is_abelian()) throw InputError("char_table_abelian: group is not abelian");
  const int m = g.exponent();
  const auto basis = invariant_factor_basis(g);
  const std::size_t r = basis.orders.size();

  // Exponent vector of every element in the basis.
  std::vector<std::vector<int>> coords(g.order());
  std::vector<int> c(r, 0);
  for (int count = 0; count < g.order(); ++count) {
    int x = 0;
    for (std::size_t i = 0; i < r; ++i) x = g.mul(x, g.pow(basis.generators[i], c[i]));
    coords[x] = c;
    for (std::size_t i = r; i-- > 0;) {
      if (++c[i] < basis.orders[i]) break;
      c[i] = 0;
    }
  }

  CharacterTable table;
  table.group = group;
  table.modulus = m;
  table.method = "abelian";
  std::vector<int> j(r, 0);
  for (int count = 0; count < g.order(); ++count) {
    Character chi;
    chi.degree = 1;
    for (const int rep : g.classes().representatives) {
      std::int64_t e = 0;
      for (std::size_t i = 0; i < r; ++i)
        e += static_cast<std::int64_t>(j[i]) * coords[rep][i] * (m / basis.orders[i]);
      chi.values.push_back(CycNum::root_of_unity(m, e % m));
    }
    table.characters.push_back(std::move(chi));
    for (std::size_t i = r; i-- > 0;) {
      if (++j[i] < basis.orders[i]) break;
      j[i] = 0;
    }
  }
  canonicalize_rows(table);
  return table;
}

CharacterTable char_table_dihedral(const GroupPtr& group) {
  const auto& g = *group;
  const int n = g.order() / 2;
  if (g.order() % 2 != 0 || n < 3 || n % 2 == 0)
    throw InputError("char_table_dihedral: needs D_2n with n odd, n >= 3");
  const int m = g.exponent();
  if (m != 2 * n) throw InputError("char_table_dihedral: not a dihedral group");
  const auto a = g.find("a"), b = g.find("b");
  if (!a || !b || g.element_order(*a) != n || g.element_order(*b) != 2 ||
      g.mul(g.mul(*a, *b), g.mul(*a, *b)) != 0)
    throw InputError("char_table_dihedral: group lacks the a, b presentation labels");

  // Rotation exponent of every element (-1 for reflections).
  std::vector<int> rot(g.order(), -1);
  for (int k = 0; k < n; ++k) rot[g.pow(*a, k)] = k;

  CharacterTable table;
  table.group = group;
  table.modulus = m;
  table.method = "dihedral";
  const auto& reps = g.classes().representatives;
  Character trivial, sign;
  for (const int r : reps) {
    trivial.values.emplace_back(m, 1L);
    sign.values.emplace_back(m, rot[r] >= 0 ? 1L : -1L);
  }
  table.characters.push_back(std::move(trivial));
  table.characters.push_back(std::move(sign));
  for (int l = 3; l <= 2 + (n - 1) / 2; ++l) {
    Character chi;
    chi.degree = 2;
    for (const int r : reps) {
      if (rot[r] < 0) {
        chi.values.emplace_back(m, 0L);
        continue;
      }
      const std::int64_t e = 2LL * (l - 2) * rot[r];
      chi.values.push_back(CycNum::root_of_unity(m, e) + CycNum::root_of_unity(m, -e));
    }
    table.characters.push_back(std::move(chi));
  }
  return table;
}

CharacterTable char_table_dihedral(int n) { return char_table_dihedral(dihedral_group(n)); }

CharacterTable char_table_dixon(const GroupPtr& group) {
  const auto& g = *group;
  const auto& cs = g.classes();
  const int k = cs.size();
  const int m = g.exponent();
  const u64 p = next_split_prime(m, 2ULL * g.order());
  const auto emb = make_embedding(m, p);

  std::vector<int> inverse_class(k);
  std::vector<u64> h(k);
  for (int i = 0; i < k; ++i) {
    inverse_class[i] = cs.class_of[g.inv(cs.representatives[i])];
    h[i] = static_cast<u64>(cs.class_size(i));
  }

  // a[i][j][l] = #{x in C_i : x^-1 r_l in C_j}.
  std::vector<Mat> class_matrix(k, Mat(k, Vec(k, 0)));
  for (int i = 0; i < k; ++i)
    for (const int x : cs.classes[i])
      for (int l = 0; l < k; ++l) {
        const int y = g.mul(g.inv(x), cs.representatives[l]);
        ++class_matrix[i][cs.class_of[y]][l];
      }

  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (int i = 0; i < k; ++i) {
      Vec e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    const Mat& a = class_matrix[i];
    std::vector<std::vector<Vec>> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      // Pivot rows of the basis give coordinates within the subspace.
      const std::vector<int> pivots = independent_rows(basis, k, p);
      Mat sub(d, Vec(d));
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t r = 0; r < d; ++r) sub[r][s] = basis[s][pivots[r]];
      const Mat sub_inv = invert(sub, p);
      // b[t][s]: coordinate t of a * basis[s].
      Mat b(d, Vec(d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        Vec img(k, 0);
        for (int r = 0; r < k; ++r) {
          u64 acc = 0;
          for (int c = 0; c < k; ++c)
            if (a[r][c]) acc = (acc + mulmod(a[r][c] % p, basis[s][c], p)) % p;
          img[r] = acc;
        }
        for (std::size_t t = 0; t < d; ++t) {
          u64 acc = 0;
          for (std::size_t r = 0; r < d; ++r)
            acc = (acc + mulmod(sub_inv[t][r], img[pivots[r]], p)) % p;
          b[t][s] = acc;
        }
      }
      const Vec cp = charpoly(b, p);
      std::vector<u64> roots;
      for (u64 x = 0; x < p; ++x)
        if (eval(cp, x, p) == 0) roots.push_back(x);
      if (roots.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::size_t found = 0;
      for (const u64 lambda : roots) {
        Mat shifted = b;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = sub_mod(shifted[t][t], lambda, p);
        std::vector<Vec> part;
        for (const auto& y : nullspace(shifted, p)) {
          Vec v(k, 0);
          for (std::size_t s = 0; s < d; ++s)
            for (int r = 0; r < k; ++r) v[r] = (v[r] + mulmod(y[s], basis[s][r], p)) % p;
          part.push_back(std::move(v));
        }
        found += part.size();
        next.push_back(std::move(part));
      }
      if (found != d) throw std::logic_error("Dixon: class matrix is not diagonalizable mod p");
    }
    spaces = std::move(next);
  }

  CharacterTable table;
  table.group = group;
  table.modulus = m;
  table.method = "dixon";
  const u64 order_mod = static_cast<u64>(g.order()) % p;
  for (const auto& space : spaces) {
    if (space.size() != 1) throw std::logic_error("Dixon: eigenspaces did not split");
    Vec v = space[0];
    if (v[0] == 0) throw std::logic_error("Dixon: eigenvector vanishes at the identity");
    const u64 s0 = invmod(v[0], p);
    for (auto& x : v) x = mulmod(x, s0, p);
    u64 norm = 0;
    for (int i = 0; i < k; ++i)
      norm = (norm + mulmod(mulmod(v[i], v[inverse_class[i]], p), invmod(h[i] % p, p), p)) % p;
    const u64 d2 = mulmod(order_mod, invmod(norm, p), p);
    u64 d = 1;
    while (d * d < d2) ++d;
    if (d * d != d2) throw std::logic_error("Dixon: degree is not an integer");
    Vec values(k);
    for (int i = 0; i < k; ++i)
      values[i] = mulmod(mulmod(d % p, v[i], p), invmod(h[i] % p, p), p);

    Character chi;
    chi.degree = static_cast<int>(d);
    for (int i = 0; i < k; ++i) {
      const int rep = cs.representatives[i];
      const int o = g.element_order(rep);
      const u64 zeta = powmod(emb.z, static_cast<u64>(m / o), p);
      const u64 inv_o = invmod(static_cast<u64>(o) % p, p);
      std::vector<Rat> poly(m, 0);
      u64 total = 0;
      for (int j = 0; j < o; ++j) {
        u64 acc = 0;
        const u64 step = powmod(invmod(zeta, p), static_cast<u64>(j), p);
        u64 factor = 1;
        for (int l = 0; l < o; ++l) {
          acc = (acc + mulmod(values[cs.class_of[g.pow(rep, l)]], factor, p)) % p;
          factor = mulmod(factor, step, p);
        }
        const u64 mu = mulmod(acc, inv_o, p);
        if (mu > d) throw std::logic_error("Dixon: eigenvalue multiplicity out of range");
        total += mu;
        poly[static_cast<std::size_t>(j) * (m / o)] += static_cast<long>(mu);
      }
      if (total != d) throw std::logic_error("Dixon: multiplicities do not sum to the degree");
      chi.values.emplace_back(m, poly);
    }
    table.characters.push_back(std::move(chi));
  }
  if (table.size() != k) throw std::logic_error("Dixon: wrong number of characters");
  canonicalize_rows(table);
  return table;
}

CharacterTable character_table(const GroupPtr& group) {
  return group->is_abelian() ? char_table_abelian(group) : char_table_dixon(group);
}

CycNum char_on_multiset(const CharacterTable& table, int chi, const GMultiset& x) {
  if (x.group() != table.group)
    throw std::invalid_argument("char_on_multiset: multiset from a different group");
  const int w = x.split_class_witness();
  if (w >= 0)
    throw InputError("char_on_multiset: multiset is not conjugate-closed at " +
                     table.group->label(w));
  const auto& cs = table.group->classes();
  CycNum sum(table.modulus, 0L);
  for (int c = 0; c < cs.size(); ++c) {
    const std::int64_t count = x.count(cs.representatives[c]);
    if (count == 0) continue;
    sum += table.characters[chi].values[c] * Rat(count * cs.class_size(c));
  }
  return sum;
}

OrthogonalityReport check_orthogonality(const CharacterTable& table) {
  OrthogonalityReport report;
  const auto& g = *table.group;
  const auto& cs = g.classes();
  const int k = cs.size();
  const int m = table.modulus;
  auto fail = [&](std::string what) {
    report.ok = false;
    report.failures.push_back(std::move(what));
  };
  if (table.size() != k) fail("number of characters differs from number of classes");
  long degree_squares = 0;
  for (const auto& chi : table.characters) {
    degree_squares += static_cast<long>(chi.degree) * chi.degree;
    if (chi.values.at(0) != CycNum(m, static_cast<long>(chi.degree)))
      fail("value at the identity differs from the degree");
  }
  if (degree_squares != g.order()) fail("sum of squared degrees differs from |G|");

  std::vector<std::vector<CycNum>> conjugates(table.size());
  for (int a = 0; a < table.size(); ++a)
    for (const auto& v : table.characters[a].values) conjugates[a].push_back(conj(v));
  for (int a = 0; a < table.size(); ++a)
    for (int b = a; b < table.size(); ++b) {
      CycNum sum(m, 0L);
      for (int c = 0; c < k; ++c)
        sum += table.characters[a].values[c] * conjugates[b][c] * Rat(cs.class_size(c));
      if (sum != CycNum(m, a == b ? static_cast<long>(g.order()) : 0L))
        fail("row inner product <" + std::to_string(a) + "," + std::to_string(b) + ">");
    }
  for (int c = 0; c < k; ++c)
    for (int e = c; e < k; ++e) {
      CycNum sum(m, 0L);
      for (int a = 0; a < table.size(); ++a)
        sum += table.characters[a].values[c] * conjugates[a][e];
      const long expected = c == e ? g.order() / cs.class_size(c) : 0;
      if (sum != CycNum(m, expected))
        fail("column inner product <" + std::to_string(c) + "," + std::to_string(e) + ">");
    }
  return report;
}

bool same_rows_up_to_order(const CharacterTable& a, const CharacterTable& b) {
  if (a.group != b.group || a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& row : a.characters) {
    bool matched = false;
    for (int j = 0; j < b.size() && !matched; ++j) {
      if (used[j] || b.characters[j].degree != row.degree) continue;
      if (b.characters[j].values == row.values) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace qasc
