#include "qasc/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "qasc/errors.hpp"
#include "qasc/number_theory.hpp"

namespace qasc {

namespace {

using Key = std::vector<int>;

// Breadth-first closure of the generators under right multiplication. The
// element order is identity first, then discovery order.
template <class Mul, class Label>
GroupPtr closure_group(const std::vector<Key>& generators, const Key& identity,
                       Mul mul, Label label, std::string name,
                       const GroupOptions& options) {
  std::vector<Key> elements{identity};
  std::map<Key, int> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Key y = mul(elements[head], g);
      if (index.count(y)) continue;
      if (static_cast<int>(elements.size()) >= options.max_order)
        throw InputError("group closure exceeds the order cap of " +
                         std::to_string(options.max_order));
      index.emplace(y, static_cast<int>(elements.size()));
      elements.push_back(std::move(y));
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(mul(elements[a], elements[b]));
      if (it == index.end())
        throw InputError("generators do not close under multiplication");
      table[a][b] = it->second;
    }
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(label(e));
  return FiniteGroup::from_table(table, std::move(labels), std::move(name));
}

std::string power_label(const std::string& base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

int mod(std::int64_t a, std::int64_t n) {
  return static_cast<int>(((a % n) + n) % n);
}

}  // namespace

std::optional<int> FiniteGroup::find(const std::string& label) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == label) return i;
  if (label == "e" || label == "1" || label == "1_G" || label == "id" ||
      label == "()")
    return 0;
  return std::nullopt;
}

int FiniteGroup::pow(int a, std::int64_t t) const {
  const int o = orders_[a];
  t %= o;
  if (t < 0) t += o;
  int result = 0;
  int base = a;
  while (t > 0) {
    if (t & 1) result = mul(result, base);
    base = mul(base, base);
    t >>= 1;
  }
  return result;
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels,
                                 std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("empty multiplication table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      throw InputError("multiplication table is not square");
  for (const auto& row : table)
    for (const int v : row)
      if (v < 0 || v >= n) throw InputError("table entry out of range");
  for (int a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw InputError("element 0 must be the identity");
  for (int a = 0; a < n; ++a) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row_seen[table[a][b]]++ || col_seen[table[b][a]]++)
        throw InputError("table is not a Latin square (no inverses)");
    }
  }
  auto assoc = [&](int a, int b, int c) {
    return table[table[a][b]][c] == table[a][table[b][c]];
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw InputError("multiplication table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 50000; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw InputError("multiplication table is not associative");
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->mul_[static_cast<std::size_t>(a) * n + b] = table[a][b];
  if (labels.empty())
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  if (static_cast<int>(labels.size()) != n)
    throw InputError("label count does not match the group order");
  g->labels_ = std::move(labels);
  g->name_ = std::move(name);
  g->finish();
  return g;
}

void FiniteGroup::finish() {
  const int n = order_;
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  orders_.assign(n, 1);
  exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int x = a, o = 1;
    while (x != 0) {
      x = mul(x, a);
      ++o;
    }
    orders_[a] = o;
    exponent_ = static_cast<int>(lcm(exponent_, o));
  }
  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
  classes_ = conjugacy_classes(*this);
}

ConjugacyClassSet conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  ConjugacyClassSet out;
  out.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (out.class_of[x] != -1) continue;
    const int id = static_cast<int>(out.classes.size());
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      const int y = g.mul(g.mul(g.inv(h), x), h);
      if (out.class_of[y] == -1) {
        out.class_of[y] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.representatives.push_back(cls.front());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

int exponent(const FiniteGroup& g) { return g.exponent(); }

Permutation parse_permutation(const std::string& text, int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  const std::string& s = text;
  if (s == "1" || s == "e" || s == "id" || s == "1_G") return p;

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw InputError("empty permutation");
  while (i < s.size()) {
    skip_ws();
    if (i == s.size()) break;
    if (s[i] != '(') throw InputError("bad permutation syntax: " + text);
    const std::size_t close = s.find(')', i);
    if (close == std::string::npos) throw InputError("unclosed cycle: " + text);
    const std::string body = s.substr(i + 1, close - i - 1);
    i = close + 1;
    std::vector<int> cycle;
    const bool separated = body.find_first_of(" ,") != std::string::npos;
    if (separated) {
      std::string token;
      std::string normalized = body;
      std::replace(normalized.begin(), normalized.end(), ',', ' ');
      std::istringstream tokens(normalized);
      while (tokens >> token) {
        for (const char c : token)
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("bad permutation point: " + token);
        cycle.push_back(std::stoi(token));
      }
    } else {
      if (body.size() > 1 && degree > 9)
        throw InputError("compact cycle notation needs degree <= 9: " + text);
      for (const char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw InputError("bad permutation point in " + text);
        cycle.push_back(c - '0');
      }
    }
    std::vector<char> used(degree + 1, 0);
    for (const int pt : cycle) {
      if (pt < 1 || pt > degree)
        throw InputError("permutation point out of range in " + text);
      if (used[pt]++) throw InputError("repeated point in cycle: " + text);
    }
    // Apply this cycle after what has been parsed so far.
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      c[cycle[k] - 1] = cycle[(k + 1) % cycle.size()] - 1;
    Permutation next(degree);
    for (int x = 0; x < degree; ++x) next[x] = c[p[x]];
    p = std::move(next);
  }
  return p;
}

std::string format_permutation(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  const bool compact = n <= 9;
  std::string out;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first && !compact) out += ",";
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupPtr cyclic_group(int n, const GroupOptions& options) {
  if (n < 1) throw InputError("cyclic group needs n >= 1");
  const Key gen{n == 1 ? 0 : 1};
  return closure_group(
      {gen}, Key{0}, [n](const Key& a, const Key& b) { return Key{(a[0] + b[0]) % n}; },
      [](const Key& a) { return std::to_string(a[0]); }, "Z" + std::to_string(n),
      options);
}

GroupPtr abelian_group(const std::vector<int>& factors, const GroupOptions& options) {
  if (factors.empty()) throw InputError("abelian group needs at least one factor");
  for (const int f : factors)
    if (f < 1) throw InputError("abelian invariant factors must be >= 1");
  const std::size_t r = factors.size();
  std::vector<Key> gens;
  for (std::size_t i = 0; i < r; ++i) {
    Key g(r, 0);
    g[i] = factors[i] == 1 ? 0 : 1;
    gens.push_back(g);
  }
  std::string name;
  for (std::size_t i = 0; i < r; ++i) name += (i ? "xZ" : "Z") + std::to_string(factors[i]);
  return closure_group(
      gens, Key(r, 0),
      [factors](const Key& a, const Key& b) {
        Key c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % factors[i];
        return c;
      },
      [](const Key& a) {
        std::string s = "(";
        for (std::size_t i = 0; i < a.size(); ++i)
          s += (i ? "," : "") + std::to_string(a[i]);
        return s + ")";
      },
      name, options);
}

GroupPtr dihedral_group(int n, const GroupOptions& options) {
  if (n < 1) throw InputError("dihedral group needs n >= 1");
  // (r, i) is b^r a^i; a b = b a^-1.
  auto mul = [n](const Key& x, const Key& y) {
    const int i = y[0] == 0 ? x[1] : -x[1];
    return Key{(x[0] + y[0]) % 2, mod(i + y[1], n)};
  };
  auto label = [](const Key& x) {
    const std::string a = power_label("a", x[1]);
    if (x[0] == 0) return a.empty() ? std::string("1") : a;
    return "b" + a;
  };
  return closure_group({Key{0, n == 1 ? 0 : 1}, Key{1, 0}}, Key{0, 0}, mul, label,
                       "D" + std::to_string(2 * n), options);
}

GroupPtr symmetric_group(int n, const GroupOptions& options) {
  if (n < 1 || n > 5) throw InputError("symmetric built-in supports 1 <= n <= 5");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(parse_permutation("(1 2)", n));
    std::string cyc = "(";
    for (int i = 1; i <= n; ++i) cyc += (i > 1 ? " " : "") + std::to_string(i);
    gens.push_back(parse_permutation(cyc + ")", n));
  }
  auto g = permutation_group(n, gens, options);
  return FiniteGroup::from_table(
      [&] {
        std::vector<std::vector<int>> t(g->order(), std::vector<int>(g->order()));
        for (int a = 0; a < g->order(); ++a)
          for (int b = 0; b < g->order(); ++b) t[a][b] = g->mul(a, b);
        return t;
      }(),
      g->labels(), "S" + std::to_string(n));
}

GroupPtr alternating_group(int n, const GroupOptions& options) {
  if (n < 1 || n > 5) throw InputError("alternating built-in supports 1 <= n <= 5");
  std::vector<Permutation> gens;
  if (n == 3) gens.push_back(parse_permutation("(1 2 3)", 3));
  if (n == 4) {
    gens.push_back(parse_permutation("(1 2)(3 4)", 4));
    gens.push_back(parse_permutation("(1 2 3)", 4));
  }
  if (n == 5) {
    gens.push_back(parse_permutation("(1 2)(3 4)", 5));
    gens.push_back(parse_permutation("(1 3 5)", 5));
  }
  auto g = permutation_group(n, gens, options);
  std::vector<std::vector<int>> t(g->order(), std::vector<int>(g->order()));
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b) t[a][b] = g->mul(a, b);
  return FiniteGroup::from_table(t, g->labels(), "A" + std::to_string(n));
}

GroupPtr dicyclic_group(int n, const GroupOptions& options) {
  if (n < 1) throw InputError("dicyclic group needs n >= 1");
  const int order_a = 2 * n;
  // (r, i) is x^r a^i with x^2 = a^n and a x = x a^-1.
  auto mul = [n, order_a](const Key& u, const Key& v) {
    const int i = v[0] == 0 ? u[1] : -u[1];
    int e = i + v[1];
    int r = u[0] + v[0];
    if (r == 2) {
      r = 0;
      e += n;
    }
    return Key{r, mod(e, order_a)};
  };
  auto label = [](const Key& x) {
    const std::string a = power_label("a", x[1]);
    if (x[0] == 0) return a.empty() ? std::string("1") : a;
    return "x" + a;
  };
  return closure_group({Key{0, 1}, Key{1, 0}}, Key{0, 0}, mul, label,
                       "Dic" + std::to_string(4 * n), options);
}

GroupPtr metacyclic_group(int n, int k, int r, const GroupOptions& options) {
  if (n < 1 || k < 1) throw InputError("metacyclic group needs n, k >= 1");
  std::vector<int> rpow(k + 1, 1);
  for (int j = 1; j <= k; ++j) rpow[j] = mod(static_cast<std::int64_t>(rpow[j - 1]) * r, n);
  if (rpow[k] != 1 % n) throw InputError("metacyclic group needs r^k = 1 mod n");
  // (i, j) is a^i b^j with b a b^-1 = a^r.
  auto mul = [n, k, rpow](const Key& u, const Key& v) {
    const std::int64_t i = u[0] + static_cast<std::int64_t>(rpow[u[1]]) * v[0];
    return Key{mod(i, n), (u[1] + v[1]) % k};
  };
  auto label = [](const Key& x) {
    const std::string s = power_label("a", x[0]) + power_label("b", x[1]);
    return s.empty() ? std::string("1") : s;
  };
  return closure_group({Key{n == 1 ? 0 : 1, 0}, Key{0, k == 1 ? 0 : 1}}, Key{0, 0}, mul,
                       label,
                       "Z" + std::to_string(n) + ":" + std::to_string(r) + "Z" +
                           std::to_string(k),
                       options);
}

GroupPtr permutation_group(int degree, const std::vector<Permutation>& generators,
                           const GroupOptions& options) {
  if (degree < 1 || degree > 16)
    throw InputError("permutation groups are limited to 1..16 points");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw InputError("generator has the wrong degree");
    std::vector<char> hit(degree, 0);
    for (const int x : g) {
      if (x < 0 || x >= degree || hit[x]++)
        throw InputError("generator is not a permutation");
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  return closure_group(
      generators, id,
      [](const Key& p, const Key& q) {
        Key r(p.size());
        for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
        return r;
      },
      [](const Key& p) { return format_permutation(p); }, "perm", options);
}

GroupPtr table_group(const std::vector<std::vector<int>>& table,
                     std::vector<std::string> labels, const GroupOptions& options) {
  if (static_cast<int>(table.size()) > options.max_order)
    throw InputError("table exceeds the order cap of " +
                     std::to_string(options.max_order));
  return FiniteGroup::from_table(table, std::move(labels), "table");
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b,
                        const GroupOptions& options) {
  const int n = a.order() * b.order();
  if (n > options.max_order)
    throw InputError("direct product exceeds the order cap");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    const int xa = x / b.order(), xb = x % b.order();
    labels[x] = "(" + a.label(xa) + "," + b.label(xb) + ")";
    for (int y = 0; y < n; ++y) {
      const int ya = y / b.order(), yb = y % b.order();
      table[x][y] = a.mul(xa, ya) * b.order() + b.mul(xb, yb);
    }
  }
  return FiniteGroup::from_table(table, std::move(labels), a.name() + "x" + b.name());
}

}  // namespace qasc
