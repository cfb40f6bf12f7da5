#include "qasc/oracle.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Eigenvalues>

static_assert(sizeof(unsigned long) == 8, "mpz_set_ui needs 64-bit unsigned long");

namespace qasc {

namespace {

using CPoly = std::vector<CycNum>;

CPoly multiply(const CPoly& a, const CPoly& b, int m) {
  CPoly out(a.size() + b.size() - 1, CycNum(m, 0L));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

BigInt eval(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<std::uint64_t> hessenberg_charpoly_mod(const Eigen::MatrixXi& a, std::uint64_t p) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::int64_t v = a(i, j) % static_cast<std::int64_t>(p);
      h[i][j] = v < 0 ? v + p : v;
    }
  auto sub = [p](std::uint64_t x, std::uint64_t y) { return x >= y ? x - y : x + p - y; };
  auto add = [p](std::uint64_t x, std::uint64_t y) { return x + y >= p ? x + y - p : x + y; };
  for (int j = 0; j + 2 < n; ++j) {
    int piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint64_t inv = powmod(h[j + 1][j], p - 2, p);
    for (int r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      const std::uint64_t u = mulmod(h[r][j], inv, p);
      for (int c = 0; c < n; ++c) h[r][c] = sub(h[r][c], mulmod(u, h[j + 1][c], p));
      for (int c = 0; c < n; ++c) h[c][j + 1] = add(h[c][j + 1], mulmod(u, h[c][r], p));
    }
  }
  // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}(x).
  std::vector<std::vector<std::uint64_t>> polys{{1}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next(k + 2, 0);
    const auto& prev = polys[k];
    for (int d = 0; d <= k; ++d) {
      next[d + 1] = add(next[d + 1], prev[d]);
      next[d] = sub(next[d], mulmod(h[k][k], prev[d], p));
    }
    std::uint64_t prod = 1;
    for (int i = k - 1; i >= 0; --i) {
      prod = mulmod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      const std::uint64_t coef = mulmod(h[i][k], prod, p);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d)
        next[d] = sub(next[d], mulmod(coef, polys[i][d], p));
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

}  // namespace

IntPolynomial charpoly_modular(const Eigen::MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  const long rho = std::max<long>(1, n ? a.cwiseAbs().rowwise().sum().maxCoeff() : 0);
  BigInt bound = 0, binom = 1, power = 1;
  for (int k = 0; k <= n; ++k) {
    if (binom * power > bound) bound = binom * power;
    binom = binom * (n - k) / (k + 1);
    power *= rho;
  }
  std::vector<BigInt> value(n + 1, 0);
  BigInt modulus = 1;
  std::uint64_t p = (std::uint64_t{1} << 62);
  while (modulus <= 2 * bound) {
    do --p;
    while (!is_prime(p));
    const auto r = hessenberg_charpoly_mod(a, p);
    BigInt bp;
    mpz_set_ui(bp.get_mpz_t(), p);
    BigInt inv;
    const BigInt mmod = modulus % bp;
    mpz_invert(inv.get_mpz_t(), mmod.get_mpz_t(), bp.get_mpz_t());
    for (int d = 0; d <= n; ++d) {
      BigInt t;
      mpz_set_ui(t.get_mpz_t(), r[d]);
      t = (t - value[d] % bp) * inv % bp;
      if (t < 0) t += bp;
      value[d] += modulus * t;
    }
    modulus *= bp;
  }
  for (auto& v : value)
    if (2 * v > modulus) v -= modulus;
  return value;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntPolynomial charpoly_by_interpolation(const Eigen::MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  auto det_at = [&](int x) {
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = (i == j ? x : 0) - a(i, j);
    return bareiss_determinant(std::move(m));
  };
  // Newton divided differences on nodes 0..n.
  std::vector<Rat> coef(n + 1);
  for (int i = 0; i <= n; ++i) coef[i] = Rat(det_at(i));
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / Rat(level);
      coef[i].canonicalize();
    }
  // Expand sum coef[i] prod_{j<i} (x - j) into monomials.
  std::vector<Rat> poly(n + 1, 0), basis{Rat(1)};
  for (int i = 0; i <= n; ++i) {
    for (std::size_t d = 0; d < basis.size(); ++d) poly[d] += coef[i] * basis[d];
    std::vector<Rat> next(basis.size() + 1, 0);
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * i;
    }
    basis = std::move(next);
  }
  IntPolynomial out;
  for (auto& c : poly) {
    if (c.get_den() != 1) throw std::logic_error("interpolated charpoly is not integral");
    out.push_back(c.get_num());
  }
  for (int x = n + 1; x <= 2 * n; ++x)
    if (eval(out, x) != det_at(x)) throw std::logic_error("interpolation check failed");
  return out;
}

std::string polynomial_to_string(const IntPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    BigInt c = p[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    c = abs(c);
    if (c != 1 || i == 0) os << c;
    if (i > 0) os << (c != 1 ? "*x" : "x");
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

IntPolynomial predicted_charpoly(const std::vector<RadicalEigenvalue>& eigs, int modulus) {
  CPoly poly{CycNum(modulus, 1L)};
  for (const auto& e : eigs) {
    const CPoly quad{e.pair_product(), -e.pair_sum(), CycNum(modulus, 1L)};
    for (int k = 0; k < e.multiplicity(); ++k) poly = multiply(poly, quad, modulus);
  }
  IntPolynomial out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto r = is_rational(poly[i]);
    if (!r) throw std::runtime_error("coefficient of x^" + std::to_string(i) + " is irrational");
    if (r->get_den() != 1)
      throw std::runtime_error("coefficient of x^" + std::to_string(i) + " is not an integer");
    out.push_back(r->get_num());
  }
  return out;
}

SpectrumIdentityReport spectrum_identity_check(const SemiCayleyDigraph& graph,
                                               const CharacterTable& table) {
  SpectrumIdentityReport report;
  report.actual = berkowitz_charpoly(adjacency_matrix(graph));
  try {
    report.expected = predicted_charpoly(eigenvalues(graph, table), table.modulus);
  } catch (const std::runtime_error& e) {
    report.ok = false;
    report.detail = e.what();
    return report;
  }
  if (report.expected.size() != report.actual.size()) {
    report.ok = false;
    report.detail = "degree mismatch";
    return report;
  }
  for (std::size_t i = 0; i < report.expected.size(); ++i)
    if (report.expected[i] != report.actual[i]) {
      report.ok = false;
      report.detail = "first mismatch at x^" + std::to_string(i) + ": expected " +
                      report.expected[i].get_str() + ", got " + report.actual[i].get_str();
      return report;
    }
  return report;
}

bool splits_over_integers(IntPolynomial p, const BigInt& bound) {
  while (p.size() > 1 && p[0] == 0) p.erase(p.begin());
  for (BigInt c = -bound; c <= bound && p.size() > 1; ++c) {
    if (c == 0) continue;
    while (p.size() > 1 && p[0] % c == 0 && eval(p, c) == 0) {
      // Synthetic division by (x - c).
      IntPolynomial q(p.size() - 1);
      BigInt carry = 0;
      for (std::size_t i = p.size() - 1; i-- > 0;) {
        carry = p[i + 1] + carry * c;
        q[i] = carry;
      }
      p = std::move(q);
    }
  }
  return p.size() == 1;
}

bool integrality_bruteforce(const SemiCayleyDigraph& graph) {
  const Eigen::MatrixXi a = adjacency_matrix(graph);
  // Every eigenvalue is bounded by the largest row sum.
  const int bound = a.rows() ? a.rowwise().sum().maxCoeff() : 0;
  return splits_over_integers(charpoly_modular(a), bound);
}

NumericSpectrumReport numeric_spectrum_check(const SemiCayleyDigraph& graph,
                                             const CharacterTable& table,
                                             const std::vector<RadicalEigenvalue>& eigs,
                                             double tol) {
  NumericSpectrumReport report;
  const Eigen::MatrixXd a = adjacency_matrix(graph).cast<double>();
  const Eigen::VectorXcd numeric = Eigen::EigenSolver<Eigen::MatrixXd>(a, false).eigenvalues();

  struct Cluster {
    std::complex<double> value;
    int capacity = 0;
    std::complex<double> sum = 0;
    int used = 0;
  };
  std::vector<Cluster> clusters;
  for (const auto& e : eigs) {
    const auto [plus, minus] = e.numeric();
    for (const auto& v : {plus, minus}) {
      auto it = std::find_if(clusters.begin(), clusters.end(),
                             [&](const Cluster& c) { return std::abs(c.value - v) <= tol; });
      if (it == clusters.end()) clusters.push_back({v, e.multiplicity()});
      else it->capacity += e.multiplicity();
    }
  }
  int predicted = 0;
  for (const auto& c : clusters) predicted += c.capacity;
  if (predicted != numeric.size()) {
    report.ok = false;
    report.detail = "predicted " + std::to_string(predicted) + " eigenvalues, matrix has " +
                    std::to_string(numeric.size());
    return report;
  }

  std::vector<std::tuple<double, int, int>> pairs;
  for (int i = 0; i < numeric.size(); ++i)
    for (int c = 0; c < static_cast<int>(clusters.size()); ++c)
      pairs.emplace_back(std::abs(numeric[i] - clusters[c].value), i, c);
  std::sort(pairs.begin(), pairs.end());
  std::vector<char> assigned(numeric.size(), 0);
  for (const auto& [dist, i, c] : pairs) {
    if (assigned[i] || clusters[c].used == clusters[c].capacity) continue;
    assigned[i] = 1;
    ++clusters[c].used;
    clusters[c].sum += numeric[i];
    report.worst_pair_distance = std::max(report.worst_pair_distance, dist);
  }
  for (const auto& c : clusters) {
    const double err = std::abs(c.sum / static_cast<double>(c.used) - c.value);
    report.worst_cluster_error = std::max(report.worst_cluster_error, err);
  }
  const double scale = std::max(1.0, a.cwiseAbs().rowwise().sum().maxCoeff());
  if (report.worst_cluster_error > tol * scale) {
    report.ok = false;
    report.detail = "eigenvalue cluster off by " + std::to_string(report.worst_cluster_error);
  }

  for (const auto& e : eigs) {
    auto chi = [&](const GMultiset& s) {
      return char_on_multiset(table, e.character, s).embed();
    };
    const auto d = chi(graph.t11()) - chi(graph.t22());
    const auto disc = d * d + 4.0 * chi(graph.t12()) * chi(graph.t21());
    const auto r = e.radicand.embed();
    const double err = std::abs(disc - r) / std::max(1.0, std::abs(r));
    report.worst_discriminant_error = std::max(report.worst_discriminant_error, err);
  }
  if (report.worst_discriminant_error > tol) {
    report.ok = false;
    if (!report.detail.empty()) report.detail += "; ";
    report.detail += "discriminant differs from radicand by " +
                     std::to_string(report.worst_discriminant_error);
  }
  return report;
}

NumericSpectrumReport numeric_spectrum_check(const SemiCayleyDigraph& graph,
                                             const CharacterTable& table, double tol) {
  return numeric_spectrum_check(graph, table, eigenvalues(graph, table), tol);
}

}  // namespace qasc
