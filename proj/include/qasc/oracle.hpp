#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qasc/chartable.hpp"
#include "qasc/number_theory.hpp"
#include "qasc/sc_digraph.hpp"

namespace qasc {

/// Ascending integer coefficients.
using IntPolynomial = std::vector<BigInt>;

/// det(x I - A) by Berkowitz's division-free algorithm, computed in Scalar
/// (which must be an exact ring containing the entries of A). Ascending.
template <typename Scalar = BigInt, typename Derived>
std::vector<Scalar> berkowitz_charpoly(const Eigen::MatrixBase<Derived>& a) {
  const Eigen::Index n = a.rows();
  eigen_assert(a.rows() == a.cols());
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m[i][j] = Scalar(a(i, j));

  std::vector<Scalar> p{Scalar(1)};  // descending
  for (Eigen::Index k = 0; k < n; ++k) {
    std::vector<Scalar> t(k + 2, Scalar(0));
    t[0] = Scalar(1);
    t[1] = -m[k][k];
    std::vector<Scalar> v(k);
    for (Eigen::Index i = 0; i < k; ++i) v[i] = m[i][k];
    for (Eigen::Index j = 2; j <= k + 1; ++j) {
      Scalar s(0);
      for (Eigen::Index i = 0; i < k; ++i)
        if (m[k][i] != 0) s += m[k][i] * v[i];
      t[j] = -s;
      if (j == k + 1) break;
      std::vector<Scalar> next(k, Scalar(0));
      for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index l = 0; l < k; ++l)
          if (m[i][l] != 0) next[i] += m[i][l] * v[l];
      v = std::move(next);
    }
    std::vector<Scalar> q(k + 2, Scalar(0));
    for (Eigen::Index i = 0; i < k + 2; ++i)
      for (Eigen::Index j = 0; j <= std::min(i, k); ++j) q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

/// det(x I - A) from fraction-free (Bareiss) determinants at x = 0..n and
/// interpolation; checks the interpolant against the determinants up to 2n.
IntPolynomial charpoly_by_interpolation(const Eigen::MatrixXi& a);

/// det(x I - A) by Hessenberg reduction modulo word-size primes and Chinese
/// remaindering. Enough primes are used to exceed twice the coefficient bound
/// C(n, k) rho^k, rho the largest absolute row sum, so the result is exact.
IntPolynomial charpoly_modular(const Eigen::MatrixXi& a);

/// Bareiss determinant of an integer matrix.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

std::string polynomial_to_string(const IntPolynomial& p);

struct SpectrumIdentityReport {
  bool ok = true;
  IntPolynomial expected;  // from the character formula
  IntPolynomial actual;    // Berkowitz
  std::string detail;
};

/// Expands prod_chi (x^2 - (A/d) x + (A^2 - r)/4d^2)^{d^2} over Q(w_m) and
/// compares it exactly with the characteristic polynomial of the adjacency
/// matrix.
SpectrumIdentityReport spectrum_identity_check(const SemiCayleyDigraph& graph,
                                               const CharacterTable& table);

/// Product of the eigenvalue quadratics; throws if a coefficient is irrational.
IntPolynomial predicted_charpoly(const std::vector<RadicalEigenvalue>& eigs, int modulus);

/// The monic integer polynomial splits into linear factors x - c with
/// integers |c| <= bound.
bool splits_over_integers(IntPolynomial p, const BigInt& bound);

/// Integral spectrum decided from the characteristic polynomial alone.
bool integrality_bruteforce(const SemiCayleyDigraph& graph);

struct NumericSpectrumReport {
  bool ok = true;
  /// Largest distance between a predicted eigenvalue and the mean of the
  /// numeric eigenvalues matched to it.
  double worst_cluster_error = 0;
  /// Largest distance of any single numeric eigenvalue from its match.
  double worst_pair_distance = 0;
  /// Largest mismatch between the two discriminant forms.
  double worst_discriminant_error = 0;
  std::string detail;
};

/// Numeric eigenvalues of the adjacency matrix against the embedded radical
/// eigenvalues, plus the discriminant (chi(T11)-chi(T22))^2 + 4 chi(T12)
/// chi(T21) against each radicand. Predicted values equal to within tol form
/// one cluster; numeric values are assigned greedily to the nearest cluster
/// with spare capacity and cluster means are compared, which keeps defective
/// (Jordan) eigenvalues from failing the check.
NumericSpectrumReport numeric_spectrum_check(const SemiCayleyDigraph& graph,
                                             const CharacterTable& table,
                                             const std::vector<RadicalEigenvalue>& eigs,
                                             double tol = 1e-9);
NumericSpectrumReport numeric_spectrum_check(const SemiCayleyDigraph& graph,
                                             const CharacterTable& table, double tol = 1e-9);

}  // namespace qasc
