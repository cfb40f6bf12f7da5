#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qasc/chartable.hpp"
#include "qasc/sc_digraph.hpp"
#include "qasc/square_root.hpp"

namespace qasc {

/// A subgroup of Z_m^*, sorted.
struct TSubgroup {
  int modulus = 1;
  std::vector<int> elements{1};

  int size() const { return static_cast<int>(elements.size()); }
  bool is_full() const;
};

/// {t in Z_m^* : I1^t = I1, (I2 \ I3)^t = I2 \ I3, (I3 \ I2)^t = I3 \ I2}.
TSubgroup compute_T(const IMultisets& im, int m);

/// sigma_t(x) = x for every t in T.
bool in_fixed_field(const CycNum& x, const TSubgroup& t);

/// Names the fixed field of T: "Q", "Q(w_d)" when it is cyclotomic, otherwise
/// the fixed field of T inside Q(w_m).
std::string describe_fixed_field(const TSubgroup& t);

enum class SquareVerdict { square, non_square, zero, undetermined };

struct SquareTest {
  SquareVerdict verdict = SquareVerdict::undetermined;
  /// A root lying in K, for squares.
  std::optional<CycNum> witness;
  /// Non-residue certificate that a is not even a square in Q(w_m).
  std::optional<NonResidueCertificate> certificate;
  /// For a square of Q(w_m) that is not a square in K: a unit t in T whose
  /// automorphism moves the root.
  std::optional<int> moved_by;
  double confidence = 1.0;
  std::string note;
};

/// Squareness of a in the fixed field K of T; a must lie in K.
SquareTest is_square_in_K(const CycNum& a, const TSubgroup& t, const SqrtOptions& options = {});

/// Basis of the subgroup of K^x / K^x2 generated by the nonzero radicands.
struct SquareClassGroup {
  std::vector<CycNum> basis;
  std::int64_t order() const { return std::int64_t{1} << basis.size(); }
};

/// Incremental basis: zeros and exact duplicates are skipped; a radicand joins
/// the basis when no product of it with a subset of the basis is a square in
/// K. Throws UndeterminedError naming the radicand when a test is undecided.
SquareClassGroup square_class_group(const std::vector<CycNum>& radicands, const TSubgroup& t,
                                    const SqrtOptions& options = {});

struct DegreeReport {
  int modulus = 1;
  TSubgroup T;
  /// [K : Q] = phi(m) / |T|.
  std::int64_t k_degree = 1;
  std::string k_description;
  std::vector<RadicalEigenvalue> eigenvalues;
  SquareClassGroup M;
  std::string sf_description;
  std::int64_t degree = 1;
  bool integral = true;
};

/// deg = phi(m) |M| / |T| through the full pipeline.
DegreeReport algebraic_degree(const SemiCayleyDigraph& graph, const CharacterTable& table,
                              const SqrtOptions& options = {});

/// Cayley digraph Cay(G, S): T from S alone, deg = phi(m) / |T|, SF = K.
DegreeReport degree_cayley(const GMultiset& s, const CharacterTable& table);

/// Bi-Cayley graph SC(G, 0, 0, S, S^-1): T from S S^-1, M generated by the
/// classes of |chi(S)|^2.
DegreeReport degree_bcay(const GMultiset& s, const CharacterTable& table,
                         const SqrtOptions& options = {});

/// T = Z_m^* and |M| = 1; skips the square-class work when T is proper.
bool is_integral(const SemiCayleyDigraph& graph, const CharacterTable& table,
                 const SqrtOptions& options = {});

struct AbelianConsistency {
  int exponent = 1;
  int order = 1;
  TSubgroup T;
  TSubgroup H;
  bool consistent = true;
};

/// For abelian G of order n: H is the analogue of T inside Z_n^*; checks
/// phi(m)/|T| = phi(n)/|H|.
AbelianConsistency abelian_consistency(const SemiCayleyDigraph& graph);

}  // namespace qasc
