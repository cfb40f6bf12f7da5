#pragma once

#include <optional>
#include <string>

#include "qasc/cyclotomic.hpp"
#include "qasc/embedding.hpp"

namespace qasc {

struct SqrtOptions {
  /// Number of split primes examined for a non-residue before giving up on a
  /// deterministic non-square certificate.
  int probabilistic_primes = 64;
  /// Largest coefficient numerator/denominator bit length attempted when
  /// reconstructing a root.
  int height_cap_bits = 4096;
};

/// Witness that a is not a square in Q(w_m): under w_m -> z^s the residue of
/// a is a quadratic non-residue modulo p.
struct NonResidueCertificate {
  PrimeEmbedding embedding;
  int exponent = 1;
  std::uint64_t residue = 0;
};

enum class SqrtKind { square, non_square, undetermined };

struct SqrtResult {
  SqrtKind kind = SqrtKind::undetermined;
  /// The root, normalized so its first nonzero coordinate is positive.
  std::optional<CycNum> root;
  std::optional<NonResidueCertificate> certificate;
  int primes_tested = 0;
  /// 1 - 2^-primes_tested for an undetermined verdict, 1 otherwise.
  double confidence = 1.0;
  std::string note;

  bool is_square() const { return kind == SqrtKind::square; }
};

/// Decides whether a is a square in Q(w_m).
///
/// Residues of a are checked at every embedding over successive split primes;
/// a non-residue certifies a non-square. When all residues are squares the
/// root is built p-adically: square roots mod p are Hensel-lifted to p^k,
/// interpolated back to power-basis coordinates, rationally reconstructed and
/// verified by exact squaring, doubling k up to the height cap. Any root y
/// satisfies sigma_t(y) = +-y for t in the stabilizer of a, so the search only
/// ranges over sign patterns constant on cosets of that stabilizer or of one
/// of its index-2 subgroups.
SqrtResult sqrt_in_cyclotomic(const CycNum& a, const SqrtOptions& options = {});

/// Sign normalization: returns -y if the first nonzero coordinate is negative.
CycNum normalize_sign(const CycNum& y);

}  // namespace qasc
