#pragma once

#include <cstdint>
#include <vector>

#include "qasc/cyclotomic.hpp"

namespace qasc {

/// A ring map Z_(p)[w_m] -> F_p sending w_m to z, where z is a root of Phi_m
/// modulo a prime p = 1 (mod m). Composing with sigma_s sends w_m to z^s.
struct PrimeEmbedding {
  int modulus = 1;
  std::uint64_t p = 3;
  std::uint64_t z = 1;
};

/// Smallest prime q > after with q = 1 (mod m) (and q odd).
std::uint64_t next_split_prime(int m, std::uint64_t after);

/// The embedding for a given split prime, using the root of Phi_m obtained
/// from the least base g >= 2 whose power g^((p-1)/m) has exact order m.
PrimeEmbedding make_embedding(int m, std::uint64_t p);

/// x evaluated at w_m -> z^s modulo p. Throws std::domain_error when p
/// divides a coefficient denominator.
std::uint64_t residue(const CycNum& x, const PrimeEmbedding& e, int s = 1);

/// Denominators of x are all coprime to p.
bool is_p_integral(const CycNum& x, std::uint64_t p);

}  // namespace qasc
