#include "qasc/embedding.hpp"

#include <stdexcept>

namespace qasc {

std::uint64_t next_split_prime(int m, std::uint64_t after) {
  const std::uint64_t step = m <= 2 ? 2 : static_cast<std::uint64_t>(m);
  // Candidates are 1 + k*step; for m <= 2 that is the odd numbers.
  std::uint64_t q = after < 2 ? 1 : after - (after - 1) % step;
  do {
    q += step;
  } while (!is_prime(q));
  return q;
}

PrimeEmbedding make_embedding(int m, std::uint64_t p) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("embedding prime must be an odd prime");
  if ((p - 1) % static_cast<std::uint64_t>(m) != 0)
    throw std::invalid_argument("embedding prime must be 1 mod m");
  PrimeEmbedding e{m, p, 1};
  if (m == 1) return e;
  if (m == 2) {
    e.z = p - 1;
    return e;
  }
  const auto factors = prime_factors(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    const std::uint64_t z = powmod(g, (p - 1) / m, p);
    bool primitive = true;
    for (const auto q : factors) {
      if (powmod(z, static_cast<std::uint64_t>(m / q), p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      e.z = z;
      return e;
    }
  }
  throw std::logic_error("no primitive m-th root of unity mod p");
}

bool is_p_integral(const CycNum& x, std::uint64_t p) {
  for (const auto& c : x.coeffs())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return false;
  return true;
}

std::uint64_t residue(const CycNum& x, const PrimeEmbedding& e, int s) {
  if (x.modulus() != e.modulus)
    throw std::invalid_argument("residue: modulus mismatch");
  const std::uint64_t p = e.p;
  const std::uint64_t base = powmod(e.z, static_cast<std::uint64_t>(
                                             ((s % e.modulus) + e.modulus) % e.modulus),
                                    p);
  std::uint64_t acc = 0, power = 1;
  for (const auto& c : x.coeffs()) {
    if (c != 0) {
      if (mpz_divisible_ui_p(c.get_den_mpz_t(), p))
        throw std::domain_error("residue: denominator divisible by p");
      const std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), p);
      const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
      acc = (acc + mulmod(mulmod(num, invmod(den, p), p), power, p)) % p;
    }
    power = mulmod(power, base, p);
  }
  return acc;
}

}  // namespace qasc
