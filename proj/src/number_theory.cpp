#include "qasc/number_theory.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qasc {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::llabs(a / gcd(a, b) * b);
}

std::int64_t euler_phi(std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
  std::int64_t result = m;
  for (const auto p : prime_factors(m)) result = result / p * (p - 1);
  return result;
}

std::vector<int> units_mod(int m) {
  if (m <= 0) throw std::invalid_argument("units_mod: m must be positive");
  if (m <= 2) return {1};
  std::vector<int> out;
  for (int t = 1; t < m; ++t)
    if (gcd(t, m) == 1) out.push_back(t);
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("invmod: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

int legendre(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);

  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (legendre(z, p) != -1) ++z;

  int m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    int i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

std::optional<Rat> rational_reconstruction(const BigInt& residue,
                                           const BigInt& modulus) {
  BigInt bound;
  {
    BigInt half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  }
  BigInt r0 = modulus, r1 = residue % modulus;
  if (r1 < 0) r1 += modulus;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  BigInt den = abs(t1);
  if (den == 0 || den > bound) return std::nullopt;
  BigInt g = gcd(den, modulus);
  if (g != 1) return std::nullopt;
  BigInt num = t1 < 0 ? BigInt(-r1) : r1;
  Rat out(num, den);
  out.canonicalize();
  return out;
}

BigInt rat_mod(const Rat& x, const BigInt& modulus) {
  BigInt den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), x.get_den_mpz_t(),
                 modulus.get_mpz_t()) == 0)
    throw std::domain_error("rat_mod: denominator not invertible");
  BigInt out = BigInt(x.get_num()) * den_inv % modulus;
  if (out < 0) out += modulus;
  return out;
}

}  // namespace qasc
