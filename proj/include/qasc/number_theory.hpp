#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace qasc {

using Rat = mpq_class;
using BigInt = mpz_class;

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Euler totient.
std::int64_t euler_phi(std::int64_t m);

/// Units of Z/mZ in increasing order. For m = 1 (and m = 2) this is {1}.
std::vector<int> units_mod(int m);

/// Distinct prime divisors in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

bool is_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// Legendre symbol of a modulo an odd prime p: 0, 1 or -1.
int legendre(std::uint64_t a, std::uint64_t p);

/// A square root of a modulo the odd prime p (Tonelli-Shanks); empty if a is a
/// non-residue.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

/// Rational reconstruction: the unique n/d with |n|, d <= sqrt(modulus / 2)
/// and n == d * residue (mod modulus), if it exists.
std::optional<Rat> rational_reconstruction(const BigInt& residue,
                                           const BigInt& modulus);

/// Reduce a rational modulo an integer coprime to its denominator.
BigInt rat_mod(const Rat& x, const BigInt& modulus);

}  // namespace qasc
