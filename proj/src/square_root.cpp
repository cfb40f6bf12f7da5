#include "qasc/square_root.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qasc/unit_group.hpp"

namespace qasc {

namespace {

constexpr int kMaxSignBits = 22;

BigInt reduce(const BigInt& x, const BigInt& modulus) {
  BigInt r = x % modulus;
  if (r < 0) r += modulus;
  return r;
}

BigInt inverse_mod(const BigInt& x, const BigInt& modulus) {
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: not a unit");
  return out;
}

BigInt eval_mod(const std::vector<BigInt>& poly, const BigInt& x,
                const BigInt& modulus) {
  BigInt acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = reduce(acc * x + poly[i], modulus);
  return acc;
}

// Newton iteration for a root of f modulo `modulus`, starting from a simple
// root modulo p.
BigInt hensel_root(const std::vector<BigInt>& f, BigInt root,
                   const BigInt& modulus) {
  std::vector<BigInt> df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<unsigned long>(i));
  for (int iter = 0; iter < 4096; ++iter) {
    const BigInt value = eval_mod(f, root, modulus);
    if (value == 0) return root;
    root = reduce(root - value * inverse_mod(eval_mod(df, root, modulus), modulus),
                  modulus);
  }
  throw std::logic_error("hensel_root did not converge");
}

BigInt hensel_sqrt(std::uint64_t root_mod_p, const BigInt& target,
                   const BigInt& modulus) {
  BigInt r = root_mod_p;
  for (int iter = 0; iter < 4096; ++iter) {
    const BigInt err = reduce(r * r - target, modulus);
    if (err == 0) return r;
    r = reduce(r - err * inverse_mod(reduce(2 * r, modulus), modulus), modulus);
  }
  throw std::logic_error("hensel_sqrt did not converge");
}

using Matrix = std::vector<std::vector<BigInt>>;

// Inverse modulo p^k of a matrix that is invertible modulo p.
Matrix invert_mod(Matrix a, const BigInt& modulus, std::uint64_t p) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && mpz_divisible_ui_p(a[pivot][col].get_mpz_t(), p)) ++pivot;
    if (pivot == n) throw std::logic_error("Vandermonde matrix singular mod p");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const BigInt scale = inverse_mod(a[col][col], modulus);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = reduce(a[col][j] * scale, modulus);
      inv[col][j] = reduce(inv[col][j] * scale, modulus);
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const BigInt f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] = reduce(a[row][j] - f * a[col][j], modulus);
        inv[row][j] = reduce(inv[row][j] - f * inv[col][j], modulus);
      }
    }
  }
  return inv;
}

// One p-adic precision level: the lifted embeddings and the interpolation
// matrix from embedding values back to power-basis coordinates.
struct PadicLevel {
  BigInt modulus;
  std::vector<BigInt> values;  // a at w -> z^s, indexed like units
  Matrix interpolation;        // coordinate i from value at unit index j
};

PadicLevel make_level(const CycNum& a, const PrimeEmbedding& e, int k) {
  const auto& field = *a.field();
  const int phi = field.degree();
  const auto& units = field.units();
  PadicLevel level;
  mpz_ui_pow_ui(level.modulus.get_mpz_t(), e.p, static_cast<unsigned long>(k));
  const BigInt& mod = level.modulus;

  const BigInt z = hensel_root(field.polynomial(), BigInt(e.z), mod);
  Matrix vandermonde(phi, std::vector<BigInt>(phi));
  std::vector<BigInt> coeffs;
  for (const auto& c : a.coeffs()) coeffs.push_back(rat_mod(c, mod));
  for (int j = 0; j < phi; ++j) {
    BigInt root;
    mpz_powm_ui(root.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(units[j]),
                mod.get_mpz_t());
    BigInt power = 1;
    for (int i = 0; i < phi; ++i) {
      vandermonde[j][i] = power;
      power = reduce(power * root, mod);
    }
    level.values.push_back(eval_mod(coeffs, root, mod));
  }
  level.interpolation = invert_mod(vandermonde, mod, e.p);
  return level;
}

// Tries every sign pattern constant on the cosets of `sub`.
std::optional<CycNum> search_patterns(const CycNum& a, const PadicLevel& level,
                                      std::uint64_t p,
                                      const std::vector<int>& sub,
                                      std::map<int, BigInt>& sqrt_cache) {
  const auto& field = *a.field();
  const int m = field.modulus();
  const int phi = field.degree();
  const auto& units = field.units();
  const BigInt& mod = level.modulus;
  auto unit_index = [&](int t) {
    return static_cast<int>(std::lower_bound(units.begin(), units.end(), t) -
                            units.begin());
  };

  const auto cosets = unit_cosets(sub, m);
  const int g = static_cast<int>(cosets.size());
  if (g - 1 > kMaxSignBits) return std::nullopt;

  // contribution[j][i] = 2 * r_j * W_j[i], where W_j sums the interpolation
  // columns over coset j and r_j is the lifted root of the coset's value.
  std::vector<std::vector<BigInt>> weight(g, std::vector<BigInt>(phi, 0));
  std::vector<BigInt> coeff(phi, 0);
  for (int j = 0; j < g; ++j) {
    const int rep = unit_index(cosets[j].front());
    auto it = sqrt_cache.find(rep);
    if (it == sqrt_cache.end()) {
      const std::uint64_t v = mpz_fdiv_ui(level.values[rep].get_mpz_t(), p);
      const auto r0 = sqrt_mod_prime(v, p);
      if (!r0) return std::nullopt;
      it = sqrt_cache.emplace(rep, hensel_sqrt(*r0, level.values[rep], mod)).first;
    }
    const BigInt& r = it->second;
    for (const int s : cosets[j]) {
      const int col = unit_index(s);
      for (int i = 0; i < phi; ++i) weight[j][i] += level.interpolation[i][col];
    }
    for (int i = 0; i < phi; ++i) {
      weight[j][i] = reduce(weight[j][i] * r, mod);
      coeff[i] += weight[j][i];
      weight[j][i] = reduce(2 * weight[j][i], mod);
    }
  }
  for (auto& c : coeff) c = reduce(c, mod);

  std::vector<int> sign(g, 1);
  const std::uint64_t patterns = 1ULL << (g - 1);
  std::vector<Rat> rats(phi);
  for (std::uint64_t step = 0; step < patterns; ++step) {
    if (step > 0) {
      // Gray code: flip the sign of coset (lowest set bit of step) + 1.
      const int j = __builtin_ctzll(step) + 1;
      sign[j] = -sign[j];
      for (int i = 0; i < phi; ++i)
        coeff[i] = reduce(sign[j] > 0 ? BigInt(coeff[i] + weight[j][i])
                                      : BigInt(coeff[i] - weight[j][i]),
                          mod);
    }
    bool ok = true;
    for (int i = 0; i < phi && ok; ++i) {
      auto r = rational_reconstruction(coeff[i], mod);
      if (!r) ok = false;
      else rats[i] = *r;
    }
    if (!ok) continue;
    CycNum y(m, rats);
    if (y * y == a) return y;
  }
  return std::nullopt;
}

std::optional<CycNum> construct_root(const CycNum& a, const PrimeEmbedding& e,
                                     const SqrtOptions& options,
                                     std::string& note) {
  const int m = a.modulus();
  const auto stab = stabilizer(a);
  std::vector<std::vector<int>> subgroups{stab};
  for (auto& h : index_two_subgroups(stab, m)) subgroups.push_back(std::move(h));

  const double log2p = std::log2(static_cast<double>(e.p));
  int k = std::max(1, static_cast<int>(std::ceil(128.0 / log2p)));
  const double max_bits = 2.0 * options.height_cap_bits + 16.0;
  while (true) {
    const PadicLevel level = make_level(a, e, k);
    std::map<int, BigInt> sqrt_cache;
    bool skipped = false;
    for (const auto& sub : subgroups) {
      if (static_cast<int>(unit_cosets(sub, m).size()) - 1 > kMaxSignBits) {
        skipped = true;
        continue;
      }
      if (auto y = search_patterns(a, level, e.p, sub, sqrt_cache)) return y;
    }
    if (skipped) note = "sign-pattern space too large for some fixed fields";
    if (k * log2p > max_bits) break;
    k *= 2;
  }
  return std::nullopt;
}

}  // namespace

CycNum normalize_sign(const CycNum& y) {
  for (const auto& c : y.coeffs()) {
    if (c == 0) continue;
    return c < 0 ? -y : y;
  }
  return y;
}

SqrtResult sqrt_in_cyclotomic(const CycNum& a, const SqrtOptions& options) {
  SqrtResult result;
  if (a.is_zero()) {
    result.kind = SqrtKind::square;
    result.root = a;
    return result;
  }
  const int m = a.modulus();
  const auto& units = a.field()->units();

  std::optional<PrimeEmbedding> lift_prime;
  std::uint64_t p = 0;
  int tested = 0;
  // Keep looking for a usable lifting prime past the residue budget; all
  // residues vanishing at a prime only happens for primes dividing the norm.
  for (int scanned = 0; tested < options.probabilistic_primes || !lift_prime;
       ++scanned) {
    p = next_split_prime(m, p);
    if (!is_p_integral(a, p)) continue;
    const PrimeEmbedding e = make_embedding(m, p);
    bool all_nonzero = true;
    for (const int s : units) {
      const std::uint64_t r = residue(a, e, s);
      if (r == 0) {
        all_nonzero = false;
        continue;
      }
      if (legendre(r, p) == -1) {
        result.kind = SqrtKind::non_square;
        result.certificate = NonResidueCertificate{e, s, r};
        result.primes_tested = tested + 1;
        return result;
      }
    }
    if (tested < options.probabilistic_primes) ++tested;
    if (all_nonzero && !lift_prime) lift_prime = e;
    if (scanned > 100000) break;
  }
  result.primes_tested = tested;
  if (lift_prime) {
    if (auto y = construct_root(a, *lift_prime, options, result.note)) {
      result.kind = SqrtKind::square;
      result.root = normalize_sign(*y);
      return result;
    }
  }
  result.kind = SqrtKind::undetermined;
  result.confidence = 1.0 - std::ldexp(1.0, -tested);
  if (result.note.empty())
    result.note = "all residues are squares but no root within the height cap";
  return result;
}

}  // namespace qasc
