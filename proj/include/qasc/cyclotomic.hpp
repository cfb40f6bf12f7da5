#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qasc/number_theory.hpp"

namespace qasc {

/// The m-th cyclotomic polynomial, ascending coefficients, computed by exact
/// division of x^m - 1 by the cyclotomic polynomials of the proper divisors.
std::vector<BigInt> cyclotomic_polynomial(int m);

/// Shared, immutable description of Q(w_m): the reduction modulus and the
/// power-basis images of every w_m^k. Obtain instances through get().
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int m);

  int modulus() const { return modulus_; }
  int degree() const { return degree_; }
  const std::vector<BigInt>& polynomial() const { return polynomial_; }
  const std::vector<int>& units() const { return units_; }

  /// Coordinates of w_m^k in the power basis; k is taken modulo m.
  const std::vector<std::int64_t>& power(std::int64_t k) const;

  explicit CyclotomicField(int m);

 private:
  int modulus_;
  int degree_;
  std::vector<BigInt> polynomial_;
  std::vector<int> units_;
  std::vector<std::vector<std::int64_t>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// An exact element of Q(w_m), stored as phi(m) rational coordinates over the
/// power basis 1, w, ..., w^{phi(m)-1}. The representation is canonical, so
/// equality is coordinatewise.
class CycNum {
 public:
  explicit CycNum(int m = 1);
  CycNum(int m, const Rat& value);
  CycNum(int m, long value) : CycNum(m, Rat(value)) {}
  /// Reduces an arbitrary-length polynomial in w modulo Phi_m.
  CycNum(int m, const std::vector<Rat>& poly);

  static CycNum root_of_unity(int m, std::int64_t k);

  int modulus() const { return field_->modulus(); }
  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Rat> as_rational() const;
  /// True when every coordinate is an integer.
  bool has_integer_coeffs() const;

  /// Image under the complex embedding w_m -> exp(2 pi i t / m).
  std::complex<double> embed(int t = 1) const;

  /// Human-readable form such as "-1 + 2*w6".
  std::string to_string() const;

  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator*=(const Rat& scalar);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const Rat& s) { return a *= s; }
  friend CycNum operator*(const Rat& s, CycNum a) { return a *= s; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Lexicographic order on (modulus, coordinates); used for deterministic
  /// sorting only, it is not a field order.
  friend bool lex_less(const CycNum& a, const CycNum& b);

  CycNum inverse() const;

 private:
  CycNum(FieldPtr field, std::vector<Rat> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
  void require_same_field(const CycNum& other) const;

  FieldPtr field_;
  std::vector<Rat> coeffs_;
};

/// sigma_t : w_m -> w_m^t, for t a unit modulo m.
struct GaloisAut {
  int modulus = 1;
  int t = 1;
};

CycNum galois_apply(const GaloisAut& s, const CycNum& x);
inline CycNum galois_apply(int t, const CycNum& x) {
  return galois_apply(GaloisAut{x.modulus(), t}, x);
}

/// Complex conjugation, i.e. sigma_{m-1}.
CycNum conj(const CycNum& x);

std::optional<Rat> is_rational(const CycNum& x);

/// Image of x under Q(w_m) -> Q(w_M), w_m -> w_M^{M/m}; requires m | M.
CycNum lift(const CycNum& x, int target_modulus);

}  // namespace qasc
