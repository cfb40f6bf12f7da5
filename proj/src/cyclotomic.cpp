#include "qasc/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qasc {

namespace {

using IntPoly = std::vector<BigInt>;
using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of integer polynomials; the divisor must be monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const BigInt c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
  return quot;
}

// Polynomial division over Q: returns quotient, leaves remainder in a.
RatPoly divmod(RatPoly& a, const RatPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  RatPoly q(a.size() - db);
  const Rat lead = b.back();
  for (std::size_t i = a.size(); i-- > db;) {
    const Rat c = a[i] / lead;
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  return q;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::mutex field_cache_mutex;
std::map<int, std::shared_ptr<const CyclotomicField>> field_cache;

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic_polynomial: m <= 0");
  IntPoly poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
  return poly;
}

CyclotomicField::CyclotomicField(int m)
    : modulus_(m),
      degree_(static_cast<int>(euler_phi(m))),
      polynomial_(cyclotomic_polynomial(m)),
      units_(units_mod(m)) {
  // w^k for k < phi is a basis vector; higher powers reduce by
  // w^k = -sum_{j<phi} c_j w^{k-phi+j}.
  powers_.assign(m, std::vector<std::int64_t>(degree_, 0));
  std::vector<std::int64_t> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    powers_[k] = cur;
    std::vector<std::int64_t> next(degree_, 0);
    const std::int64_t top = cur[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) next[j] = cur[j - 1];
    next[0] = 0;
    if (top != 0)
      for (int j = 0; j < degree_; ++j)
        next[j] -= top * polynomial_[j].get_si();
    cur = std::move(next);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic field modulus must be >= 1");
  std::lock_guard<std::mutex> lock(field_cache_mutex);
  auto it = field_cache.find(m);
  if (it != field_cache.end()) return it->second;
  auto field = std::make_shared<const CyclotomicField>(m);
  field_cache.emplace(m, field);
  return field;
}

const std::vector<std::int64_t>& CyclotomicField::power(std::int64_t k) const {
  k %= modulus_;
  if (k < 0) k += modulus_;
  return powers_[static_cast<std::size_t>(k)];
}

CycNum::CycNum(int m) : field_(CyclotomicField::get(m)) {
  coeffs_.assign(field_->degree(), Rat(0));
}

CycNum::CycNum(int m, const Rat& value) : CycNum(m) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

CycNum::CycNum(int m, const std::vector<Rat>& poly) : CycNum(m) {
  const int phi = field_->degree();
  for (std::size_t k = 0; k < poly.size(); ++k) {
    Rat c = poly[k];
    c.canonicalize();
    if (c == 0) continue;
    if (static_cast<int>(k) < phi) {
      coeffs_[k] += c;
      continue;
    }
    const auto& red = field_->power(static_cast<std::int64_t>(k));
    for (int j = 0; j < phi; ++j)
      if (red[j] != 0) coeffs_[j] += c * red[j];
  }
}

CycNum CycNum::root_of_unity(int m, std::int64_t k) {
  CycNum out(m);
  const auto& red = out.field_->power(k);
  for (int j = 0; j < out.field_->degree(); ++j) out.coeffs_[j] = red[j];
  return out;
}

void CycNum::require_same_field(const CycNum& other) const {
  if (modulus() != other.modulus())
    throw std::invalid_argument("cyclotomic modulus mismatch: " +
                                std::to_string(modulus()) + " vs " +
                                std::to_string(other.modulus()));
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rat> CycNum::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

bool CycNum::has_integer_coeffs() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

std::complex<double> CycNum::embed(int t) const {
  const int m = modulus();
  std::complex<double> out = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const std::int64_t e = (static_cast<std::int64_t>(i) * t) % m;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / m;
    out += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return out;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  const std::string w = "w" + std::to_string(modulus());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << w;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycNum& CycNum::operator+=(const CycNum& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  require_same_field(other);
  const int phi = field_->degree();
  if (phi == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  std::vector<Rat> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  *this = CycNum(modulus(), prod);
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(w_m)");
  // Extended Euclid on (x, Phi_m) over Q[w]: s*x + t*Phi = 1.
  RatPoly r0, r1(coeffs_.begin(), coeffs_.end());
  for (const auto& c : field_->polynomial()) r0.push_back(Rat(c));
  trim(r1);
  RatPoly s0{}, s1{Rat(1)};
  while (!(r1.size() == 1)) {
    RatPoly rem = r0;
    RatPoly q = divmod(rem, r1);
    RatPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("cyclotomic polynomial not irreducible?");
  }
  const Rat scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return CycNum(modulus(), s1);
}

CycNum& CycNum::operator/=(const CycNum& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.modulus() == b.modulus() && a.coeffs_ == b.coeffs_;
}

bool lex_less(const CycNum& a, const CycNum& b) {
  if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

CycNum galois_apply(const GaloisAut& s, const CycNum& x) {
  const int m = x.modulus();
  if (s.modulus != m)
    throw std::invalid_argument("galois_apply: modulus mismatch");
  if (gcd(s.t, m) != 1 && m > 1)
    throw std::invalid_argument("galois_apply: t is not a unit");
  const auto& field = *x.field();
  const int phi = field.degree();
  std::vector<Rat> poly(phi);
  for (int i = 0; i < phi; ++i) {
    const Rat& c = x.coeffs()[i];
    if (c == 0) continue;
    const auto& red = field.power(static_cast<std::int64_t>(i) * s.t);
    for (int j = 0; j < phi; ++j)
      if (red[j] != 0) poly[j] += c * red[j];
  }
  return CycNum(m, poly);
}

CycNum conj(const CycNum& x) {
  const int m = x.modulus();
  return galois_apply(GaloisAut{m, m > 2 ? m - 1 : 1}, x);
}

std::optional<Rat> is_rational(const CycNum& x) { return x.as_rational(); }

CycNum lift(const CycNum& x, int target_modulus) {
  const int m = x.modulus();
  if (target_modulus % m != 0)
    throw std::invalid_argument("lift: modulus does not divide target");
  const int step = target_modulus / m;
  std::vector<Rat> poly(static_cast<std::size_t>(step) * x.coeffs().size());
  for (std::size_t i = 0; i < x.coeffs().size(); ++i)
    poly[i * step] = x.coeffs()[i];
  return CycNum(target_modulus, poly);
}

}  // namespace qasc
