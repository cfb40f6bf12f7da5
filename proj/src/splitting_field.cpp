#include "qasc/splitting_field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>

#include "qasc/errors.hpp"
#include "qasc/embedding.hpp"
#include "qasc/number_theory.hpp"
#include "qasc/unit_group.hpp"

namespace qasc {

namespace {

TSubgroup make_T(int m, const std::vector<int>& elements) {
  TSubgroup t;
  t.modulus = m;
  t.elements = elements;
  if (!is_unit_subgroup(t.elements, m))
    throw std::logic_error("T is not a subgroup of the unit group");
  return t;
}

TSubgroup invariance_group(const std::vector<GMultiset>& sets, int modulus) {
  std::vector<int> out;
  for (const int t : units_mod(modulus)) {
    bool fixed = true;
    for (const auto& s : sets)
      if (mset_power(s, t) != s) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(t);
  }
  return make_T(modulus, out);
}

std::string sf_description(const std::string& k, const SquareClassGroup& m) {
  if (m.basis.empty()) return k;
  std::string s;
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    s += (i ? ", " : "") + std::string("sqrt(") + m.basis[i].to_string() + ")";
  if (k == "Q") return "Q(" + s + ")";
  return k + "(" + s + ")";
}

void finish(DegreeReport& r) {
  r.modulus = r.T.modulus;
  r.k_degree = euler_phi(r.modulus) / r.T.size();
  r.k_description = describe_fixed_field(r.T);
  r.sf_description = sf_description(r.k_description, r.M);
  r.degree = r.k_degree * r.M.order();
  r.integral = r.degree == 1;
}

}  // namespace

bool TSubgroup::is_full() const {
  return static_cast<std::int64_t>(elements.size()) == euler_phi(modulus);
}

TSubgroup compute_T(const IMultisets& im, int m) {
  return invariance_group({im.i1, mset_diff(im.i2, im.i3), mset_diff(im.i3, im.i2)}, m);
}

bool in_fixed_field(const CycNum& x, const TSubgroup& t) {
  if (x.modulus() != t.modulus) throw std::invalid_argument("in_fixed_field: modulus mismatch");
  for (const int s : t.elements)
    if (s != 1 && galois_apply(s, x) != x) return false;
  return true;
}

std::string describe_fixed_field(const TSubgroup& t) {
  const int m = t.modulus;
  if (t.is_full()) return "Q";
  // K = Q(w_d) exactly when T is the kernel of reduction Z_m^* -> Z_d^*.
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    std::vector<int> kernel;
    for (const int u : units_mod(m))
      if (d <= 2 || u % d == 1) kernel.push_back(u);
    if (kernel == t.elements) return d <= 2 ? "Q" : "Q(w" + std::to_string(d) + ")";
  }
  std::string s = "fixed field of {";
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    s += (i ? "," : "") + std::to_string(t.elements[i]);
  return s + "} in Q(w" + std::to_string(m) + ")";
}

SquareTest is_square_in_K(const CycNum& a, const TSubgroup& t, const SqrtOptions& options) {
  if (!in_fixed_field(a, t)) throw std::invalid_argument("is_square_in_K: value not in K");
  SquareTest out;
  if (a.is_zero()) {
    out.verdict = SquareVerdict::zero;
    out.witness = a;
    return out;
  }
  const SqrtResult r = sqrt_in_cyclotomic(a, options);
  out.confidence = r.confidence;
  out.note = r.note;
  switch (r.kind) {
    case SqrtKind::non_square:
      out.verdict = SquareVerdict::non_square;
      out.certificate = r.certificate;
      return out;
    case SqrtKind::undetermined:
      out.verdict = SquareVerdict::undetermined;
      return out;
    case SqrtKind::square:
      break;
  }
  for (const int s : t.elements) {
    if (s != 1 && galois_apply(s, *r.root) != *r.root) {
      out.verdict = SquareVerdict::non_square;
      out.moved_by = s;
      return out;
    }
  }
  out.verdict = SquareVerdict::square;
  out.witness = r.root;
  return out;
}

namespace {

/// Bit vector over F_2.
struct F2Vec {
  std::vector<std::uint64_t> w;

  explicit F2Vec(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return w[i / 64] >> (i % 64) & 1; }
  void flip(const F2Vec& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
  }
  std::optional<std::size_t> lowest() const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return std::nullopt;
  }
};

/// Echelon basis of F_2 vectors, each tagged with the combination of inserted
/// items it represents.
struct Echelon {
  std::vector<std::size_t> pivots;
  std::vector<F2Vec> rows;
  std::vector<F2Vec> combos;

  /// Reduces v; returns the combination of inserted items summing to v when
  /// v lies in the span.
  std::optional<F2Vec> reduce(F2Vec v, F2Vec& combo) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (v.test(pivots[r])) {
        v.flip(rows[r]);
        combo.flip(combos[r]);
      }
    if (v.lowest()) return std::nullopt;
    return combo;
  }
  void insert(F2Vec v, F2Vec combo) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (v.test(pivots[r])) {
        v.flip(rows[r]);
        combo.flip(combos[r]);
      }
    const auto p = v.lowest();
    if (!p) throw std::logic_error("Echelon::insert: dependent vector");
    pivots.push_back(*p);
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
  }
};

/// Quadratic symbols a -> (a mod P / p) at primes P of Q(w_m) of degree one;
/// each is a homomorphism on the nonzero values it was chosen for.
struct SymbolSet {
  std::vector<std::pair<PrimeEmbedding, int>> places;
  int primes = 0;

  /// Adds places until `wanted` are present or `budget` primes have been used;
  /// returns false when the budget was already exhausted.
  bool add_primes(const std::vector<CycNum>& values, const std::vector<int>& reps,
                  std::uint64_t& after, std::size_t wanted, int budget) {
    if (primes >= budget) return false;
    const int m = values.front().modulus();
    while (places.size() < wanted && primes < budget) {
      after = next_split_prime(m, after);
      bool usable = true;
      for (const auto& v : values) usable = usable && is_p_integral(v, after);
      if (!usable) continue;
      ++primes;
      const PrimeEmbedding e = make_embedding(m, after);
      for (const int s : reps) {
        bool nonzero = true;
        for (const auto& v : values) nonzero = nonzero && residue(v, e, s) != 0;
        if (nonzero) places.emplace_back(e, s);
      }
    }
    return true;
  }
  F2Vec signature(const CycNum& a) const {
    F2Vec v(places.size());
    for (std::size_t i = 0; i < places.size(); ++i)
      if (legendre(residue(a, places[i].first, places[i].second), places[i].first.p) < 0) v.set(i);
    return v;
  }
};

CycNum product_of(const CycNum& a, const std::vector<CycNum>& items, const F2Vec& combo) {
  CycNum out = a;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (combo.test(i)) out *= items[i];
  return out;
}

}  // namespace

SquareClassGroup square_class_group(const std::vector<CycNum>& radicands, const TSubgroup& t,
                                    const SqrtOptions& options) {
  std::vector<CycNum> values;
  for (const auto& a : radicands) {
    if (a.is_zero()) continue;
    if (!in_fixed_field(a, t)) throw std::invalid_argument("square_class_group: value not in K");
    if (std::find(values.begin(), values.end(), a) == values.end()) values.push_back(a);
  }
  SquareClassGroup m;
  if (values.empty()) return m;

  // The symbols see the class of a value in Q(w_m)*/Q(w_m)*^2; on K they only
  // depend on the coset of the embedding modulo T. The kernel of
  // K*/K*^2 -> Q(w_m)*/Q(w_m)*^2 is detected by the cocycle
  // t -> sigma_t(y)/y of a root y in Q(w_m).
  std::vector<int> reps;
  for (const auto& c : unit_cosets(t.elements, t.modulus)) reps.push_back(c.front());
  SymbolSet symbols;
  std::uint64_t after = 1u << 20;
  const int budget = std::max(options.probabilistic_primes, 1);
  symbols.add_primes(values, reps, after, 2 * values.size() + 48, budget);

  while (true) {
    std::vector<F2Vec> sigs;
    for (const auto& v : values) sigs.push_back(symbols.signature(v));
    m.basis.clear();
    Echelon field;  // symbol vectors of basis entries independent over Q(w_m)
    Echelon kernel; // cocycles of basis products that are squares in Q(w_m)
    bool refine = false;
    for (std::size_t i = 0; i < values.size() && !refine; ++i) {
      const std::size_t cap = values.size();
      F2Vec combo(cap);
      const auto in_span = field.reduce(sigs[i], combo);
      F2Vec own(cap);
      own.set(m.basis.size());
      if (!in_span) {
        field.insert(sigs[i], own);
        m.basis.push_back(values[i]);
        continue;
      }
      const CycNum p = product_of(values[i], m.basis, combo);
      const SqrtResult root = sqrt_in_cyclotomic(p, options);
      if (root.kind == SqrtKind::undetermined)
        throw UndeterminedError("square class of radicand " + values[i].to_string() +
                                    " is undetermined: " + root.note,
                                root.confidence);
      if (root.kind == SqrtKind::non_square) {
        // The symbols missed this class; widen them and start over.
        refine = true;
        break;
      }
      F2Vec cocycle(t.elements.size());
      for (std::size_t j = 0; j < t.elements.size(); ++j)
        if (galois_apply(t.elements[j], *root.root) != *root.root) cocycle.set(j);
      F2Vec kcombo(cap);
      if (kernel.reduce(cocycle, kcombo)) continue;  // a square times basis entries
      kernel.insert(cocycle, F2Vec(cap));
      m.basis.push_back(values[i]);
    }
    if (!refine) return m;
    if (!symbols.add_primes(values, reps, after, symbols.places.size() + values.size() + 32,
                            budget))
      throw UndeterminedError("square classes of the radicands are undetermined after " +
                                  std::to_string(symbols.primes) + " split primes",
                              1.0 - std::ldexp(1.0, -static_cast<int>(symbols.places.size())));
  }
}

DegreeReport algebraic_degree(const SemiCayleyDigraph& graph, const CharacterTable& table,
                              const SqrtOptions& options) {
  DegreeReport r;
  const IMultisets im = i_multisets(graph);
  r.T = compute_T(im, table.modulus);
  r.eigenvalues = eigenvalues(graph, table);
  std::vector<CycNum> radicands;
  for (const auto& e : r.eigenvalues) radicands.push_back(e.radicand);
  r.M = square_class_group(radicands, r.T, options);
  finish(r);
  return r;
}

DegreeReport degree_cayley(const GMultiset& s, const CharacterTable& table) {
  if (!s.is_conjugate_closed()) throw InputError("degree_cayley: S is not conjugate-closed");
  DegreeReport r;
  r.T = invariance_group({s}, table.modulus);
  finish(r);
  return r;
}

DegreeReport degree_bcay(const GMultiset& s, const CharacterTable& table,
                         const SqrtOptions& options) {
  if (!s.is_conjugate_closed()) throw InputError("degree_bcay: S is not conjugate-closed");
  DegreeReport r;
  r.T = invariance_group({mset_product(s, s.inverse())}, table.modulus);
  std::vector<CycNum> radicands;
  for (int c = 0; c < table.size(); ++c) {
    const CycNum x = char_on_multiset(table, c, s);
    radicands.push_back(x * conj(x));
  }
  r.M = square_class_group(radicands, r.T, options);
  finish(r);
  return r;
}

bool is_integral(const SemiCayleyDigraph& graph, const CharacterTable& table,
                 const SqrtOptions& options) {
  const TSubgroup t = compute_T(i_multisets(graph), table.modulus);
  if (!t.is_full()) return false;
  std::vector<CycNum> radicands;
  for (const auto& e : eigenvalues(graph, table)) radicands.push_back(e.radicand);
  return square_class_group(radicands, t, options).basis.empty();
}

AbelianConsistency abelian_consistency(const SemiCayleyDigraph& graph) {
  const auto& g = *graph.group();
  if (!g.is_abelian()) throw InputError("abelian_consistency: group is not abelian");
  AbelianConsistency out;
  out.exponent = g.exponent();
  out.order = g.order();
  const IMultisets im = i_multisets(graph);
  const std::vector<GMultiset> sets{im.i1, mset_diff(im.i2, im.i3), mset_diff(im.i3, im.i2)};
  out.T = invariance_group(sets, out.exponent);
  out.H = invariance_group(sets, out.order);
  out.consistent = euler_phi(out.exponent) * out.H.size() == euler_phi(out.order) * out.T.size();
  return out;
}

}  // namespace qasc
