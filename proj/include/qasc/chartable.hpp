#pragma once

#include <string>
#include <vector>

#include "qasc/cyclotomic.hpp"
#include "qasc/group.hpp"
#include "qasc/multiset.hpp"

namespace qasc {

/// An irreducible character: its degree and one value per conjugacy class.
struct Character {
  int degree = 1;
  std::vector<CycNum> values;
};

/// Irreducible characters of a group with values in Q(w_m), m the exponent.
struct CharacterTable {
  GroupPtr group;
  int modulus = 1;
  std::vector<Character> characters;
  /// "abelian", "dihedral" or "dixon".
  std::string method;

  int size() const { return static_cast<int>(characters.size()); }
  /// chi(g) for an element index g.
  const CycNum& value(int chi, int g) const {
    return characters[chi].values[group->classes().class_of[g]];
  }
};

/// Linear characters built from a decomposition into cyclic factors.
CharacterTable char_table_abelian(const GroupPtr& group);

/// Table of D_{2n}, n odd, for a group built by dihedral_group(n). Rows follow
/// the usual order: trivial, sign, then chi_l(a^k) = w^{(l-2)k} + w^{-(l-2)k}
/// for l = 3 .. 2 + (n-1)/2 with w of order n.
CharacterTable char_table_dihedral(const GroupPtr& group);
CharacterTable char_table_dihedral(int n);

/// Burnside-Dixon: common eigenvectors of the class matrices over F_p, then
/// exact values recovered from eigenvalue multiplicities.
CharacterTable char_table_dixon(const GroupPtr& group);

/// char_table_abelian for abelian groups, char_table_dixon otherwise.
CharacterTable character_table(const GroupPtr& group);

/// Sorts rows by degree, with the trivial character first, then by the
/// coefficient vectors of the values in ascending lexicographic order.
void canonicalize_rows(CharacterTable& table);

/// chi(X) = sum over x of count(x) chi(x); X must be conjugate-closed.
CycNum char_on_multiset(const CharacterTable& table, int chi, const GMultiset& x);

struct OrthogonalityReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Row and column orthogonality, exactly, plus the sum of squared degrees.
OrthogonalityReport check_orthogonality(const CharacterTable& table);

/// Two tables of the same group have the same set of rows.
bool same_rows_up_to_order(const CharacterTable& a, const CharacterTable& b);

}  // namespace qasc
