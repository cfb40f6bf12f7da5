#pragma once

#include <vector>

#include "qasc/cyclotomic.hpp"

namespace qasc {

// Subgroups of Z_m^* are represented as sorted vectors of residues in [1, m)
// (the single element {1} for m <= 2).

bool is_unit_subgroup(const std::vector<int>& h, int m);

/// {t in Z_m^* : sigma_t(x) = x}.
std::vector<int> stabilizer(const CycNum& x);

/// Every subgroup of index 2 in h.
std::vector<std::vector<int>> index_two_subgroups(const std::vector<int>& h,
                                                  int m);

/// Cosets t*h of h in Z_m^*, ordered by least element; each coset sorted.
std::vector<std::vector<int>> unit_cosets(const std::vector<int>& h, int m);

}  // namespace qasc
