#include "qasc/unit_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qasc {

namespace {

int mul_mod(int a, int b, int m) {
  if (m <= 2) return 1;
  return static_cast<int>(static_cast<long long>(a) * b % m);
}

}  // namespace

bool is_unit_subgroup(const std::vector<int>& h, int m) {
  const std::set<int> elems(h.begin(), h.end());
  if (!elems.count(1)) return false;
  for (const int a : h) {
    if (m > 2 && gcd(a, m) != 1) return false;
    for (const int b : h)
      if (!elems.count(mul_mod(a, b, m))) return false;
  }
  return true;
}

std::vector<int> stabilizer(const CycNum& x) {
  std::vector<int> out;
  for (const int t : x.field()->units())
    if (galois_apply(t, x) == x) out.push_back(t);
  return out;
}

std::vector<std::vector<int>> index_two_subgroups(const std::vector<int>& h,
                                                  int m) {
  // h / h^2 is an F_2-vector space; index-2 subgroups are kernels of its
  // nonzero linear functionals. Build a basis greedily, tagging every element
  // of the growing span with its coordinate mask.
  std::set<int> squares;
  for (const int a : h) squares.insert(mul_mod(a, a, m));
  std::map<int, unsigned> mask;  // element -> coordinates of its class
  for (const int s : squares) mask[s] = 0;
  int rank = 0;
  for (const int a : h) {
    if (mask.count(a)) continue;
    const unsigned bit = 1u << rank++;
    std::map<int, unsigned> added;
    for (const auto& [e, msk] : mask) added[mul_mod(e, a, m)] = msk | bit;
    mask.insert(added.begin(), added.end());
  }
  std::vector<std::vector<int>> out;
  for (unsigned f = 1; f < (1u << rank); ++f) {
    std::vector<int> kernel;
    for (const int a : h)
      if (__builtin_popcount(mask.at(a) & f) % 2 == 0) kernel.push_back(a);
    out.push_back(std::move(kernel));
  }
  return out;
}

std::vector<std::vector<int>> unit_cosets(const std::vector<int>& h, int m) {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  for (const int t : units_mod(m)) {
    if (seen.count(t)) continue;
    std::vector<int> coset;
    for (const int a : h) coset.push_back(mul_mod(t, a, m));
    std::sort(coset.begin(), coset.end());
    seen.insert(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

}  // namespace qasc
