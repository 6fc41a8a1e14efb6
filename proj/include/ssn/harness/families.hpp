#ifndef SSN_HARNESS_FAMILIES_HPP
#define SSN_HARNESS_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ssn/group.hpp"

namespace ssn::harness
{

// Degree plus generators; what a .grp file holds.
struct GroupDefinition
{
  std::size_t degree = 1;
  std::vector<Permutation> generators;
};

// Family descriptors:
//   cyclic(n) dihedral(n) symmetric(n) alternating(n)
//   wreath_cyclic(p, q) direct_product(spec, spec, ...)
// dihedral(n) is the symmetry group of the n-gon (order 2n, n >= 3).
// wreath_cyclic(p, q) is C_p wr C_q on p*q points: the base C_p^q acts on
// q consecutive blocks of p points and the top C_q rotates the blocks.
// Direct products act on disjoint point sets, left factor first.
GroupDefinition family_definition(std::string_view spec);

GroupPtr builtin_family(std::string_view spec, std::size_t order_cap = kDefaultOrderCap);

} // namespace ssn::harness

#endif // SSN_HARNESS_FAMILIES_HPP
