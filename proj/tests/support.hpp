#ifndef SSN_TESTS_SUPPORT_HPP
#define SSN_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "ssn/group.hpp"
#include "ssn/harness/families.hpp"
#include "ssn/lattice.hpp"
#include "ssn/sigma.hpp"

namespace test
{

inline ssn::GroupPtr fam(std::string const &spec) { return ssn::harness::builtin_family(spec); }

inline ssn::Subgroup sub(ssn::GroupPtr const &g, std::string const &gens)
{
  auto perms = ssn::parse_permutation_list(gens, g->degree());
  return ssn::subgroup_from_permutations(g, perms);
}

inline ssn::Subgroup whole(ssn::GroupPtr const &g) { return ssn::Subgroup::whole(g); }

inline ssn::SigmaPartition part(std::vector<ssn::PrimeSet> blocks)
{
  return ssn::SigmaPartition(std::move(blocks));
}

// Small groups used by the property tests, all of order <= 60.
inline std::vector<std::string> small_specs()
{
  return {
    "cyclic(1)",
    "cyclic(4)",
    "cyclic(6)",
    "dihedral(4)",
    "dihedral(5)",
    "symmetric(3)",
    "symmetric(4)",
    "alternating(4)",
    "wreath_cyclic(2, 3)",
    "wreath_cyclic(3, 2)",
    "direct_product(cyclic(2), cyclic(2), cyclic(2))",
    "direct_product(symmetric(3), cyclic(2))",
    "direct_product(symmetric(3), cyclic(3))",
    "direct_product(dihedral(4), cyclic(3))",
    "alternating(5)",
  };
}

inline std::vector<ssn::SigmaPartition> partitions()
{
  return {part({{2}, {3}}), part({{2, 3}}), part({{2, 5}, {3}}), ssn::SigmaPartition()};
}

} // namespace test

#endif // SSN_TESTS_SUPPORT_HPP
