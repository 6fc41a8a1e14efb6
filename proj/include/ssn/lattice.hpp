#ifndef SSN_LATTICE_HPP
#define SSN_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ssn/group.hpp"

namespace ssn
{

// Every subgroup of an ambient subgroup, sorted by (order, member bitset).
// Node 0 is the trivial subgroup and the last node is the ambient itself.
class SubgroupLattice
{
public:
  SubgroupLattice(Subgroup ambient, std::vector<Subgroup> nodes);

  Subgroup const &ambient() const { return _ambient; }
  GroupPtr const &parent() const { return _ambient.parent(); }

  std::size_t size() const { return _nodes.size(); }
  std::span<Subgroup const> nodes() const { return _nodes; }
  Subgroup const &node(std::size_t i) const { return _nodes[i]; }

  std::size_t trivial_index() const { return 0; }
  std::size_t top_index() const { return _nodes.size() - 1; }

  std::optional<std::size_t> index_of(ElementSet const &members) const;
  std::optional<std::size_t> index_of(Subgroup const &s) const
  { return index_of(s.members()); }

  // node(small) is a subgroup of node(big)
  bool contains(std::size_t big, std::size_t small) const
  { return _above[small].test(big); }

  // Indices of all nodes containing node(i), as a bitset over node indices.
  boost::dynamic_bitset<> const &above(std::size_t i) const { return _above[i]; }

private:
  struct SetHash
  {
    std::size_t operator()(ElementSet const &s) const
    { return std::hash<ElementSet>{}(s); }
  };

  Subgroup _ambient;
  std::vector<Subgroup> _nodes;
  std::unordered_map<ElementSet, std::size_t, SetHash> _index;
  std::vector<boost::dynamic_bitset<>> _above;
};

// Closes the set of cyclic subgroups of `ambient` under joins. Throws
// CapExceeded once more than `cap` subgroups have been found.
SubgroupLattice all_subgroups(Subgroup const &ambient,
                              std::size_t cap = kDefaultLatticeCap);
SubgroupLattice all_subgroups(GroupPtr const &group,
                              std::size_t cap = kDefaultLatticeCap);

} // namespace ssn

#endif // SSN_LATTICE_HPP
