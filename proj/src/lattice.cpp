#include "ssn/lattice.hpp"

#include <algorithm>

#include "ssn/error.hpp"

namespace ssn
{

SubgroupLattice::SubgroupLattice(Subgroup ambient, std::vector<Subgroup> nodes)
: _ambient(std::move(ambient)), _nodes(std::move(nodes))
{
  std::sort(_nodes.begin(), _nodes.end(), [](Subgroup const &a, Subgroup const &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members() < b.members();
  });

  for (std::size_t i = 0; i < _nodes.size(); ++i) {
    if (!_index.emplace(_nodes[i].members(), i).second)
      throw PreconditionError("duplicate subgroup in lattice");
  }

  if (_nodes.empty() || !_nodes.back().contains(_ambient) ||
      !_ambient.contains(_nodes.back()))
    throw PreconditionError("lattice does not end with its ambient subgroup");

  std::size_t const n = _nodes.size();
  _above.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (_nodes[i].members().is_subset_of(_nodes[j].members()))
        _above[i].set(j);
    }
  }
}

std::optional<std::size_t> SubgroupLattice::index_of(ElementSet const &members) const
{
  auto it = _index.find(members);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

SubgroupLattice all_subgroups(Subgroup const &ambient, std::size_t cap)
{
  struct SetHash
  {
    std::size_t operator()(ElementSet const &s) const
    { return std::hash<ElementSet>{}(s); }
  };

  GroupPtr const &parent = ambient.parent();
  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, SetHash> seen;

  auto add = [&](Subgroup s) {
    if (seen.contains(s.members()))
      return;
    if (found.size() >= cap)
      throw CapExceeded("subgroup lattice exceeds cap " + std::to_string(cap),
                        found.size() + 1);
    seen.emplace(s.members(), found.size());
    found.push_back(std::move(s));
  };

  add(Subgroup::trivial(parent));

  ElementSet covered = parent->empty_set();
  for (ElementId a : ambient.element_ids()) {
    if (covered.test(a))
      continue;
    ElementId seed[] = {a};
    Subgroup cyclic = Subgroup::generated(parent, seed);
    // Every generator of this cyclic subgroup yields the same subgroup.
    for (ElementId b : cyclic.element_ids()) {
      if (parent->element_order(b) == parent->element_order(a))
        covered.set(b);
    }
    add(std::move(cyclic));
  }

  std::size_t const cyclic_count = found.size();
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 1; c < cyclic_count; ++c) {
      if (found[c].members().is_subset_of(found[i].members()))
        continue;
      std::vector<ElementId> seed(found[i].generators().begin(),
                                  found[i].generators().end());
      seed.insert(seed.end(), found[c].generators().begin(),
                  found[c].generators().end());
      add(Subgroup::generated(parent, seed));
    }
  }

  return SubgroupLattice(ambient, std::move(found));
}

SubgroupLattice all_subgroups(GroupPtr const &group, std::size_t cap)
{
  return all_subgroups(Subgroup::whole(group), cap);
}

} // namespace ssn
