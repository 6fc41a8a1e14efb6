#ifndef SSN_GROUP_HPP
#define SSN_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ssn/permutation.hpp"

namespace ssn
{

using ElementId = std::uint32_t;

// Bitset over the canonical element indices of a parent group.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

using PrimeSet = std::set<unsigned>;

inline constexpr std::size_t kDefaultOrderCap = 5040;
inline constexpr std::size_t kDefaultLatticeCap = 600;

class FiniteGroup;
using GroupPtr = std::shared_ptr<FiniteGroup const>;

// A fully enumerated permutation group. Elements are sorted by image
// sequence, so the identity always has index 0 and element indices are
// canonical for a given element set.
class FiniteGroup
{
public:
  // Throws CapExceeded if the closure grows beyond `order_cap`.
  static GroupPtr generate(std::size_t degree,
                           std::vector<Permutation> generators,
                           std::size_t order_cap = kDefaultOrderCap);

  std::size_t degree() const { return _degree; }
  std::size_t order() const { return _elements.size(); }

  std::span<Permutation const> generators() const { return _generators; }
  std::span<ElementId const> generator_ids() const { return _generator_ids; }
  std::span<Permutation const> elements() const { return _elements; }

  Permutation const &element(ElementId id) const { return _elements[id]; }
  std::optional<ElementId> index_of(Permutation const &perm) const;

  static constexpr ElementId identity() { return 0; }

  ElementId multiply(ElementId a, ElementId b) const
  { return _table[static_cast<std::size_t>(a) * order() + b]; }

  ElementId inverse(ElementId a) const { return _inverse[a]; }

  // g^-1 x g
  ElementId conjugate(ElementId x, ElementId g) const
  { return multiply(multiply(_inverse[g], x), g); }

  ElementId commutator(ElementId a, ElementId b) const
  { return multiply(multiply(_inverse[a], _inverse[b]), multiply(a, b)); }

  std::size_t element_order(ElementId a) const { return _element_order[a]; }

  ElementSet empty_set() const { return ElementSet(order()); }

private:
  FiniteGroup() = default;

  std::size_t _degree = 0;
  std::vector<Permutation> _generators;
  std::vector<ElementId> _generator_ids;
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, ElementId> _index;
  std::vector<std::uint16_t> _table;
  std::vector<ElementId> _inverse;
  std::vector<std::size_t> _element_order;
};

// A subgroup of a fixed parent, identified by its member bitset.
class Subgroup
{
public:
  // Throws PreconditionError if `members` is not closed.
  Subgroup(GroupPtr parent, ElementSet members);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  // Smallest subgroup containing `seed`.
  static Subgroup generated(GroupPtr parent, std::span<ElementId const> seed);

  GroupPtr const &parent() const { return _parent; }
  ElementSet const &members() const { return _members; }
  std::size_t order() const { return _order; }

  // Greedy generating set, deterministic for a given member set.
  std::span<ElementId const> generators() const { return _generators; }
  std::vector<Permutation> generator_permutations() const;

  std::vector<ElementId> element_ids() const;

  bool contains(ElementId a) const { return _members.test(a); }
  bool contains(Subgroup const &other) const;
  bool is_trivial() const { return _order == 1; }

  bool is_normal_in(Subgroup const &ambient) const;

  bool operator==(Subgroup const &other) const;

private:
  struct Unchecked {};
  Subgroup(GroupPtr parent, ElementSet members, std::vector<ElementId> gens,
           Unchecked);

  friend Subgroup closure_of(GroupPtr const &, std::span<ElementId const>);

  GroupPtr _parent;
  ElementSet _members;
  std::size_t _order = 0;
  std::vector<ElementId> _generators;
};

// -- perm_core operations ---------------------------------------------------

GroupPtr group_from_generators(std::size_t degree,
                               std::vector<Permutation> generators,
                               std::size_t order_cap = kDefaultOrderCap);

Subgroup subgroup_generated(GroupPtr const &parent,
                            std::span<ElementId const> seed);

Subgroup subgroup_from_permutations(GroupPtr const &parent,
                                    std::span<Permutation const> gens);

Subgroup intersection(Subgroup const &a, Subgroup const &b);

// Smallest subgroup of `ambient` containing `x` and normalised by `ambient`.
Subgroup normal_closure(Subgroup const &ambient, Subgroup const &x);

// Largest subgroup of `x` normal in `ambient`.
Subgroup normal_core(Subgroup const &ambient, Subgroup const &x);

Subgroup derived_subgroup(Subgroup const &x);

// Normal subgroups of `ambient`, ascending by (order, members).
std::vector<Subgroup> normal_subgroups(Subgroup const &ambient);
std::vector<Subgroup> normal_subgroups(GroupPtr const &group);

// Right-coset action of `group` on the cosets of the normal subgroup `n`.
// The result has degree |group : n|.
GroupPtr quotient_group(Subgroup const &group, Subgroup const &n,
                        std::size_t order_cap = kDefaultOrderCap);
GroupPtr quotient_group(GroupPtr const &group, Subgroup const &n,
                        std::size_t order_cap = kDefaultOrderCap);

PrimeSet prime_divisors(std::size_t n);
PrimeSet prime_set(Subgroup const &x);
PrimeSet prime_set(GroupPtr const &group);

bool is_prime(std::size_t n);

// Sorted multiset of element orders, the isomorphism fingerprint used for
// quotient checks.
std::vector<std::size_t> element_order_multiset(GroupPtr const &group);

} // namespace ssn

#endif // SSN_GROUP_HPP
