#include "ssn/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "ssn/error.hpp"

namespace ssn
{

namespace
{

// Incrementally grown subgroup: members, their list, and the generators
// adjoined so far. Closed under right multiplication by every generator.
class Closure
{
public:
  explicit Closure(FiniteGroup const &group)
  : _group(group), _set(group.order())
  {
    _set.set(FiniteGroup::identity());
    _elements.push_back(FiniteGroup::identity());
  }

  bool contains(ElementId a) const { return _set.test(a); }

  void extend(ElementId s)
  {
    if (_set.test(s))
      return;

    _gens.push_back(s);
    std::size_t const old = _elements.size();
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      ElementId x = _elements[i];
      if (i < old) {
        add(_group.multiply(x, s));
      } else {
        for (ElementId g : _gens)
          add(_group.multiply(x, g));
      }
    }
  }

  ElementSet const &set() const { return _set; }
  ElementSet take_set() { return std::move(_set); }
  std::vector<ElementId> const &gens() const { return _gens; }

private:
  void add(ElementId a)
  {
    if (!_set.test(a)) {
      _set.set(a);
      _elements.push_back(a);
    }
  }

  FiniteGroup const &_group;
  ElementSet _set;
  std::vector<ElementId> _elements;
  std::vector<ElementId> _gens;
};

template<typename F>
void for_each_member(ElementSet const &set, F &&f)
{
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i))
    f(static_cast<ElementId>(i));
}

void require_same_parent(Subgroup const &a, Subgroup const &b)
{
  if (a.parent() != b.parent())
    throw PreconditionError("subgroups belong to different parent groups");
}

} // namespace

// -- FiniteGroup -------------------------------------------------------------

GroupPtr FiniteGroup::generate(std::size_t degree,
                               std::vector<Permutation> generators,
                               std::size_t order_cap)
{
  if (degree == 0)
    throw PreconditionError("group degree must be positive");
  // The multiplication table stores 16-bit indices.
  order_cap = std::min<std::size_t>(order_cap, 65535);

  for (auto const &gen : generators) {
    if (gen.degree() != degree) {
      throw PreconditionError("generator " + gen.to_string() + " has degree " +
                              std::to_string(gen.degree()) + ", expected " +
                              std::to_string(degree));
    }
  }

  // Breadth-first closure; every element is recorded as parent * generator.
  struct Visit
  {
    Permutation perm;
    std::size_t parent;
    std::size_t gen;
  };

  std::vector<Visit> visits;
  std::unordered_map<Permutation, std::size_t> seen;

  Permutation id(degree);
  visits.push_back({id, 0, 0});
  seen.emplace(id, 0);

  for (std::size_t i = 0; i < visits.size(); ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Permutation next = visits[i].perm * generators[g];
      if (seen.contains(next))
        continue;
      if (visits.size() >= order_cap) {
        throw CapExceeded("group order exceeds cap " + std::to_string(order_cap),
                          visits.size() + 1);
      }
      seen.emplace(next, visits.size());
      visits.push_back({std::move(next), i, g});
    }
  }

  std::size_t const n = visits.size();

  std::vector<std::size_t> by_image(n);
  std::iota(by_image.begin(), by_image.end(), std::size_t{0});
  std::sort(by_image.begin(), by_image.end(), [&](std::size_t a, std::size_t b) {
    return visits[a].perm < visits[b].perm;
  });

  // visit index -> canonical index
  std::vector<ElementId> canon(n);
  for (std::size_t k = 0; k < n; ++k)
    canon[by_image[k]] = static_cast<ElementId>(k);

  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  group->_degree = degree;
  group->_elements.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    group->_elements.push_back(visits[by_image[k]].perm);
    group->_index.emplace(group->_elements.back(), static_cast<ElementId>(k));
  }
  assert(group->_elements.front().is_identity());

  std::vector<std::vector<ElementId>> right_by_gen(
    generators.size(), std::vector<ElementId>(n));
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (std::size_t k = 0; k < n; ++k) {
      right_by_gen[g][k] =
        group->_index.at(group->_elements[k] * generators[g]);
    }
  }

  // a * b = (a * parent(b)) * gen(b), filled in breadth-first order.
  group->_table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint16_t *row = group->_table.data() + a * n;
    row[canon[0]] = static_cast<std::uint16_t>(a);
    for (std::size_t v = 1; v < n; ++v) {
      ElementId p = row[canon[visits[v].parent]];
      row[canon[v]] = static_cast<std::uint16_t>(right_by_gen[visits[v].gen][p]);
    }
  }

  group->_inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint16_t const *row = group->_table.data() + a * n;
    for (std::size_t b = 0; b < n; ++b) {
      if (row[b] == identity()) {
        group->_inverse[a] = static_cast<ElementId>(b);
        break;
      }
    }
  }

  group->_element_order.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    group->_element_order[a] = group->_elements[a].order();

  group->_generators = std::move(generators);
  for (auto const &gen : group->_generators)
    group->_generator_ids.push_back(group->_index.at(gen));

  return group;
}

std::optional<ElementId> FiniteGroup::index_of(Permutation const &perm) const
{
  auto it = _index.find(perm);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

// -- Subgroup ----------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, ElementSet members)
: _parent(std::move(parent)), _members(std::move(members))
{
  if (!_parent)
    throw PreconditionError("subgroup without parent group");
  if (_members.size() != _parent->order())
    throw PreconditionError("member set size does not match parent order");
  if (!_members.test(FiniteGroup::identity()))
    throw PreconditionError("member set lacks the identity");

  Closure closure(*_parent);
  for_each_member(_members, [&](ElementId a) { closure.extend(a); });

  if (closure.set() != _members)
    throw PreconditionError("member set is not closed under multiplication");

  _order = _members.count();
  _generators = closure.gens();
}

Subgroup::Subgroup(GroupPtr parent, ElementSet members,
                   std::vector<ElementId> gens, Unchecked)
: _parent(std::move(parent)), _members(std::move(members)),
  _order(_members.count()), _generators(std::move(gens))
{}

Subgroup closure_of(GroupPtr const &parent, std::span<ElementId const> seed)
{
  Closure closure(*parent);
  for (ElementId a : seed) {
    if (a >= parent->order())
      throw PreconditionError("element index out of range for parent group");
    closure.extend(a);
  }

  // Re-derive generators canonically from the member set.
  ElementSet members = closure.take_set();
  Closure canonical(*parent);
  for_each_member(members, [&](ElementId a) { canonical.extend(a); });

  return Subgroup(parent, std::move(members), canonical.gens(),
                  Subgroup::Unchecked{});
}

Subgroup Subgroup::whole(GroupPtr parent)
{
  ElementSet all(parent->order());
  all.set();
  return Subgroup(parent, std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent)
{
  ElementSet one(parent->order());
  one.set(FiniteGroup::identity());
  return Subgroup(std::move(parent), std::move(one), {}, Unchecked{});
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<ElementId const> seed)
{
  return closure_of(parent, seed);
}

std::vector<Permutation> Subgroup::generator_permutations() const
{
  std::vector<Permutation> result;
  for (ElementId g : _generators)
    result.push_back(_parent->element(g));
  return result;
}

std::vector<ElementId> Subgroup::element_ids() const
{
  std::vector<ElementId> result;
  result.reserve(_order);
  for_each_member(_members, [&](ElementId a) { result.push_back(a); });
  return result;
}

bool Subgroup::contains(Subgroup const &other) const
{
  require_same_parent(*this, other);
  return other._members.is_subset_of(_members);
}

bool Subgroup::is_normal_in(Subgroup const &ambient) const
{
  require_same_parent(*this, ambient);
  if (!ambient.contains(*this))
    return false;
  for (ElementId g : ambient.generators()) {
    for (ElementId x : _generators) {
      if (!contains(_parent->conjugate(x, g)))
        return false;
    }
  }
  return true;
}

bool Subgroup::operator==(Subgroup const &other) const
{
  return _parent == other._parent && _members == other._members;
}

// -- operations --------------------------------------------------------------

GroupPtr group_from_generators(std::size_t degree,
                               std::vector<Permutation> generators,
                               std::size_t order_cap)
{
  return FiniteGroup::generate(degree, std::move(generators), order_cap);
}

Subgroup subgroup_generated(GroupPtr const &parent,
                            std::span<ElementId const> seed)
{
  return Subgroup::generated(parent, seed);
}

Subgroup subgroup_from_permutations(GroupPtr const &parent,
                                    std::span<Permutation const> gens)
{
  std::vector<ElementId> ids;
  for (auto const &perm : gens) {
    auto id = parent->index_of(perm);
    if (!id)
      throw PreconditionError("element " + perm.to_string() + " is not in the group");
    ids.push_back(*id);
  }
  return Subgroup::generated(parent, ids);
}

Subgroup intersection(Subgroup const &a, Subgroup const &b)
{
  require_same_parent(a, b);
  return Subgroup(a.parent(), a.members() & b.members());
}

Subgroup normal_closure(Subgroup const &ambient, Subgroup const &x)
{
  require_same_parent(ambient, x);
  if (!ambient.contains(x))
    throw PreconditionError("normal_closure: subgroup not contained in ambient");

  auto const &group = *ambient.parent();
  Closure closure(group);
  for (ElementId g : x.generators())
    closure.extend(g);

  for (std::size_t i = 0; i < closure.gens().size(); ++i) {
    for (ElementId a : ambient.generators())
      closure.extend(group.conjugate(closure.gens()[i], a));
  }

  return Subgroup(ambient.parent(), closure.take_set());
}

Subgroup normal_core(Subgroup const &ambient, Subgroup const &x)
{
  require_same_parent(ambient, x);
  if (!ambient.contains(x))
    throw PreconditionError("normal_core: subgroup not contained in ambient");

  auto const &group = *ambient.parent();
  ElementSet core = x.members();

  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId g : ambient.generators()) {
      ElementSet conj(group.order());
      for_each_member(core, [&](ElementId c) { conj.set(group.conjugate(c, g)); });
      ElementSet next = core & conj;
      if (next != core) {
        core = std::move(next);
        changed = true;
      }
    }
  }

  return Subgroup(ambient.parent(), std::move(core));
}

Subgroup derived_subgroup(Subgroup const &x)
{
  auto const &group = *x.parent();
  std::vector<ElementId> seed;
  auto gens = x.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seed.push_back(group.commutator(gens[i], gens[j]));
  }
  return normal_closure(x, Subgroup::generated(x.parent(), seed));
}

namespace
{

struct SetHash
{
  std::size_t operator()(ElementSet const &s) const { return std::hash<ElementSet>{}(s); }
};

bool canonical_less(Subgroup const &a, Subgroup const &b)
{
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.members() < b.members();
}

} // namespace

std::vector<Subgroup> normal_subgroups(Subgroup const &ambient)
{
  auto const &group = *ambient.parent();

  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, SetHash> index;
  auto add = [&](Subgroup s) -> bool {
    if (index.contains(s.members()))
      return false;
    index.emplace(s.members(), found.size());
    found.push_back(std::move(s));
    return true;
  };

  add(Subgroup::trivial(ambient.parent()));

  // Normal closures of single elements, one per conjugacy class.
  ElementSet done(group.order());
  for (ElementId a : ambient.element_ids()) {
    if (done.test(a))
      continue;
    for (ElementId g : ambient.element_ids())
      done.set(group.conjugate(a, g));
    ElementId seed[] = {a};
    add(normal_closure(ambient, Subgroup::generated(ambient.parent(), seed)));
  }

  // Close under pairwise products (joins of normal subgroups).
  std::size_t const basic = found.size();
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < basic; ++j) {
      if (found[j].members().is_subset_of(found[i].members()))
        continue;
      std::vector<ElementId> seed(found[i].generators().begin(),
                                  found[i].generators().end());
      seed.insert(seed.end(), found[j].generators().begin(),
                  found[j].generators().end());
      add(Subgroup::generated(ambient.parent(), seed));
    }
  }

  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<Subgroup> normal_subgroups(GroupPtr const &group)
{
  return normal_subgroups(Subgroup::whole(group));
}

GroupPtr quotient_group(Subgroup const &group, Subgroup const &n,
                        std::size_t order_cap)
{
  require_same_parent(group, n);
  if (!n.is_normal_in(group))
    throw PreconditionError("quotient_group: subgroup is not normal");

  auto const &parent = *group.parent();
  std::vector<ElementId> const n_elements = n.element_ids();

  std::vector<std::size_t> coset_of(parent.order(), SIZE_MAX);
  std::vector<ElementId> reps;
  for (ElementId x : group.element_ids()) {
    if (coset_of[x] != SIZE_MAX)
      continue;
    for (ElementId m : n_elements)
      coset_of[parent.multiply(m, x)] = reps.size();
    reps.push_back(x);
  }

  std::size_t const index = reps.size();
  std::vector<Permutation> gens;
  for (ElementId s : group.generators()) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c)
      images[c] = static_cast<Point>(coset_of[parent.multiply(reps[c], s)]);
    gens.emplace_back(std::move(images));
  }

  return group_from_generators(index, std::move(gens), order_cap);
}

GroupPtr quotient_group(GroupPtr const &group, Subgroup const &n,
                        std::size_t order_cap)
{
  return quotient_group(Subgroup::whole(group), n, order_cap);
}

bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

PrimeSet prime_divisors(std::size_t n)
{
  PrimeSet result;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result.insert(static_cast<unsigned>(p));
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    result.insert(static_cast<unsigned>(n));
  return result;
}

PrimeSet prime_set(Subgroup const &x)
{
  auto const &group = *x.parent();
  PrimeSet from_elements;
  for (ElementId a : x.element_ids()) {
    auto primes = prime_divisors(group.element_order(a));
    from_elements.insert(primes.begin(), primes.end());
  }

  // Cauchy: the two computations agree for every finite group.
  if (from_elements != prime_divisors(x.order()))
    throw std::logic_error("prime_set: element orders disagree with group order");

  return from_elements;
}

PrimeSet prime_set(GroupPtr const &group)
{
  return prime_set(Subgroup::whole(group));
}

std::vector<std::size_t> element_order_multiset(GroupPtr const &group)
{
  std::vector<std::size_t> result;
  for (ElementId a = 0; a < group->order(); ++a)
    result.push_back(group->element_order(a));
  std::sort(result.begin(), result.end());
  return result;
}

} // namespace ssn
