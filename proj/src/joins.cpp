#include "ssn/joins.hpp"

#include <algorithm>

#include "ssn/error.hpp"
#include "ssn/lattice.hpp"

namespace ssn
{

Subgroup join(Subgroup const &x, Subgroup const &y)
{
  if (x.parent() != y.parent())
    throw PreconditionError("join: subgroups belong to different parent groups");
  if (x.contains(y))
    return x;
  if (y.contains(x))
    return y;

  std::vector<ElementId> seed(x.generators().begin(), x.generators().end());
  seed.insert(seed.end(), y.generators().begin(), y.generators().end());
  return Subgroup::generated(x.parent(), seed);
}

bool permutes(Subgroup const &x, Subgroup const &y)
{
  if (x.parent() != y.parent())
    throw PreconditionError("permutes: subgroups belong to different parent groups");
  std::size_t const meet = (x.members() & y.members()).count();
  return join(x, y).order() * meet == x.order() * y.order();
}

ElementSet product_set(ElementSet const &a, Subgroup const &y)
{
  auto const &group = *y.parent();
  ElementSet result(group.order());
  std::vector<ElementId> const ys = y.element_ids();
  for (auto i = a.find_first(); i != ElementSet::npos; i = a.find_next(i)) {
    for (ElementId b : ys)
      result.set(group.multiply(static_cast<ElementId>(i), b));
  }
  return result;
}

ElementSet product_set(Subgroup const &x, Subgroup const &y)
{
  if (x.parent() != y.parent())
    throw PreconditionError("product_set: subgroups belong to different parent groups");
  return product_set(x.members(), y);
}

PermutizerResult PermutizerResult::unique(Subgroup maximum)
{
  std::vector<Subgroup> one;
  one.push_back(std::move(maximum));
  return PermutizerResult(Kind::UniqueMaximum, std::move(one));
}

PermutizerResult PermutizerResult::maximal_members(std::vector<Subgroup> members)
{
  return PermutizerResult(Kind::NoUniqueMaximum, std::move(members));
}

Subgroup const &PermutizerResult::maximum() const
{
  if (_kind != Kind::UniqueMaximum)
    throw PreconditionError("permutizer has no unique maximum");
  return _subgroups.front();
}

PermutizerResult permutizer(Subgroup const &h, Subgroup const &k,
                            std::span<Subgroup const> subgroups_of_h)
{
  if (h.parent() != k.parent())
    throw PreconditionError("permutizer: subgroups belong to different parent groups");

  std::vector<Subgroup> permuting;
  for (auto const &l : subgroups_of_h) {
    if (!h.contains(l))
      throw PreconditionError("permutizer: candidate is not a subgroup of H");
    if (permutes(l, k))
      permuting.push_back(l);
  }

  // The trivial subgroup always permutes, so `permuting` is never empty.
  Subgroup top = Subgroup::trivial(h.parent());
  for (auto const &l : permuting)
    top = join(top, l);

  if (permutes(top, k))
    return PermutizerResult::unique(std::move(top));

  std::vector<Subgroup> maximal;
  for (auto const &l : permuting) {
    bool dominated = std::any_of(permuting.begin(), permuting.end(), [&](Subgroup const &m) {
      return m.order() > l.order() && m.contains(l);
    });
    if (!dominated)
      maximal.push_back(l);
  }
  return PermutizerResult::maximal_members(std::move(maximal));
}

PermutizerResult permutizer(Subgroup const &h, Subgroup const &k,
                            std::size_t lattice_cap)
{
  auto lattice = all_subgroups(h, lattice_cap);
  return permutizer(h, k, lattice.nodes());
}

bool is_orthogonal(Subgroup const &h, Subgroup const &k)
{
  // For finite abelian A, B: A (x) B = 0 iff no prime divides both orders.
  PrimeSet const ph = prime_divisors(h.order() / derived_subgroup(h).order());
  PrimeSet const pk = prime_divisors(k.order() / derived_subgroup(k).order());
  return std::none_of(ph.begin(), ph.end(), [&](unsigned p) { return pk.contains(p); });
}

} // namespace ssn
