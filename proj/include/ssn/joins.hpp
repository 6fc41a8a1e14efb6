#ifndef SSN_JOINS_HPP
#define SSN_JOINS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ssn/group.hpp"

namespace ssn
{

Subgroup join(Subgroup const &x, Subgroup const &y);

// XY = YX, decided by |<X,Y>| |X n Y| = |X| |Y|.
bool permutes(Subgroup const &x, Subgroup const &y);

// The set product {ab : a in A, b in Y} as a bitset over parent elements.
ElementSet product_set(ElementSet const &a, Subgroup const &y);
ElementSet product_set(Subgroup const &x, Subgroup const &y);

class PermutizerResult
{
public:
  enum class Kind
  {
    UniqueMaximum,
    NoUniqueMaximum,
  };

  static PermutizerResult unique(Subgroup maximum);
  static PermutizerResult maximal_members(std::vector<Subgroup> members);

  Kind kind() const { return _kind; }
  bool has_unique_maximum() const { return _kind == Kind::UniqueMaximum; }

  // The largest subgroup of H permuting with K; throws if there is none.
  Subgroup const &maximum() const;

  // Maximal permuting subgroups (just the maximum when it exists).
  std::span<Subgroup const> subgroups() const { return _subgroups; }

private:
  PermutizerResult(Kind kind, std::vector<Subgroup> subgroups)
  : _kind(kind), _subgroups(std::move(subgroups))
  {}

  Kind _kind;
  std::vector<Subgroup> _subgroups;
};

// Largest subgroup of H permuting with K, searched over all subgroups of H.
PermutizerResult permutizer(Subgroup const &h, Subgroup const &k,
                            std::size_t lattice_cap = kDefaultLatticeCap);

// Same, with the subgroups of H supplied by the caller (e.g. filtered from a
// lattice of the parent). `subgroups_of_h` must list every subgroup of H.
PermutizerResult permutizer(Subgroup const &h, Subgroup const &k,
                            std::span<Subgroup const> subgroups_of_h);

// H/H' (x) K/K' = 0, i.e. the abelianisations share no prime.
bool is_orthogonal(Subgroup const &h, Subgroup const &k);

} // namespace ssn

#endif // SSN_JOINS_HPP
