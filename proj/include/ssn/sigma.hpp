#ifndef SSN_SIGMA_HPP
#define SSN_SIGMA_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssn/group.hpp"

namespace ssn
{

// Either one of the listed blocks of a partition or its remainder block.
class BlockId
{
public:
  static BlockId listed(std::size_t index) { return BlockId(index); }
  static BlockId remainder() { return BlockId(kRemainder); }

  bool is_remainder() const { return _index == kRemainder; }
  std::size_t index() const { return _index; }

  // "0", "1", ... for listed blocks, "rest" for the remainder.
  std::string to_string() const;
  static BlockId parse(std::string const &text);

  auto operator<=>(BlockId const &) const = default;

private:
  static constexpr std::size_t kRemainder = static_cast<std::size_t>(-1);
  explicit BlockId(std::size_t index) : _index(index) {}

  std::size_t _index;
};

// A partition of all primes: finitely many explicit, pairwise disjoint
// blocks plus an implicit remainder block holding every unlisted prime.
// The default-constructed partition is the one-block partition {P}.
class SigmaPartition
{
public:
  SigmaPartition() = default;

  // Throws PreconditionError on empty blocks, non-primes or overlaps.
  explicit SigmaPartition(std::vector<PrimeSet> blocks);

  std::span<PrimeSet const> blocks() const { return _blocks; }
  std::size_t listed_count() const { return _blocks.size(); }

  // Listed blocks in order, then the remainder.
  std::vector<BlockId> all_blocks() const;

  bool is_valid(BlockId b) const
  { return b.is_remainder() || b.index() < _blocks.size(); }

  // Throws PreconditionError if p is not prime.
  BlockId block_of(unsigned p) const;

  bool in_block(unsigned p, BlockId b) const;

  // Blocks containing at least one prime of `primes`, in all_blocks() order.
  std::vector<BlockId> blocks_meeting(PrimeSet const &primes) const;

  // Common block of all of `primes`; nullopt if they are split. The empty
  // set yields nullopt as well (it lies in every block).
  std::optional<BlockId> common_block(PrimeSet const &primes) const;

  // e.g. "{{2},{3},rest}"; the one-block partition prints as "{P}".
  std::string to_string() const;

  bool operator==(SigmaPartition const &) const = default;

private:
  std::vector<PrimeSet> _blocks;
};

BlockId block_of(SigmaPartition const &sigma, unsigned p);

bool is_sigma_primary(SigmaPartition const &sigma, PrimeSet const &primes);

// True if every prime of `primes` lies in block `b`.
bool primes_in_block(SigmaPartition const &sigma, PrimeSet const &primes, BlockId b);

// Largest normal subgroup of `g` whose primes lie in block `b`.
Subgroup sigma_component(Subgroup const &g, SigmaPartition const &sigma, BlockId b);
Subgroup sigma_component(GroupPtr const &g, SigmaPartition const &sigma, BlockId b);

// For finite groups sigma-nilpotent and sigma-hypercentral coincide; this
// is the only predicate exposed for both.
bool is_sigma_nilpotent(Subgroup const &g, SigmaPartition const &sigma);
bool is_sigma_nilpotent(GroupPtr const &g, SigmaPartition const &sigma);

// Chief-series test through explicit quotient groups: pick a minimal normal
// subgroup, check it is sigma-primary, recurse on the quotient.
bool is_sigma_soluble(GroupPtr const &g, SigmaPartition const &sigma,
                      std::size_t order_cap = kDefaultOrderCap);

// Same decision inside the parent group: walks a chief series of `g`
// from `base` (normal in g) upwards and checks every factor.
bool quotient_is_sigma_soluble(Subgroup const &g, Subgroup const &base,
                               SigmaPartition const &sigma);
bool is_sigma_soluble(Subgroup const &g, SigmaPartition const &sigma);

} // namespace ssn

#endif // SSN_SIGMA_HPP
