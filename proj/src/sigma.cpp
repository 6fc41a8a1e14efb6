#include "ssn/sigma.hpp"

#include <algorithm>

#include "ssn/error.hpp"

namespace ssn
{

std::string BlockId::to_string() const
{
  return is_remainder() ? "rest" : std::to_string(_index);
}

BlockId BlockId::parse(std::string const &text)
{
  if (text == "rest" || text == "r")
    return remainder();
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit))
    throw ParseError("invalid block id '" + text + "'");
  return listed(std::stoul(text));
}

SigmaPartition::SigmaPartition(std::vector<PrimeSet> blocks)
: _blocks(std::move(blocks))
{
  PrimeSet seen;
  for (auto const &block : _blocks) {
    if (block.empty())
      throw PreconditionError("sigma partition blocks must be nonempty");
    for (unsigned p : block) {
      if (!is_prime(p))
        throw PreconditionError(std::to_string(p) + " is not prime");
      if (!seen.insert(p).second)
        throw PreconditionError("prime " + std::to_string(p) +
                                " appears in two blocks");
    }
  }
}

std::vector<BlockId> SigmaPartition::all_blocks() const
{
  std::vector<BlockId> result;
  for (std::size_t i = 0; i < _blocks.size(); ++i)
    result.push_back(BlockId::listed(i));
  result.push_back(BlockId::remainder());
  return result;
}

BlockId SigmaPartition::block_of(unsigned p) const
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  for (std::size_t i = 0; i < _blocks.size(); ++i) {
    if (_blocks[i].contains(p))
      return BlockId::listed(i);
  }
  return BlockId::remainder();
}

bool SigmaPartition::in_block(unsigned p, BlockId b) const
{
  return block_of(p) == b;
}

std::vector<BlockId> SigmaPartition::blocks_meeting(PrimeSet const &primes) const
{
  std::vector<BlockId> result;
  for (BlockId b : all_blocks()) {
    if (std::any_of(primes.begin(), primes.end(),
                    [&](unsigned p) { return in_block(p, b); }))
      result.push_back(b);
  }
  return result;
}

std::optional<BlockId> SigmaPartition::common_block(PrimeSet const &primes) const
{
  std::optional<BlockId> result;
  for (unsigned p : primes) {
    BlockId b = block_of(p);
    if (result && *result != b)
      return std::nullopt;
    result = b;
  }
  return result;
}

std::string SigmaPartition::to_string() const
{
  if (_blocks.empty())
    return "{P}";
  std::string text = "{";
  for (auto const &block : _blocks) {
    text += "{";
    bool first = true;
    for (unsigned p : block) {
      text += (first ? "" : ",") + std::to_string(p);
      first = false;
    }
    text += "},";
  }
  return text + "rest}";
}

BlockId block_of(SigmaPartition const &sigma, unsigned p)
{
  return sigma.block_of(p);
}

bool is_sigma_primary(SigmaPartition const &sigma, PrimeSet const &primes)
{
  return primes.empty() || sigma.common_block(primes).has_value();
}

bool primes_in_block(SigmaPartition const &sigma, PrimeSet const &primes, BlockId b)
{
  return std::all_of(primes.begin(), primes.end(),
                     [&](unsigned p) { return sigma.in_block(p, b); });
}

Subgroup sigma_component(Subgroup const &g, SigmaPartition const &sigma, BlockId b)
{
  if (!sigma.is_valid(b))
    throw PreconditionError("unknown block id " + b.to_string());

  std::vector<ElementId> seed;
  for (auto const &n : normal_subgroups(g)) {
    if (primes_in_block(sigma, prime_set(n), b))
      seed.insert(seed.end(), n.generators().begin(), n.generators().end());
  }
  Subgroup component = Subgroup::generated(g.parent(), seed);

  // A product of normal b-subgroups is again one.
  if (!component.is_normal_in(g) || !primes_in_block(sigma, prime_set(component), b))
    throw std::logic_error("sigma_component: product of components is not a b-subgroup");

  return component;
}

Subgroup sigma_component(GroupPtr const &g, SigmaPartition const &sigma, BlockId b)
{
  return sigma_component(Subgroup::whole(g), sigma, b);
}

bool is_sigma_nilpotent(Subgroup const &g, SigmaPartition const &sigma)
{
  // Components for distinct blocks have coprime orders, so their product
  // is direct and its order is the product of the orders.
  std::size_t product = 1;
  for (BlockId b : sigma.blocks_meeting(prime_set(g)))
    product *= sigma_component(g, sigma, b).order();
  return product == g.order();
}

bool is_sigma_nilpotent(GroupPtr const &g, SigmaPartition const &sigma)
{
  return is_sigma_nilpotent(Subgroup::whole(g), sigma);
}

bool is_sigma_soluble(GroupPtr const &g, SigmaPartition const &sigma,
                      std::size_t order_cap)
{
  GroupPtr current = g;
  while (current->order() > 1) {
    auto normals = normal_subgroups(current);
    // Sorted by order: the first nontrivial one is minimal normal.
    Subgroup const &minimal = normals.at(1);
    if (!is_sigma_primary(sigma, prime_set(minimal)))
      return false;
    current = quotient_group(current, minimal, order_cap);
  }
  return true;
}

bool quotient_is_sigma_soluble(Subgroup const &g, Subgroup const &base,
                               SigmaPartition const &sigma)
{
  if (!base.is_normal_in(g))
    throw PreconditionError("quotient_is_sigma_soluble: base is not normal");

  auto normals = normal_subgroups(g);
  Subgroup current = base;
  while (current.order() < g.order()) {
    // Smallest normal subgroup strictly above `current`: a chief factor.
    auto next = std::find_if(normals.begin(), normals.end(), [&](Subgroup const &n) {
      return n.order() > current.order() && n.contains(current);
    });
    if (next == normals.end())
      throw std::logic_error("quotient_is_sigma_soluble: no normal overgroup");
    if (!is_sigma_primary(sigma, prime_divisors(next->order() / current.order())))
      return false;
    current = *next;
  }
  return true;
}

bool is_sigma_soluble(Subgroup const &g, SigmaPartition const &sigma)
{
  return quotient_is_sigma_soluble(g, Subgroup::trivial(g.parent()), sigma);
}

} // namespace ssn
