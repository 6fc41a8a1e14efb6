#include "ssn/residuals.hpp"

#include <algorithm>
#include <functional>

#include "ssn/error.hpp"

namespace ssn
{

namespace
{

// Subgroup generated by the elements of X whose order is a power of a prime
// for which `outside` holds.
Subgroup generated_by_prime_power_elements(Subgroup const &x,
                                           std::function<bool(unsigned)> const &outside)
{
  auto const &group = *x.parent();
  std::vector<ElementId> seed;
  for (ElementId a : x.element_ids()) {
    auto primes = prime_divisors(group.element_order(a));
    if (primes.size() == 1 && outside(*primes.begin()))
      seed.push_back(a);
  }
  return Subgroup::generated(x.parent(), seed);
}

Subgroup intersect_all(Subgroup start, std::span<Subgroup const> others)
{
  ElementSet members = start.members();
  for (auto const &s : others)
    members &= s.members();
  return Subgroup(start.parent(), std::move(members));
}

} // namespace

Subgroup pi_residual(Subgroup const &x, PrimeSet const &pi)
{
  return generated_by_prime_power_elements(x, [&](unsigned q) { return !pi.contains(q); });
}

Subgroup block_residual(Subgroup const &x, SigmaPartition const &sigma, BlockId b)
{
  if (!sigma.is_valid(b))
    throw PreconditionError("unknown block id " + b.to_string());
  return generated_by_prime_power_elements(x, [&](unsigned q) { return !sigma.in_block(q, b); });
}

Subgroup sigma_residual(Subgroup const &x, SigmaPartition const &sigma)
{
  // Blocks disjoint from pi(X) contribute X itself.
  auto blocks = sigma.blocks_meeting(prime_set(x));
  return tau_residual(x, sigma, blocks);
}

Subgroup tau_residual(Subgroup const &x, SigmaPartition const &sigma,
                      std::span<BlockId const> tau)
{
  std::vector<Subgroup> residuals;
  for (BlockId b : tau)
    residuals.push_back(block_residual(x, sigma, b));
  return intersect_all(x, residuals);
}

Subgroup sigma_soluble_residual(Subgroup const &x, SigmaPartition const &sigma)
{
  // Finite sigma-soluble groups are closed under subdirect products, so the
  // intersection of all normal subgroups with sigma-soluble quotient is
  // itself such a subgroup.
  std::vector<Subgroup> qualifying;
  for (auto const &n : normal_subgroups(x)) {
    if (quotient_is_sigma_soluble(x, n, sigma))
      qualifying.push_back(n);
  }
  return intersect_all(x, qualifying);
}

char const *to_string(ResidualKind kind)
{
  switch (kind) {
  case ResidualKind::Pi:
    return "pi";
  case ResidualKind::Sigma:
    return "sigma";
  case ResidualKind::Tau:
    return "tau";
  case ResidualKind::SigmaSoluble:
    return "soluble";
  }
  return "?";
}

ResidualReport residual_report(Subgroup const &x, SigmaPartition const &sigma,
                               ResidualKind kind, PrimeSet const &pi,
                               std::vector<BlockId> const &tau, bool with_oracle)
{
  for (BlockId b : tau) {
    if (!sigma.is_valid(b))
      throw PreconditionError("unknown block id " + b.to_string());
  }

  auto compute = [&]() -> Subgroup {
    switch (kind) {
    case ResidualKind::Pi:
      return pi_residual(x, pi);
    case ResidualKind::Sigma:
      return sigma_residual(x, sigma);
    case ResidualKind::Tau:
      return tau_residual(x, sigma, tau);
    case ResidualKind::SigmaSoluble:
      return sigma_soluble_residual(x, sigma);
    }
    throw std::logic_error("unknown residual kind");
  };

  ResidualReport report{x, kind, pi, tau, compute(), std::nullopt};
  if (!with_oracle)
    return report;

  switch (kind) {
  case ResidualKind::Pi:
    report.oracle_result = oracle::pi_residual_by_scan(x, pi);
    break;
  case ResidualKind::Sigma:
    report.oracle_result = oracle::sigma_residual_by_quotients(x, sigma);
    break;
  case ResidualKind::Tau: {
    std::vector<Subgroup> scans;
    for (BlockId b : tau)
      scans.push_back(oracle::block_residual_by_scan(x, sigma, b));
    report.oracle_result = intersect_all(x, scans);
    break;
  }
  case ResidualKind::SigmaSoluble:
    report.oracle_result = oracle::sigma_soluble_residual_by_quotients(x, sigma);
    break;
  }
  return report;
}

namespace oracle
{

namespace
{

// The unique minimum of a family of subgroups closed under intersection;
// throws if the family has no minimum.
Subgroup minimum_of(Subgroup const &x, std::vector<Subgroup> const &family)
{
  Subgroup meet = intersect_all(x, family);
  if (std::find(family.begin(), family.end(), meet) == family.end())
    throw std::logic_error("residual oracle: qualifying family has no minimum");
  return meet;
}

Subgroup residual_by_index_scan(Subgroup const &x,
                                std::function<bool(unsigned)> const &allowed)
{
  std::vector<Subgroup> family;
  for (auto const &n : normal_subgroups(x)) {
    auto primes = prime_divisors(x.order() / n.order());
    if (std::all_of(primes.begin(), primes.end(), allowed))
      family.push_back(n);
  }
  return minimum_of(x, family);
}

} // namespace

Subgroup pi_residual_by_scan(Subgroup const &x, PrimeSet const &pi)
{
  return residual_by_index_scan(x, [&](unsigned p) { return pi.contains(p); });
}

Subgroup block_residual_by_scan(Subgroup const &x, SigmaPartition const &sigma, BlockId b)
{
  return residual_by_index_scan(x, [&](unsigned p) { return sigma.in_block(p, b); });
}

Subgroup sigma_residual_by_quotients(Subgroup const &x, SigmaPartition const &sigma)
{
  std::vector<Subgroup> family;
  for (auto const &n : normal_subgroups(x)) {
    if (is_sigma_nilpotent(quotient_group(x, n), sigma))
      family.push_back(n);
  }
  return minimum_of(x, family);
}

Subgroup sigma_soluble_residual_by_quotients(Subgroup const &x,
                                             SigmaPartition const &sigma)
{
  std::vector<Subgroup> family;
  for (auto const &n : normal_subgroups(x)) {
    if (is_sigma_soluble(quotient_group(x, n), sigma))
      family.push_back(n);
  }
  return minimum_of(x, family);
}

} // namespace oracle

} // namespace ssn
