#ifndef SSN_RESIDUALS_HPP
#define SSN_RESIDUALS_HPP

#include <optional>
#include <span>
#include <vector>

#include "ssn/group.hpp"
#include "ssn/sigma.hpp"

namespace ssn
{

// O^pi(X): generated by the q-elements of X for primes q outside `pi`.
Subgroup pi_residual(Subgroup const &x, PrimeSet const &pi);

// O^{sigma_b}(X), the residual for the prime set of one block. Works for the
// remainder block without enumerating it.
Subgroup block_residual(Subgroup const &x, SigmaPartition const &sigma, BlockId b);

// X^sigma: intersection of the block residuals over blocks meeting pi(X).
Subgroup sigma_residual(Subgroup const &x, SigmaPartition const &sigma);

// X^tau for a set of blocks; X itself when `tau` is empty.
Subgroup tau_residual(Subgroup const &x, SigmaPartition const &sigma,
                      std::span<BlockId const> tau);

// Smallest normal N of X with X/N sigma-soluble.
Subgroup sigma_soluble_residual(Subgroup const &x, SigmaPartition const &sigma);

enum class ResidualKind
{
  Pi,
  Sigma,
  Tau,
  SigmaSoluble,
};

char const *to_string(ResidualKind kind);

struct ResidualReport
{
  Subgroup subject;
  ResidualKind kind;
  PrimeSet pi;               // Pi only
  std::vector<BlockId> tau;  // Tau only
  Subgroup result;
  std::optional<Subgroup> oracle_result;

  bool agrees() const { return !oracle_result || *oracle_result == result; }
};

// Computes the residual and, when requested, the independent oracle value.
ResidualReport residual_report(Subgroup const &x, SigmaPartition const &sigma,
                               ResidualKind kind, PrimeSet const &pi = {},
                               std::vector<BlockId> const &tau = {},
                               bool with_oracle = true);

namespace oracle
{

// Minimum of { N normal in X : every prime of |X:N| lies in pi },
// found by scanning all normal subgroups.
Subgroup pi_residual_by_scan(Subgroup const &x, PrimeSet const &pi);
Subgroup block_residual_by_scan(Subgroup const &x, SigmaPartition const &sigma, BlockId b);

// Minimal normal N with X/N sigma-nilpotent, each quotient realised as a
// coset-action permutation group.
Subgroup sigma_residual_by_quotients(Subgroup const &x, SigmaPartition const &sigma);

// Intersection of all normal N whose coset-action quotient is sigma-soluble.
Subgroup sigma_soluble_residual_by_quotients(Subgroup const &x,
                                             SigmaPartition const &sigma);

} // namespace oracle

} // namespace ssn

#endif // SSN_RESIDUALS_HPP
