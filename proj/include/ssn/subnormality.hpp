#ifndef SSN_SUBNORMALITY_HPP
#define SSN_SUBNORMALITY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssn/group.hpp"
#include "ssn/lattice.hpp"
#include "ssn/sigma.hpp"

namespace ssn
{

enum class StepKind
{
  PlainNormal,
  BlockNormal,
};

struct ChainStep
{
  StepKind kind;
  BlockId block = BlockId::remainder();  // meaningful for BlockNormal only

  static ChainStep plain() { return {StepKind::PlainNormal}; }
  static ChainStep in_block(BlockId b) { return {StepKind::BlockNormal, b}; }

  std::string to_string() const;
  bool operator==(ChainStep const &) const = default;
};

// X = terms[0] <=_sigma terms[1] <=_sigma ... <=_sigma terms.back() = ambient,
// where steps[i] tags the link terms[i] -> terms[i + 1].
struct SigmaChain
{
  std::vector<Subgroup> terms;
  std::vector<ChainStep> steps;

  std::size_t length() const { return steps.size(); }
};

// Re-checks every link of `chain` from scratch: strict containment,
// normality for PlainNormal links, and for BlockNormal(b) links that the
// index of the core has all its primes in b.
bool validate_chain(SigmaChain const &chain, Subgroup const &x, Subgroup const &y,
                    SigmaPartition const &sigma);

// Subnormal defect of X in Y via the normal closure series, or nullopt.
std::optional<std::size_t> is_subnormal(Subgroup const &x, Subgroup const &y);

// X normal in Y, or Y / core_Y(X) sigma-primary.
bool is_sigma_normal(Subgroup const &x, Subgroup const &y, SigmaPartition const &sigma);

// Y / core_Y(X) is a b-group.
bool is_block_normal(Subgroup const &x, Subgroup const &y, SigmaPartition const &sigma,
                     BlockId b);

// The tag a valid link X -> Y gets: PlainNormal if X is normal in Y,
// otherwise BlockNormal of the first block covering the core index.
std::optional<ChainStep> sigma_normal_step(Subgroup const &x, Subgroup const &y,
                                           SigmaPartition const &sigma);

// Canonical recursion: done if X = Y, X normal in Y, or O^b(Y) <= X for a
// block b meeting pi(Y); otherwise recurse into X^Y and <X, O^b(Y)>.
std::optional<SigmaChain> sigma_subnormal_fast(Subgroup const &x, Subgroup const &y,
                                               SigmaPartition const &sigma);

struct OracleVerdict
{
  SigmaChain chain;
  std::size_t defect;
};

// Literal definition: breadth-first search over the subgroup lattice of Y
// along sigma-normal links. Returns a shortest chain; its length is the
// sigma-defect.
std::optional<OracleVerdict> sigma_subnormal_oracle(Subgroup const &x, Subgroup const &y,
                                                    SigmaPartition const &sigma,
                                                    std::size_t lattice_cap = kDefaultLatticeCap);

// Sigma-normal links between lattice nodes, built once per (lattice,
// partition) and queried read-only afterwards.
class SigmaNormalGraph
{
public:
  SigmaNormalGraph(SubgroupLattice const &lattice, SigmaPartition const &sigma);

  SubgroupLattice const &lattice() const { return *_lattice; }

  // Successors j of node i: node(i) < node(j) and node(i) sigma-normal in node(j).
  std::span<std::size_t const> successors(std::size_t i) const { return _succ[i]; }
  ChainStep step(std::size_t i, std::size_t j) const;

  // Shortest chain from node x to node y, canonical tie-breaking.
  std::optional<OracleVerdict> shortest_chain(std::size_t x, std::size_t y) const;

  // Sigma-defect in node y of every node, nullopt where not sigma-subnormal.
  std::vector<std::optional<std::size_t>> defects_to(std::size_t y) const;

private:
  SubgroupLattice const *_lattice;
  std::vector<std::vector<std::size_t>> _succ;
  std::vector<std::vector<ChainStep>> _steps;
};

// A chain X = X_0 < X_1 < ... < X_n = Y with X_{i-1} sigma_{b_i}-normal in
// X_i for exactly the prescribed blocks b_1, ..., b_n.
bool is_strictly_sigma_subnormal(Subgroup const &x, Subgroup const &y,
                                 SigmaPartition const &sigma,
                                 std::span<BlockId const> block_seq,
                                 std::size_t lattice_cap = kDefaultLatticeCap);

struct EmbeddingWitness
{
  std::vector<Subgroup> terms;
  std::vector<BlockId> block_seq;
  bool normal_in_ambient = false;

  SigmaChain to_chain() const;
};

// Normal series from X to Y with sigma-primary factors; with
// `normal_in_ambient` every term must be normal in Y.
std::optional<EmbeddingWitness> is_sigma_embedded(Subgroup const &x, Subgroup const &y,
                                                  SigmaPartition const &sigma,
                                                  bool normal_in_ambient,
                                                  std::size_t lattice_cap = kDefaultLatticeCap);

// Whether the sigma-residual of H is subnormal in G. Throws
// PreconditionError if H is not sigma-subnormal in G.
bool residual_subnormality_check(Subgroup const &h, Subgroup const &g,
                                 SigmaPartition const &sigma);
bool residual_subnormality_check(Subgroup const &h, GroupPtr const &g,
                                 SigmaPartition const &sigma);

namespace testing
{

// Replaces the answer of is_sigma_normal when the override returns a value.
// Only for fault-injection tests; install it while no queries are running.
using SigmaNormalOverride = std::function<std::optional<bool>(
  Subgroup const &, Subgroup const &, SigmaPartition const &)>;

void set_sigma_normal_override(SigmaNormalOverride hook);
void clear_sigma_normal_override();

} // namespace testing

} // namespace ssn

#endif // SSN_SUBNORMALITY_HPP
