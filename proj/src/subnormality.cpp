#include "ssn/subnormality.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ssn/error.hpp"
#include "ssn/joins.hpp"
#include "ssn/residuals.hpp"

namespace ssn
{

namespace
{

testing::SigmaNormalOverride &sigma_normal_hook()
{
  static testing::SigmaNormalOverride hook;
  return hook;
}

void require_contained(Subgroup const &x, Subgroup const &y, char const *op)
{
  if (x.parent() != y.parent())
    throw PreconditionError(std::string(op) + ": subgroups belong to different parent groups");
  if (!y.contains(x))
    throw PreconditionError(std::string(op) + ": X is not contained in Y");
}

PrimeSet core_index_primes(Subgroup const &x, Subgroup const &y)
{
  return prime_divisors(y.order() / normal_core(y, x).order());
}

struct SetHash
{
  std::size_t operator()(ElementSet const &s) const { return std::hash<ElementSet>{}(s); }
};

// Breadth-first search from `start` to `goal` over node indices; `edge`
// returns the step tag when i -> j is a link. Nodes are expanded in
// ascending index order, so the first shortest path found is canonical.
template<typename Edge>
std::optional<std::vector<std::pair<std::size_t, BlockId>>>
bfs_path(std::size_t count, std::size_t start, std::size_t goal, Edge &&edge)
{
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(count, unseen);
  std::vector<BlockId> via(count, BlockId::remainder());
  std::deque<std::size_t> queue{start};
  parent[start] = start;

  while (!queue.empty() && parent[goal] == unseen) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < count; ++j) {
      if (parent[j] != unseen)
        continue;
      if (auto b = edge(i, j)) {
        parent[j] = i;
        via[j] = *b;
        queue.push_back(j);
      }
    }
  }

  if (parent[goal] == unseen)
    return std::nullopt;

  std::vector<std::pair<std::size_t, BlockId>> path;
  for (std::size_t j = goal; j != start; j = parent[j])
    path.emplace_back(j, via[j]);
  path.emplace_back(start, BlockId::remainder());
  std::reverse(path.begin(), path.end());
  return path;
}

} // namespace

std::string ChainStep::to_string() const
{
  return kind == StepKind::PlainNormal ? "normal" : "block:" + block.to_string();
}

bool validate_chain(SigmaChain const &chain, Subgroup const &x, Subgroup const &y,
                    SigmaPartition const &sigma)
{
  if (chain.terms.empty() || chain.terms.size() != chain.steps.size() + 1)
    return false;
  if (!(chain.terms.front() == x) || !(chain.terms.back() == y))
    return false;

  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    Subgroup const &lower = chain.terms[i];
    Subgroup const &upper = chain.terms[i + 1];
    if (lower.parent() != upper.parent() || !upper.contains(lower) ||
        lower.order() == upper.order())
      return false;

    ChainStep const &step = chain.steps[i];
    if (step.kind == StepKind::PlainNormal) {
      if (!lower.is_normal_in(upper))
        return false;
    } else {
      if (!sigma.is_valid(step.block) ||
          !primes_in_block(sigma, core_index_primes(lower, upper), step.block))
        return false;
    }
  }
  return true;
}

std::optional<std::size_t> is_subnormal(Subgroup const &x, Subgroup const &y)
{
  require_contained(x, y, "is_subnormal");

  Subgroup current = y;
  for (std::size_t defect = 0;; ++defect) {
    if (current == x)
      return defect;
    Subgroup next = normal_closure(current, x);
    if (next == current)
      return std::nullopt;
    current = std::move(next);
  }
}

bool is_block_normal(Subgroup const &x, Subgroup const &y, SigmaPartition const &sigma,
                     BlockId b)
{
  require_contained(x, y, "is_block_normal");
  return primes_in_block(sigma, core_index_primes(x, y), b);
}

bool is_sigma_normal(Subgroup const &x, Subgroup const &y, SigmaPartition const &sigma)
{
  require_contained(x, y, "is_sigma_normal");
  if (auto const &hook = sigma_normal_hook()) {
    if (auto forced = hook(x, y, sigma))
      return *forced;
  }
  if (x.is_normal_in(y))
    return true;
  return is_sigma_primary(sigma, core_index_primes(x, y));
}

std::optional<ChainStep> sigma_normal_step(Subgroup const &x, Subgroup const &y,
                                           SigmaPartition const &sigma)
{
  require_contained(x, y, "sigma_normal_step");
  if (x.is_normal_in(y))
    return ChainStep::plain();
  if (auto b = sigma.common_block(core_index_primes(x, y)))
    return ChainStep::in_block(*b);
  return std::nullopt;
}

// -- fast recursion -----------------------------------------------------------

namespace
{

class FastSearch
{
public:
  FastSearch(Subgroup const &x, SigmaPartition const &sigma) : _x(x), _sigma(sigma) {}

  // Chain from X up to `y`, or nullopt.
  std::optional<SigmaChain> run(Subgroup const &y)
  {
    if (y == _x)
      return SigmaChain{{_x}, {}};
    if (_x.is_normal_in(y))
      return SigmaChain{{_x, y}, {ChainStep::plain()}};

    auto const blocks = _sigma.blocks_meeting(prime_set(y));
    std::vector<Subgroup> residuals;
    for (BlockId b : blocks) {
      residuals.push_back(block_residual(y, _sigma, b));
      // O^b(Y) <= X iff O^b(Y) <= core_Y(X) iff Y / core_Y(X) is a b-group.
      if (_x.contains(residuals.back()))
        return SigmaChain{{_x, y}, {ChainStep::in_block(b)}};
    }

    // Every proper candidate is sigma-normal in Y and contains X.
    std::vector<std::pair<Subgroup, ChainStep>> candidates;
    Subgroup closure = normal_closure(y, _x);
    if (!(closure == y))
      candidates.emplace_back(std::move(closure), ChainStep::plain());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      Subgroup m = join(_x, residuals[k]);
      if (m == y)
        continue;
      ChainStep step = m.is_normal_in(y) ? ChainStep::plain() : ChainStep::in_block(blocks[k]);
      candidates.emplace_back(std::move(m), step);
    }

    for (auto &[m, step] : candidates) {
      if (_failed.contains(m.members()))
        continue;
      if (auto chain = run(m)) {
        chain->terms.push_back(y);
        chain->steps.push_back(step);
        return chain;
      }
      _failed.insert(m.members());
    }
    return std::nullopt;
  }

private:
  Subgroup const &_x;
  SigmaPartition const &_sigma;
  std::unordered_set<ElementSet, SetHash> _failed;
};

} // namespace

std::optional<SigmaChain> sigma_subnormal_fast(Subgroup const &x, Subgroup const &y,
                                               SigmaPartition const &sigma)
{
  require_contained(x, y, "sigma_subnormal_fast");

  FastSearch search(x, sigma);
  auto chain = search.run(y);
  if (chain && !validate_chain(*chain, x, y, sigma))
    throw std::logic_error("sigma_subnormal_fast: assembled chain failed validation");
  return chain;
}

// -- lattice oracle -----------------------------------------------------------

SigmaNormalGraph::SigmaNormalGraph(SubgroupLattice const &lattice,
                                   SigmaPartition const &sigma)
: _lattice(&lattice), _succ(lattice.size()), _steps(lattice.size())
{
  std::size_t const n = lattice.size();
  for (std::size_t i = 0; i < n; ++i) {
    Subgroup const &lower = lattice.node(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!lattice.contains(j, i))
        continue;
      Subgroup const &upper = lattice.node(j);
      if (!is_sigma_normal(lower, upper, sigma))
        continue;
      // A forced answer (fault injection) may have no honest tag.
      auto step = sigma_normal_step(lower, upper, sigma);
      _succ[i].push_back(j);
      _steps[i].push_back(step.value_or(ChainStep::in_block(BlockId::remainder())));
    }
  }
}

ChainStep SigmaNormalGraph::step(std::size_t i, std::size_t j) const
{
  auto const &succ = _succ[i];
  auto it = std::lower_bound(succ.begin(), succ.end(), j);
  if (it == succ.end() || *it != j)
    throw PreconditionError("no sigma-normal link between the given nodes");
  return _steps[i][static_cast<std::size_t>(it - succ.begin())];
}

std::optional<OracleVerdict> SigmaNormalGraph::shortest_chain(std::size_t x,
                                                              std::size_t y) const
{
  auto const &lattice = *_lattice;
  if (!lattice.contains(y, x))
    throw PreconditionError("shortest_chain: X is not contained in Y");

  auto path = bfs_path(lattice.size(), x, y, [&](std::size_t i, std::size_t j)
                       -> std::optional<BlockId> {
    if (!lattice.contains(y, j) || !std::binary_search(_succ[i].begin(), _succ[i].end(), j))
      return std::nullopt;
    return BlockId::remainder();
  });
  if (!path)
    return std::nullopt;

  OracleVerdict verdict;
  for (std::size_t k = 0; k < path->size(); ++k) {
    std::size_t node = (*path)[k].first;
    verdict.chain.terms.push_back(lattice.node(node));
    if (k > 0)
      verdict.chain.steps.push_back(step((*path)[k - 1].first, node));
  }
  verdict.defect = verdict.chain.length();
  return verdict;
}

std::vector<std::optional<std::size_t>> SigmaNormalGraph::defects_to(std::size_t y) const
{
  auto const &lattice = *_lattice;
  std::size_t const n = lattice.size();

  std::vector<std::vector<std::size_t>> pred(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : _succ[i])
      pred[j].push_back(i);
  }

  std::vector<std::optional<std::size_t>> defect(n);
  defect[y] = 0;
  std::deque<std::size_t> queue{y};
  while (!queue.empty()) {
    std::size_t j = queue.front();
    queue.pop_front();
    for (std::size_t i : pred[j]) {
      if (!defect[i]) {
        defect[i] = *defect[j] + 1;
        queue.push_back(i);
      }
    }
  }
  return defect;
}

std::optional<OracleVerdict> sigma_subnormal_oracle(Subgroup const &x, Subgroup const &y,
                                                    SigmaPartition const &sigma,
                                                    std::size_t lattice_cap)
{
  require_contained(x, y, "sigma_subnormal_oracle");
  auto lattice = all_subgroups(y, lattice_cap);
  SigmaNormalGraph graph(lattice, sigma);
  return graph.shortest_chain(*lattice.index_of(x), lattice.top_index());
}

// -- strict chains and embeddings --------------------------------------------

bool is_strictly_sigma_subnormal(Subgroup const &x, Subgroup const &y,
                                 SigmaPartition const &sigma,
                                 std::span<BlockId const> block_seq,
                                 std::size_t lattice_cap)
{
  require_contained(x, y, "is_strictly_sigma_subnormal");
  for (BlockId b : block_seq) {
    if (!sigma.is_valid(b))
      throw PreconditionError("unknown block id " + b.to_string());
  }
  if (block_seq.empty())
    return x == y;

  auto lattice = all_subgroups(y, lattice_cap);
  std::size_t const n = lattice.size();

  boost::dynamic_bitset<> reach(n);
  reach.set(*lattice.index_of(x));
  for (BlockId b : block_seq) {
    boost::dynamic_bitset<> next(n);
    for (std::size_t i = reach.find_first(); i != reach.npos; i = reach.find_next(i)) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!next.test(j) && lattice.contains(j, i) &&
            is_block_normal(lattice.node(i), lattice.node(j), sigma, b))
          next.set(j);
      }
    }
    reach = std::move(next);
    if (reach.none())
      return false;
  }
  return reach.test(lattice.top_index());
}

SigmaChain EmbeddingWitness::to_chain() const
{
  SigmaChain chain;
  chain.terms = terms;
  chain.steps.assign(block_seq.size(), ChainStep::plain());
  return chain;
}

std::optional<EmbeddingWitness> is_sigma_embedded(Subgroup const &x, Subgroup const &y,
                                                  SigmaPartition const &sigma,
                                                  bool normal_in_ambient,
                                                  std::size_t lattice_cap)
{
  require_contained(x, y, "is_sigma_embedded");

  EmbeddingWitness witness;
  witness.normal_in_ambient = normal_in_ambient;
  if (x == y) {
    witness.terms.push_back(x);
    return witness;
  }

  std::vector<Subgroup> nodes;
  if (normal_in_ambient) {
    if (!x.is_normal_in(y))
      return std::nullopt;
    for (auto &n : normal_subgroups(y)) {
      if (n.contains(x))
        nodes.push_back(std::move(n));
    }
  } else {
    auto lattice = all_subgroups(y, lattice_cap);
    for (auto const &s : lattice.nodes()) {
      if (s.contains(x))
        nodes.push_back(s);
    }
  }

  // Both node lists are sorted by (order, members), so X is first and Y last.
  auto path = bfs_path(nodes.size(), 0, nodes.size() - 1,
                       [&](std::size_t i, std::size_t j) -> std::optional<BlockId> {
    Subgroup const &lower = nodes[i];
    Subgroup const &upper = nodes[j];
    if (upper.order() <= lower.order() || !upper.contains(lower))
      return std::nullopt;
    if (!normal_in_ambient && !lower.is_normal_in(upper))
      return std::nullopt;
    return sigma.common_block(prime_divisors(upper.order() / lower.order()));
  });
  if (!path)
    return std::nullopt;

  for (std::size_t k = 0; k < path->size(); ++k) {
    witness.terms.push_back(nodes[(*path)[k].first]);
    if (k > 0)
      witness.block_seq.push_back((*path)[k].second);
  }
  return witness;
}

bool residual_subnormality_check(Subgroup const &h, Subgroup const &g,
                                 SigmaPartition const &sigma)
{
  if (!sigma_subnormal_fast(h, g, sigma))
    throw PreconditionError("residual_subnormality_check: H is not sigma-subnormal in G");
  return is_subnormal(sigma_residual(h, sigma), g).has_value();
}

bool residual_subnormality_check(Subgroup const &h, GroupPtr const &g,
                                 SigmaPartition const &sigma)
{
  return residual_subnormality_check(h, Subgroup::whole(g), sigma);
}

namespace testing
{

void set_sigma_normal_override(SigmaNormalOverride hook)
{
  sigma_normal_hook() = std::move(hook);
}

void clear_sigma_normal_override()
{
  sigma_normal_hook() = nullptr;
}

} // namespace testing

} // namespace ssn
