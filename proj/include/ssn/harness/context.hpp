#ifndef SSN_HARNESS_CONTEXT_HPP
#define SSN_HARNESS_CONTEXT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ssn/harness/families.hpp"
#include "ssn/lattice.hpp"
#include "ssn/sigma.hpp"
#include "ssn/subnormality.hpp"

namespace ssn::harness
{

using NodeIndex = std::size_t;

// Everything about one corpus group that does not depend on a partition.
// Built once, then shared read-only between workers.
class GroupContext
{
public:
  GroupContext(std::string name, GroupDefinition definition, GroupPtr group,
               std::size_t lattice_cap);

  std::string const &name() const { return _name; }
  GroupDefinition const &definition() const { return _definition; }
  GroupPtr const &group() const { return _group; }
  Subgroup const &whole() const { return _lattice.ambient(); }
  SubgroupLattice const &lattice() const { return _lattice; }

  std::size_t size() const { return _lattice.size(); }
  Subgroup const &node(NodeIndex i) const { return _lattice.node(i); }
  NodeIndex top() const { return _lattice.top_index(); }

  NodeIndex join(NodeIndex a, NodeIndex b) const;
  NodeIndex meet(NodeIndex a, NodeIndex b) const;
  NodeIndex index_of(ElementSet const &members) const;
  NodeIndex index_of(Subgroup const &s) const { return index_of(s.members()); }

  bool permutes(NodeIndex a, NodeIndex b) const;

  std::optional<std::size_t> subnormal_defect(NodeIndex i) const { return _subnormal_defect[i]; }
  bool is_cyclic(NodeIndex i) const { return _cyclic[i]; }

  // Subgroups of node i, ascending.
  std::vector<NodeIndex> below(NodeIndex i) const;

  // Generator strings, 1-based cycle notation joined by "; ".
  std::string describe(NodeIndex i) const;

  // Parses a generator list (as produced by describe) back to a node.
  NodeIndex parse_subject(std::string const &text) const;

private:
  std::string _name;
  GroupDefinition _definition;
  GroupPtr _group;
  SubgroupLattice _lattice;
  std::vector<std::optional<std::size_t>> _subnormal_defect;
  std::vector<bool> _cyclic;
};

// Partition-dependent data for one (group, partition) pair.
class PartitionContext
{
public:
  PartitionContext(GroupContext const &group, std::string name, SigmaPartition sigma);

  GroupContext const &group() const { return *_group; }
  std::string const &name() const { return _name; }
  SigmaPartition const &sigma() const { return _sigma; }
  SigmaNormalGraph const &graph() const { return _graph; }

  // Literal (lattice BFS) sigma-defect in G.
  std::optional<std::size_t> sigma_defect(NodeIndex i) const { return _defect[i]; }
  bool is_sigma_subnormal(NodeIndex i) const { return _defect[i].has_value(); }
  std::vector<NodeIndex> sigma_subnormal_nodes() const;

  // Blocks meeting pi(G), in partition order.
  std::vector<BlockId> const &relevant_blocks() const { return _relevant; }

  NodeIndex sigma_residual(NodeIndex i) const { return _sigma_residual[i]; }
  NodeIndex soluble_residual(NodeIndex i) const { return _soluble_residual[i]; }

  // Intersection of the block residuals of node i over the blocks selected
  // by `mask` (bit k = relevant_blocks()[k]).
  NodeIndex tau_residual(NodeIndex i, unsigned mask) const;

  bool group_is_sigma_soluble() const { return _soluble; }

private:
  GroupContext const *_group;
  std::string _name;
  SigmaPartition _sigma;
  SigmaNormalGraph _graph;
  std::vector<std::optional<std::size_t>> _defect;
  std::vector<BlockId> _relevant;
  std::vector<NodeIndex> _sigma_residual;
  std::vector<NodeIndex> _soluble_residual;
  std::vector<std::vector<NodeIndex>> _block_residual;  // [node][relevant block]
  bool _soluble = false;
};

} // namespace ssn::harness

#endif // SSN_HARNESS_CONTEXT_HPP
