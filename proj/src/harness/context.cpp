#include "ssn/harness/context.hpp"

#include "ssn/error.hpp"
#include "ssn/residuals.hpp"

namespace ssn::harness
{

GroupContext::GroupContext(std::string name, GroupDefinition definition, GroupPtr group,
                           std::size_t lattice_cap)
: _name(std::move(name)),
  _definition(std::move(definition)),
  _group(group),
  _lattice(all_subgroups(group, lattice_cap))
{
  Subgroup const &g = whole();
  for (auto const &s : _lattice.nodes()) {
    _subnormal_defect.push_back(is_subnormal(s, g));

    bool cyclic = false;
    for (ElementId a : s.element_ids()) {
      if (_group->element_order(a) == s.order()) {
        cyclic = true;
        break;
      }
    }
    _cyclic.push_back(cyclic);
  }
}

NodeIndex GroupContext::join(NodeIndex a, NodeIndex b) const
{
  // Nodes ascend by order, so the first common upper bound is the least one.
  auto common = _lattice.above(a) & _lattice.above(b);
  return common.find_first();
}

NodeIndex GroupContext::meet(NodeIndex a, NodeIndex b) const
{
  return index_of(node(a).members() & node(b).members());
}

NodeIndex GroupContext::index_of(ElementSet const &members) const
{
  auto i = _lattice.index_of(members);
  if (!i)
    throw std::logic_error("member set is not a subgroup in the lattice of " + _name);
  return *i;
}

bool GroupContext::permutes(NodeIndex a, NodeIndex b) const
{
  return node(join(a, b)).order() * node(meet(a, b)).order() ==
         node(a).order() * node(b).order();
}

std::vector<NodeIndex> GroupContext::below(NodeIndex i) const
{
  std::vector<NodeIndex> result;
  for (NodeIndex j = 0; j <= i; ++j) {
    if (_lattice.contains(i, j))
      result.push_back(j);
  }
  return result;
}

std::string GroupContext::describe(NodeIndex i) const
{
  auto gens = node(i).generator_permutations();
  return gens.empty() ? "()" : format_permutation_list(gens);
}

NodeIndex GroupContext::parse_subject(std::string const &text) const
{
  auto perms = parse_permutation_list(text, _group->degree());
  return index_of(subgroup_from_permutations(_group, perms));
}

PartitionContext::PartitionContext(GroupContext const &group, std::string name,
                                   SigmaPartition sigma)
: _group(&group),
  _name(std::move(name)),
  _sigma(std::move(sigma)),
  _graph(group.lattice(), _sigma)
{
  _defect = _graph.defects_to(group.top());
  _relevant = _sigma.blocks_meeting(prime_set(group.whole()));
  _soluble = is_sigma_soluble(group.whole(), _sigma);

  for (NodeIndex i = 0; i < group.size(); ++i) {
    Subgroup const &x = group.node(i);
    _sigma_residual.push_back(group.index_of(ssn::sigma_residual(x, _sigma)));
    _soluble_residual.push_back(group.index_of(sigma_soluble_residual(x, _sigma)));

    std::vector<NodeIndex> blocks;
    for (BlockId b : _relevant)
      blocks.push_back(group.index_of(block_residual(x, _sigma, b)));
    _block_residual.push_back(std::move(blocks));
  }
}

std::vector<NodeIndex> PartitionContext::sigma_subnormal_nodes() const
{
  std::vector<NodeIndex> result;
  for (NodeIndex i = 0; i < _defect.size(); ++i) {
    if (_defect[i])
      result.push_back(i);
  }
  return result;
}

NodeIndex PartitionContext::tau_residual(NodeIndex i, unsigned mask) const
{
  ElementSet members = _group->node(i).members();
  for (std::size_t k = 0; k < _relevant.size(); ++k) {
    if (mask & (1u << k))
      members &= _group->node(_block_residual[i][k]).members();
  }
  return _group->index_of(members);
}

} // namespace ssn::harness
