#include "ssn/harness/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <tuple>

#include "ssn/error.hpp"
#include "ssn/joins.hpp"
#include "ssn/residuals.hpp"

namespace ssn::harness
{

using nlohmann::json;

char const *to_string(Status status)
{
  switch (status) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Skipped:
    return "skipped";
  case Status::Finding:
    return "finding";
  }
  return "?";
}

Status parse_status(std::string const &text)
{
  for (Status s : {Status::Pass, Status::Fail, Status::Skipped, Status::Finding}) {
    if (text == to_string(s))
      return s;
  }
  throw ParseError("unknown status '" + text + "'");
}

json to_json(Verdict const &v)
{
  json j;
  j["suite"] = v.suite;
  j["group"] = v.group;
  j["partition"] = v.partition;
  j["subjects"] = v.subjects;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness;
  j["elapsed_ms"] = v.elapsed_ms;
  return j;
}

Verdict verdict_from_json(json const &j)
{
  Verdict v;
  v.suite = j.at("suite").get<std::string>();
  v.group = j.at("group").get<std::string>();
  v.partition = j.at("partition").get<std::string>();
  v.subjects = j.at("subjects").get<std::vector<std::string>>();
  v.status = parse_status(j.at("status").get<std::string>());
  v.witness = j.value("witness", json());
  v.elapsed_ms = j.value("elapsed_ms", 0.0);
  return v;
}

bool verdict_less(Verdict const &a, Verdict const &b)
{
  return std::tie(a.suite, a.group, a.partition, a.subjects) <
         std::tie(b.suite, b.group, b.partition, b.subjects);
}

namespace
{

using Nodes = std::vector<NodeIndex>;

Outcome pass() { return {}; }

Outcome fail(std::string detail, json data = json::object())
{
  return {Status::Fail, std::move(detail), std::move(data)};
}

Outcome finding(std::string detail, json data = json::object())
{
  return {Status::Finding, std::move(detail), std::move(data)};
}

json chain_json(SigmaChain const &chain)
{
  json terms = json::array();
  for (auto const &t : chain.terms) {
    auto gens = t.generator_permutations();
    terms.push_back(gens.empty() ? "()" : format_permutation_list(gens));
  }
  json steps = json::array();
  for (auto const &s : chain.steps)
    steps.push_back(s.to_string());
  return {{"terms", terms}, {"steps", steps}};
}

// Unordered pairs i < j of sigma-subnormal nodes.
std::vector<Case> sn_pairs(PartitionContext const &ctx)
{
  auto sn = ctx.sigma_subnormal_nodes();
  std::vector<Case> cases;
  for (std::size_t a = 0; a < sn.size(); ++a) {
    for (std::size_t b = a + 1; b < sn.size(); ++b)
      cases.push_back({{sn[a], sn[b]}});
  }
  return cases;
}

std::vector<Case> sn_ordered_pairs(PartitionContext const &ctx)
{
  auto sn = ctx.sigma_subnormal_nodes();
  std::vector<Case> cases;
  for (NodeIndex i : sn) {
    for (NodeIndex j : sn) {
      if (i != j)
        cases.push_back({{i, j}});
    }
  }
  return cases;
}

// Pairs generating the whole group, one case per block mask.
std::vector<Case> generating_pairs_by_mask(PartitionContext const &ctx)
{
  auto const &g = ctx.group();
  unsigned const masks = 1u << ctx.relevant_blocks().size();
  std::vector<Case> cases;
  for (auto const &pair : sn_pairs(ctx)) {
    if (g.join(pair.subjects[0], pair.subjects[1]) != g.top())
      continue;
    for (unsigned m = 0; m < masks; ++m)
      cases.push_back({pair.subjects, m});
  }
  return cases;
}

// For each distinct join J of a sigma-subnormal pair (first pair found),
// one case per cyclic subgroup C of J: subjects (H, K, C).
std::vector<Case> join_cyclic_cases(PartitionContext const &ctx)
{
  auto const &g = ctx.group();
  std::set<NodeIndex> seen;
  std::vector<Case> cases;
  for (auto const &pair : sn_pairs(ctx)) {
    NodeIndex j = g.join(pair.subjects[0], pair.subjects[1]);
    if (!seen.insert(j).second)
      continue;
    for (NodeIndex c : g.below(j)) {
      if (g.is_cyclic(c))
        cases.push_back({{pair.subjects[0], pair.subjects[1], c}});
    }
  }
  return cases;
}

bool same_set(ElementSet const &a, Subgroup const &b) { return a == b.members(); }

std::string check_tau_name(PartitionContext const &ctx, unsigned mask)
{
  std::string text = "{";
  auto const &blocks = ctx.relevant_blocks();
  bool first = true;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (mask & (1u << k)) {
      text += (first ? "" : ",") + blocks[k].to_string();
      first = false;
    }
  }
  return text + "}";
}

// -- individual checks --------------------------------------------------------

Outcome check_oracle(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex x = c.subjects[0];
  Subgroup const &sx = g.node(x);

  auto fast = sigma_subnormal_fast(sx, g.whole(), ctx.sigma());
  auto oracle = ctx.graph().shortest_chain(x, g.top());
  json data = json::object();
  if (oracle)
    data["chain"] = chain_json(oracle->chain);

  if (fast.has_value() != oracle.has_value())
    return fail(std::string("fast says ") + (fast ? "yes" : "no") + ", oracle says " +
                  (oracle ? "yes" : "no"),
                data);
  if (oracle) {
    if (!validate_chain(oracle->chain, sx, g.whole(), ctx.sigma()))
      return fail("oracle chain does not validate", data);
    if (oracle->defect != ctx.sigma_defect(x))
      return fail("oracle chain length differs from the lattice defect", data);
  }
  if (auto d = g.subnormal_defect(x)) {
    if (!oracle)
      return fail("subnormal but not sigma-subnormal", data);
    if (oracle->defect > *d)
      return fail("sigma-defect exceeds subnormal defect", data);
  }
  return pass();
}

Outcome check_sublattice(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex h = c.subjects[0], k = c.subjects[1];
  if (!ctx.is_sigma_subnormal(g.join(h, k)))
    return fail("join is not sigma-subnormal");
  if (!ctx.is_sigma_subnormal(g.meet(h, k)))
    return fail("intersection is not sigma-subnormal");
  return pass();
}

Outcome check_residual_product(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex h = c.subjects[0], k = c.subjects[1];
  NodeIndex j = g.join(h, k);
  Subgroup const &H = g.node(h), &K = g.node(k), &J = g.node(j);
  Subgroup const &Hs = g.node(ctx.sigma_residual(h));
  Subgroup const &Ks = g.node(ctx.sigma_residual(k));
  Subgroup const &Js = g.node(ctx.sigma_residual(j));

  if (!same_set(product_set(Hs, Ks), Js))
    return fail("<H,K>^sigma differs from H^sigma K^sigma");
  if (product_set(Hs, K) != product_set(K, Hs))
    return fail("H^sigma K differs from K H^sigma");
  if (product_set(Ks, H) != product_set(H, Ks))
    return fail("K^sigma H differs from H K^sigma");

  bool hk = permutes(H, K);
  bool spans = same_set(product_set(product_set(H, K), Js), J);
  if (hk != spans)
    return fail(std::string("HK = KH is ") + (hk ? "true" : "false") +
                " but J = HKJ^sigma is " + (spans ? "true" : "false"));
  return pass();
}

Outcome check_soluble_permute(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex h = c.subjects[0], k = c.subjects[1];
  NodeIndex hs = ctx.sigma_residual(h), ks = ctx.sigma_residual(k);
  if (!permutes(g.node(hs), g.node(k)))
    return fail("H^sigma does not permute with K");
  if (!permutes(g.node(ks), g.node(h)))
    return fail("K^sigma does not permute with H");
  if (!permutes(g.node(hs), g.node(ks)))
    return fail("H^sigma does not permute with K^sigma");
  return pass();
}

Outcome check_triple(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex a = c.subjects[0], b = c.subjects[1], d = c.subjects[2];
  NodeIndex j = g.join(g.join(a, b), d);
  ElementSet prod = product_set(product_set(g.node(ctx.sigma_residual(a)),
                                            g.node(ctx.sigma_residual(b))),
                                g.node(ctx.sigma_residual(d)));
  if (!same_set(prod, g.node(ctx.sigma_residual(j))))
    return fail("J^sigma differs from H1^sigma H2^sigma H3^sigma");
  return pass();
}

Outcome check_tau_join(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex h = c.subjects[0], k = c.subjects[1];
  NodeIndex top = ctx.tau_residual(g.top(), c.param);
  NodeIndex joined = g.join(ctx.tau_residual(h, c.param), ctx.tau_residual(k, c.param));
  if (top != joined)
    return fail("G^tau differs from <H^tau, K^tau> for tau = " + check_tau_name(ctx, c.param));
  return pass();
}

Outcome check_tau_product(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex h = c.subjects[0], k = c.subjects[1];
  ElementSet prod = product_set(g.node(ctx.tau_residual(h, c.param)),
                                g.node(ctx.tau_residual(k, c.param)));
  if (!same_set(prod, g.node(ctx.tau_residual(g.top(), c.param))))
    return finding("G^tau differs from H^tau K^tau for tau = " +
                   check_tau_name(ctx, c.param));
  return pass();
}

Outcome check_permutizer(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex h = c.subjects[0], k = c.subjects[1];
  std::vector<Subgroup> subs;
  for (NodeIndex i : g.below(h))
    subs.push_back(g.node(i));

  auto result = permutizer(g.node(h), g.node(k), subs);
  if (!result.has_unique_maximum()) {
    json members = json::array();
    for (auto const &m : result.subgroups())
      members.push_back(g.describe(g.index_of(m)));
    return finding("no unique maximal subgroup of H permutes with K",
                   {{"maximal", members}});
  }
  NodeIndex p = g.index_of(result.maximum());
  if (!ctx.is_sigma_subnormal(p))
    return fail("P_H(K) is not sigma-subnormal", {{"permutizer", g.describe(p)}});
  return pass();
}

Outcome check_maximal_member(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex s = c.subjects[0];
  Nodes members;
  for (NodeIndex i : g.below(s)) {
    if (ctx.is_sigma_subnormal(i))
      members.push_back(i);
  }
  for (NodeIndex h : members) {
    bool maximal = std::none_of(members.begin(), members.end(), [&](NodeIndex m) {
      return m != h && g.lattice().contains(m, h);
    });
    if (maximal && !g.node(h).is_normal_in(g.node(s)))
      return fail("maximal sigma-subnormal member is not normal in S",
                  {{"member", g.describe(h)}});
  }
  return pass();
}

Outcome check_sigma_normal_join(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex h = c.subjects[0], k = c.subjects[1];
  NodeIndex j = g.join(h, k);
  if (is_sigma_normal(g.node(h), g.node(j), ctx.sigma()) && !ctx.is_sigma_subnormal(j))
    return fail("H is sigma-normal in J but J is not sigma-subnormal");
  return pass();
}

Outcome check_residual_subnormal(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  if (c.subjects.size() == 1) {
    NodeIndex h = c.subjects[0];
    if (!g.subnormal_defect(ctx.sigma_residual(h)))
      return fail("H^sigma is not subnormal in G");
    if (!residual_subnormality_check(g.node(h), g.whole(), ctx.sigma()))
      return fail("residual_subnormality_check rejected H");
    return pass();
  }
  NodeIndex j = g.join(c.subjects[0], c.subjects[1]);
  if (!g.subnormal_defect(ctx.sigma_residual(j)))
    return fail("<H,K>^sigma is not subnormal in G");
  return pass();
}

Outcome check_orthogonal_join(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex h = c.subjects[0], k = c.subjects[1];
  if (is_orthogonal(g.node(h), g.node(k)) && !ctx.is_sigma_subnormal(g.join(h, k)))
    return fail("orthogonal pair with a join that is not sigma-subnormal");
  return pass();
}

NodeIndex contained_candidate(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex j = g.join(c.subjects[0], c.subjects[1]);
  return g.join(c.subjects[2], ctx.sigma_residual(j));
}

Outcome check_contained(PartitionContext const &ctx, Case const &c)
{
  NodeIndex x = contained_candidate(ctx, c);
  if (!ctx.is_sigma_subnormal(x))
    return fail("<F>J^sigma is not sigma-subnormal in G",
                {{"candidate", ctx.group().describe(x)}});
  return pass();
}

Outcome check_contained_literal(PartitionContext const &ctx, Case const &c)
{
  NodeIndex x = contained_candidate(ctx, c);
  if (!ctx.group().subnormal_defect(x))
    return finding("<F>J^sigma is not subnormal in G",
                   {{"candidate", ctx.group().describe(x)}});
  return pass();
}

Outcome check_soluble_residuals(PartitionContext const &ctx, Case const &c)
{
  auto const &g = ctx.group();
  NodeIndex h = c.subjects[0], k = c.subjects[1];
  NodeIndex j = g.join(h, k);
  Subgroup const &R = g.node(ctx.soluble_residual(h));
  Subgroup const &S = g.node(ctx.soluble_residual(k));
  Subgroup const &T = g.node(ctx.soluble_residual(j));
  Subgroup const &J = g.node(j);

  if (!(derived_subgroup(R) == R) || !(derived_subgroup(S) == S))
    return fail("sigma-soluble residual of H or K is not perfect");
  if (!is_subnormal(R, J) || !is_subnormal(S, J))
    return fail("sigma-soluble residual of H or K is not subnormal in J");
  if (!same_set(product_set(R, S), T))
    return fail("T differs from the product RS");
  return pass();
}

struct SuiteDef
{
  std::string id;
  std::vector<Case> (*cases)(PartitionContext const &);
  Outcome (*check)(PartitionContext const &, Case const &);
};

std::vector<Case> every_node(PartitionContext const &ctx)
{
  std::vector<Case> cases;
  for (NodeIndex i = 0; i < ctx.group().size(); ++i)
    cases.push_back({{i}});
  return cases;
}

std::vector<Case> sn_triples(PartitionContext const &ctx)
{
  auto sn = ctx.sigma_subnormal_nodes();
  std::vector<Case> cases;
  for (std::size_t a = 0; a < sn.size(); ++a) {
    for (std::size_t b = a; b < sn.size(); ++b) {
      for (std::size_t d = b; d < sn.size(); ++d)
        cases.push_back({{sn[a], sn[b], sn[d]}});
    }
  }
  return cases;
}

std::vector<Case> tau_product_cases(PartitionContext const &ctx)
{
  // One case per distinct (mask, H^tau, K^tau). The empty mask only asks
  // whether HK = G.
  std::set<std::tuple<unsigned, NodeIndex, NodeIndex>> seen;
  std::vector<Case> cases;
  for (auto const &c : generating_pairs_by_mask(ctx)) {
    if (c.param == 0)
      continue;
    auto key = std::make_tuple(c.param, ctx.tau_residual(c.subjects[0], c.param),
                               ctx.tau_residual(c.subjects[1], c.param));
    if (seen.insert(key).second)
      cases.push_back(c);
  }
  return cases;
}

std::vector<Case> singles_and_pairs(PartitionContext const &ctx)
{
  std::vector<Case> cases;
  for (NodeIndex i : ctx.sigma_subnormal_nodes())
    cases.push_back({{i}});
  auto pairs = sn_pairs(ctx);
  cases.insert(cases.end(), pairs.begin(), pairs.end());
  return cases;
}

std::vector<Case> contained_literal_cases(PartitionContext const &ctx)
{
  std::set<NodeIndex> seen;
  std::vector<Case> cases;
  for (auto const &c : join_cyclic_cases(ctx)) {
    if (seen.insert(contained_candidate(ctx, c)).second)
      cases.push_back(c);
  }
  return cases;
}

std::vector<SuiteDef> const &suite_table()
{
  static std::vector<SuiteDef> const table = {
    {"S0", every_node, check_oracle},
    {"S1", sn_pairs, check_sublattice},
    {"S2", sn_pairs, check_residual_product},
    {"S3", sn_pairs, check_soluble_permute},
    {"S4", sn_triples, check_triple},
    {"S5", generating_pairs_by_mask, check_tau_join},
    {"S5b", tau_product_cases, check_tau_product},
    {"S6", sn_ordered_pairs, check_permutizer},
    {"S7", every_node, check_maximal_member},
    {"S8", sn_ordered_pairs, check_sigma_normal_join},
    {"S9", singles_and_pairs, check_residual_subnormal},
    {"S10", sn_pairs, check_orthogonal_join},
    {"S11", join_cyclic_cases, check_contained},
    {"S11b", contained_literal_cases, check_contained_literal},
    {"S12", sn_pairs, check_soluble_residuals},
  };
  return table;
}

SuiteDef const &suite_def(std::string const &id)
{
  for (auto const &s : suite_table()) {
    if (s.id == id)
      return s;
  }
  throw PreconditionError("unknown suite '" + id + "'");
}

// Reason a suite does not apply to this (group, partition), or empty.
std::string skip_reason(std::string const &suite, PartitionContext const &ctx)
{
  if (suite == "S3" && !ctx.group_is_sigma_soluble())
    return "group is not sigma-soluble";
  return {};
}

json group_json(GroupDefinition const &def)
{
  json gens = json::array();
  for (auto const &p : def.generators)
    gens.push_back(p.to_string());
  return {{"degree", def.degree}, {"gens", gens}};
}

json partition_json(SigmaPartition const &sigma)
{
  json blocks = json::array();
  for (auto const &b : sigma.blocks())
    blocks.push_back(std::vector<unsigned>(b.begin(), b.end()));
  return blocks;
}

} // namespace

std::vector<std::string> const &all_suites()
{
  static std::vector<std::string> const ids = [] {
    std::vector<std::string> v;
    for (auto const &s : suite_table())
      v.push_back(s.id);
    return v;
  }();
  return ids;
}

bool is_suite(std::string_view id)
{
  auto const &ids = all_suites();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<Case> suite_cases(std::string const &suite, PartitionContext const &ctx)
{
  return suite_def(suite).cases(ctx);
}

Outcome run_check(std::string const &suite, PartitionContext const &ctx, Case const &c)
{
  auto const &def = suite_def(suite);
  try {
    return def.check(ctx, c);
  } catch (Error const &e) {
    return {Status::Fail, std::string("check raised: ") + e.what(), {}};
  }
}

json replay_witness(PartitionContext const &ctx, Case const &c)
{
  return {{"group", group_json(ctx.group().definition())},
          {"partition", partition_json(ctx.sigma())},
          {"param", c.param}};
}

std::vector<Verdict> run_suite(std::string const &suite, PartitionContext const &ctx,
                               bool record_timing)
{
  auto const start = std::chrono::steady_clock::now();
  auto const &def = suite_def(suite);

  Verdict base;
  base.suite = suite;
  base.group = ctx.group().name();
  base.partition = ctx.name();

  std::vector<Verdict> verdicts;
  if (auto reason = skip_reason(suite, ctx); !reason.empty()) {
    Verdict v = base;
    v.status = Status::Skipped;
    v.witness = {{"reason", reason}};
    verdicts.push_back(std::move(v));
    return verdicts;
  }

  std::size_t passed = 0;
  bool any_fail = false;
  for (auto const &c : def.cases(ctx)) {
    Outcome out = run_check(suite, ctx, c);
    if (out.status == Status::Pass) {
      ++passed;
      continue;
    }
    any_fail = any_fail || out.status == Status::Fail;

    Verdict v = base;
    v.status = out.status;
    for (NodeIndex i : c.subjects)
      v.subjects.push_back(ctx.group().describe(i));
    v.witness = replay_witness(ctx, c);
    v.witness["detail"] = out.detail;
    for (auto const &[key, value] : out.data.items())
      v.witness[key] = value;
    verdicts.push_back(std::move(v));
  }

  if (!any_fail) {
    Verdict v = base;
    v.status = Status::Pass;
    v.witness = {{"checks", passed}};
    if (record_timing)
      v.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

Outcome replay(Verdict const &v, std::size_t order_cap, std::size_t lattice_cap)
{
  json const &w = v.witness;
  if (!w.contains("group") || !w.contains("partition"))
    throw ParseError("verdict witness lacks group or partition data");

  GroupDefinition def;
  def.degree = w.at("group").at("degree").get<std::size_t>();
  for (auto const &g : w.at("group").at("gens"))
    def.generators.push_back(parse_permutation(g.get<std::string>(), def.degree));

  std::vector<PrimeSet> blocks;
  for (auto const &b : w.at("partition"))
    blocks.push_back(b.get<PrimeSet>());

  GroupPtr group = group_from_generators(def.degree, def.generators, order_cap);
  GroupContext gctx(v.group, def, group, lattice_cap);
  PartitionContext pctx(gctx, v.partition, SigmaPartition(std::move(blocks)));

  Case c;
  c.param = w.value("param", 0u);
  for (auto const &s : v.subjects)
    c.subjects.push_back(gctx.parse_subject(s));
  return run_check(v.suite, pctx, c);
}

} // namespace ssn::harness
