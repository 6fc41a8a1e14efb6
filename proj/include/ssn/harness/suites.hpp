#ifndef SSN_HARNESS_SUITES_HPP
#define SSN_HARNESS_SUITES_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ssn/harness/context.hpp"

namespace ssn::harness
{

enum class Status
{
  Pass,
  Fail,
  Skipped,
  Finding,
};

char const *to_string(Status status);
Status parse_status(std::string const &text);

struct Verdict
{
  std::string suite;
  std::string group;
  std::string partition;
  std::vector<std::string> subjects;
  Status status = Status::Pass;
  nlohmann::json witness;
  double elapsed_ms = 0.0;
};

nlohmann::json to_json(Verdict const &v);
Verdict verdict_from_json(nlohmann::json const &j);

// Sort key: (suite, group, partition, subjects).
bool verdict_less(Verdict const &a, Verdict const &b);

// One check of a suite: a tuple of lattice nodes plus an integer parameter
// (the block mask for the tau suites, unused elsewhere).
struct Case
{
  std::vector<NodeIndex> subjects;
  unsigned param = 0;
};

struct Outcome
{
  Status status = Status::Pass;
  std::string detail;
  nlohmann::json data;  // extra witness fields, e.g. a chain
};

// Suite identifiers, in report order.
std::vector<std::string> const &all_suites();
bool is_suite(std::string_view id);

// Every case the suite quantifies over for this (group, partition).
std::vector<Case> suite_cases(std::string const &suite, PartitionContext const &ctx);

// Runs a single case.
Outcome run_check(std::string const &suite, PartitionContext const &ctx, Case const &c);

// Runs every case. Each Fail or Finding becomes its own verdict with a
// replayable witness; if no case failed, one aggregated Pass verdict
// records the number of checks. A suite whose hypothesis does not hold for
// the group yields a single Skipped verdict.
std::vector<Verdict> run_suite(std::string const &suite, PartitionContext const &ctx,
                               bool record_timing = true);

// Witness holding everything needed to rebuild and rerun one case.
nlohmann::json replay_witness(PartitionContext const &ctx, Case const &c);

// Rebuilds group, partition and subjects from a Fail/Finding verdict and
// reruns its check.
Outcome replay(Verdict const &v, std::size_t order_cap = kDefaultOrderCap,
               std::size_t lattice_cap = kDefaultLatticeCap);

} // namespace ssn::harness

#endif // SSN_HARNESS_SUITES_HPP
