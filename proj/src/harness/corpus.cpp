#include "ssn/harness/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "ssn/error.hpp"
#include "ssn/harness/io.hpp"

namespace ssn::harness
{

namespace
{

// Runs fn(0) ... fn(n - 1) on `jobs` threads.
template<typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn fn)
{
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++)
      fn(i);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> threads;
  for (std::size_t t = 0; t < jobs; ++t)
    threads.emplace_back(worker);
}

std::vector<Verdict> skipped_all(CorpusSpec const &spec, std::string const &group,
                                 std::string const &partition, std::string const &reason)
{
  std::vector<Verdict> out;
  for (auto const &suite : spec.suites) {
    Verdict v;
    v.suite = suite;
    v.group = group;
    v.partition = partition;
    v.status = Status::Skipped;
    v.witness = {{"reason", reason}};
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

void CorpusSpec::validate() const
{
  std::set<std::string> names;
  for (auto const &g : groups) {
    if (!names.insert(g.name).second)
      throw PreconditionError("duplicate group name '" + g.name + "'");
  }
  names.clear();
  for (auto const &p : partitions) {
    if (!names.insert(p.name).second)
      throw PreconditionError("duplicate partition name '" + p.name + "'");
  }
  if (order_cap == 0 || lattice_cap == 0)
    throw PreconditionError("caps must be positive");
  for (auto const &s : suites) {
    if (!is_suite(s))
      throw PreconditionError("unknown suite '" + s + "'");
  }
}

std::vector<CorpusGroup> default_groups()
{
  std::vector<std::string> const specs = {
    "cyclic(1)",
    "cyclic(2)",
    "cyclic(3)",
    "cyclic(4)",
    "cyclic(5)",
    "cyclic(6)",
    "dihedral(3)",
    "dihedral(4)",
    "dihedral(5)",
    "dihedral(6)",
    "symmetric(3)",
    "symmetric(4)",
    "alternating(4)",
    "wreath_cyclic(2, 3)",
    "wreath_cyclic(3, 2)",
    "direct_product(cyclic(2), cyclic(2))",
    "direct_product(cyclic(2), cyclic(2), cyclic(2))",
    "direct_product(cyclic(3), cyclic(3))",
    "direct_product(cyclic(4), cyclic(2))",
    "direct_product(symmetric(3), cyclic(2))",
    "direct_product(symmetric(3), cyclic(3))",
    "direct_product(dihedral(4), cyclic(2))",
    "direct_product(dihedral(4), cyclic(3))",
    "direct_product(alternating(4), cyclic(2))",
    "direct_product(symmetric(3), symmetric(3))",
    "direct_product(symmetric(4), cyclic(2))",
    "alternating(5)",
    "direct_product(symmetric(4), cyclic(5))",
  };
  std::vector<CorpusGroup> groups;
  for (auto const &s : specs)
    groups.push_back({s, s, false});
  return groups;
}

std::vector<CorpusPartition> default_partitions()
{
  std::vector<SigmaPartition> const parts = {
    SigmaPartition({{2}, {3}}),
    SigmaPartition({{2, 3}}),
    SigmaPartition({{2, 5}, {3}}),
    SigmaPartition(),
  };
  std::vector<CorpusPartition> out;
  for (auto const &p : parts)
    out.push_back({p.to_string(), p});
  return out;
}

CorpusSpec default_corpus()
{
  CorpusSpec spec;
  spec.groups = default_groups();
  spec.partitions = default_partitions();
  return spec;
}

CorpusSpec corpus_from_directory(std::filesystem::path const &dir)
{
  if (!std::filesystem::is_directory(dir))
    throw Error("not a directory: " + dir.string());

  CorpusSpec spec;
  for (auto const &entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file())
      continue;
    auto const &path = entry.path();
    if (path.extension() == ".grp")
      spec.groups.push_back({path.stem().string(), path.string(), true});
    else if (path.extension() == ".sig")
      spec.partitions.push_back({path.stem().string(), load_partition(path)});
  }
  std::sort(spec.groups.begin(), spec.groups.end(),
            [](auto const &a, auto const &b) { return a.name < b.name; });
  std::sort(spec.partitions.begin(), spec.partitions.end(),
            [](auto const &a, auto const &b) { return a.name < b.name; });
  if (spec.partitions.empty())
    spec.partitions = default_partitions();
  return spec;
}

std::size_t Report::count(Status s) const
{
  auto it = counts.find(s);
  return it == counts.end() ? 0 : it->second;
}

Report run_corpus(CorpusSpec const &spec)
{
  spec.validate();

  std::size_t const ng = spec.groups.size();
  std::size_t const np = spec.partitions.size();

  std::vector<std::unique_ptr<GroupContext>> contexts(ng);
  std::vector<std::vector<Verdict>> group_skips(ng);
  parallel_for(ng, spec.jobs, [&](std::size_t i) {
    auto const &entry = spec.groups[i];
    try {
      GroupDefinition def = entry.from_file ? load_group_definition(entry.source)
                                            : family_definition(entry.source);
      GroupPtr group = group_from_generators(def.degree, def.generators, spec.order_cap);
      contexts[i] = std::make_unique<GroupContext>(entry.name, std::move(def), group,
                                                   spec.lattice_cap);
    } catch (CapExceeded const &e) {
      group_skips[i] = skipped_all(spec, entry.name, "*", e.what());
    }
  });

  std::vector<std::vector<Verdict>> results(ng * np);
  parallel_for(ng * np, spec.jobs, [&](std::size_t t) {
    std::size_t gi = t / np, pi = t % np;
    if (!contexts[gi])
      return;
    auto const &part = spec.partitions[pi];
    try {
      PartitionContext ctx(*contexts[gi], part.name, part.sigma);
      for (auto const &suite : spec.suites) {
        auto vs = run_suite(suite, ctx, spec.record_timing);
        results[t].insert(results[t].end(), vs.begin(), vs.end());
      }
    } catch (CapExceeded const &e) {
      results[t] = skipped_all(spec, contexts[gi]->name(), part.name, e.what());
    }
  });

  Report report;
  for (auto &v : group_skips)
    std::move(v.begin(), v.end(), std::back_inserter(report.verdicts));
  for (auto &v : results)
    std::move(v.begin(), v.end(), std::back_inserter(report.verdicts));
  std::stable_sort(report.verdicts.begin(), report.verdicts.end(), verdict_less);
  for (auto const &v : report.verdicts)
    ++report.counts[v.status];
  return report;
}

void write_jsonl(std::ostream &out, Report const &report)
{
  for (auto const &v : report.verdicts)
    out << to_json(v).dump() << '\n';
}

std::vector<Verdict> read_jsonl(std::istream &in)
{
  std::vector<Verdict> verdicts;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty())
      continue;
    try {
      verdicts.push_back(verdict_from_json(nlohmann::json::parse(line)));
    } catch (nlohmann::json::exception const &e) {
      throw ParseError(e.what(), number);
    }
  }
  return verdicts;
}

std::string format_summary(Report const &report)
{
  std::ostringstream out;
  out << "verdicts: " << report.verdicts.size();
  for (Status s : {Status::Pass, Status::Fail, Status::Finding, Status::Skipped})
    out << "  " << to_string(s) << ": " << report.count(s);
  out << '\n';

  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
  for (auto const &v : report.verdicts) {
    if (v.status == Status::Fail)
      ++per_suite[v.suite].first;
    else if (v.status == Status::Finding)
      ++per_suite[v.suite].second;
  }
  for (auto const &[suite, c] : per_suite)
    out << "  " << suite << ": " << c.first << " fail, " << c.second << " finding\n";
  return out.str();
}

} // namespace ssn::harness
