#ifndef SSN_HARNESS_CORPUS_HPP
#define SSN_HARNESS_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ssn/harness/suites.hpp"

namespace ssn::harness
{

struct CorpusGroup
{
  std::string name;
  std::string source;    // family spec, or a .grp path when `from_file`
  bool from_file = false;
};

struct CorpusPartition
{
  std::string name;
  SigmaPartition sigma;
};

struct CorpusSpec
{
  std::vector<CorpusGroup> groups;
  std::vector<CorpusPartition> partitions;
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  std::vector<std::string> suites = all_suites();
  std::size_t jobs = 1;
  bool record_timing = true;

  // Throws PreconditionError on duplicate names, zero caps or unknown suites.
  void validate() const;
};

std::vector<CorpusGroup> default_groups();
std::vector<CorpusPartition> default_partitions();
CorpusSpec default_corpus();

// *.grp files become groups and *.sig files partitions, both named by file
// stem and sorted by name. Without any .sig file the default partitions
// are used.
CorpusSpec corpus_from_directory(std::filesystem::path const &dir);

struct Report
{
  std::vector<Verdict> verdicts;  // sorted by verdict_less
  std::map<Status, std::size_t> counts;

  std::size_t count(Status s) const;
  int exit_code() const { return count(Status::Fail) ? 1 : 0; }
};

// Groups that cannot be built within the caps yield Skipped verdicts; every
// other group is processed normally.
Report run_corpus(CorpusSpec const &spec);

void write_jsonl(std::ostream &out, Report const &report);
std::vector<Verdict> read_jsonl(std::istream &in);

// Status counts, then Fail and Finding counts per suite.
std::string format_summary(Report const &report);

} // namespace ssn::harness

#endif // SSN_HARNESS_CORPUS_HPP
