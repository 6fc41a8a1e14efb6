#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ssn/error.hpp"
#include "ssn/harness/corpus.hpp"
#include "ssn/harness/io.hpp"
#include "ssn/joins.hpp"
#include "ssn/residuals.hpp"
#include "ssn/subnormality.hpp"

using namespace ssn;
using namespace ssn::harness;

namespace
{

struct Inputs
{
  std::string group_file;
  std::string family;
  std::string partition_file;
  std::string blocks;
  std::string subgroup;
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t lattice_cap = kDefaultLatticeCap;

  void add_group_options(CLI::App *cmd)
  {
    auto *g = cmd->add_option("--group", group_file, "group file (.grp)");
    auto *f = cmd->add_option("--family", family, "builtin family, e.g. symmetric(4)");
    g->excludes(f);
    cmd->add_option("--order-cap", order_cap, "group order cap");
    cmd->add_option("--lattice-cap", lattice_cap, "subgroup lattice cap");
  }

  void add_partition_options(CLI::App *cmd)
  {
    auto *p = cmd->add_option("--partition", partition_file, "partition file (.sig)");
    auto *b = cmd->add_option("--blocks", blocks, "inline partition, e.g. \"2; 3\"");
    p->excludes(b);
  }

  GroupPtr group() const
  {
    if (!group_file.empty())
      return load_group(group_file, order_cap);
    if (!family.empty())
      return builtin_family(family, order_cap);
    throw CLI::ValidationError("--group or --family is required");
  }

  SigmaPartition sigma() const
  {
    if (!partition_file.empty())
      return load_partition(partition_file);
    std::string text;
    std::istringstream in(blocks);
    std::string block;
    while (std::getline(in, block, ';')) {
      if (block.find_first_not_of(" \t") != std::string::npos)
        text += "block: " + block + "\n";
    }
    return parse_partition_text(text);
  }

  Subgroup parse_subgroup(GroupPtr const &g, std::string const &text) const
  {
    return subgroup_from_permutations(g, parse_permutation_list(text, g->degree()));
  }
};

std::string describe(Subgroup const &s)
{
  auto gens = s.generator_permutations();
  std::string text = "<" + (gens.empty() ? std::string("()") : format_permutation_list(gens)) +
                     ">, order " + std::to_string(s.order());
  return text;
}

void print_chain(SigmaChain const &chain)
{
  for (std::size_t i = 0; i < chain.terms.size(); ++i) {
    std::cout << "  " << describe(chain.terms[i]) << '\n';
    if (i < chain.steps.size())
      std::cout << "    " << chain.steps[i].to_string() << '\n';
  }
}

PrimeSet parse_primes(std::string const &text)
{
  PrimeSet pi;
  std::istringstream in(text);
  unsigned p;
  while (in >> p) {
    if (!is_prime(p))
      throw ParseError(std::to_string(p) + " is not prime");
    pi.insert(p);
    if (in.peek() == ',')
      in.get();
  }
  return pi;
}

std::vector<BlockId> parse_blocks(std::string const &text, SigmaPartition const &sigma)
{
  std::vector<BlockId> tau;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos)
      continue;
    auto last = token.find_last_not_of(" \t");
    BlockId b = BlockId::parse(token.substr(first, last - first + 1));
    if (!sigma.is_valid(b))
      throw ParseError("unknown block '" + token + "'");
    tau.push_back(b);
  }
  return tau;
}

std::vector<std::string> split_list(std::string const &text)
{
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    auto first = token.find_first_not_of(" \t");
    if (first != std::string::npos)
      out.push_back(token.substr(first, token.find_last_not_of(" \t") - first + 1));
  }
  return out;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"sigma-subnormality toolkit"};
  app.require_subcommand(1);

  Inputs in;

  auto *check = app.add_subcommand("check", "decide sigma-subnormality of a subgroup");
  in.add_group_options(check);
  in.add_partition_options(check);
  check->add_option("--subgroup", in.subgroup, "generators, e.g. \"(1 2); (3 4)\"")->required();

  auto *defect = app.add_subcommand("defect", "subnormal and sigma-defect of a subgroup");
  in.add_group_options(defect);
  in.add_partition_options(defect);
  defect->add_option("--subgroup", in.subgroup, "generators")->required();

  std::string kind = "sigma", pi_text, tau_text;
  bool no_oracle = false;
  auto *residual = app.add_subcommand("residual", "pi, sigma, tau or sigma-soluble residual");
  in.add_group_options(residual);
  in.add_partition_options(residual);
  residual->add_option("--subgroup", in.subgroup, "generators (default: whole group)");
  residual->add_option("--kind", kind, "pi|sigma|tau|soluble")
    ->check(CLI::IsMember({"pi", "sigma", "tau", "soluble"}));
  residual->add_option("--pi", pi_text, "primes for --kind pi, e.g. \"2 3\"");
  residual->add_option("--tau", tau_text, "blocks for --kind tau, e.g. \"0,rest\"");
  residual->add_flag("--no-oracle", no_oracle, "skip the independent cross-check");

  std::string other;
  auto *perm = app.add_subcommand("permutizer", "largest subgroup of H permuting with K");
  in.add_group_options(perm);
  perm->add_option("--subgroup", in.subgroup, "generators of H")->required();
  perm->add_option("--other", other, "generators of K")->required();

  std::string out_path;
  auto *make = app.add_subcommand("make", "write a builtin family to a .grp file");
  make->add_option("--family", in.family, "family spec")->required();
  make->add_option("--out", out_path, "output file")->required();

  std::string corpus_dir, suites_text;
  bool use_default = false, no_timing = false;
  std::size_t jobs = 1;
  auto *verify = app.add_subcommand("verify", "run theorem suites over a corpus");
  auto *dir_opt = verify->add_option("--corpus", corpus_dir, "directory of .grp/.sig files");
  auto *def_opt = verify->add_flag("--default", use_default, "bundled default corpus");
  dir_opt->excludes(def_opt);
  verify->add_option("--suites", suites_text, "comma-separated suite ids (default: all)");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "JSONL report");
  verify->add_flag("--no-timing", no_timing, "write elapsed_ms as 0");
  verify->add_option("--order-cap", in.order_cap, "group order cap");
  verify->add_option("--lattice-cap", in.lattice_cap, "subgroup lattice cap");

  std::string report_path;
  auto *replay_cmd = app.add_subcommand("replay", "rerun the Fail/Finding verdicts of a report");
  replay_cmd->add_option("--report", report_path, "JSONL report")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      GroupPtr g = in.group();
      Subgroup x = in.parse_subgroup(g, in.subgroup);
      SigmaPartition sigma = in.sigma();
      std::cout << "group order " << g->order() << ", partition " << sigma.to_string() << '\n';
      std::cout << "subgroup " << describe(x) << '\n';
      auto chain = sigma_subnormal_fast(x, Subgroup::whole(g), sigma);
      std::cout << "sigma-subnormal: " << (chain ? "yes" : "no") << '\n';
      if (chain) {
        std::cout << "chain:\n";
        print_chain(*chain);
      }
      return 0;
    }

    if (*defect) {
      GroupPtr g = in.group();
      Subgroup x = in.parse_subgroup(g, in.subgroup);
      SigmaPartition sigma = in.sigma();
      Subgroup whole = Subgroup::whole(g);
      auto d = is_subnormal(x, whole);
      std::cout << "subnormal defect: " << (d ? std::to_string(*d) : "none") << '\n';
      auto oracle = sigma_subnormal_oracle(x, whole, sigma, in.lattice_cap);
      std::cout << "sigma-defect: " << (oracle ? std::to_string(oracle->defect) : "none")
                << '\n';
      if (oracle) {
        std::cout << "shortest chain:\n";
        print_chain(oracle->chain);
      }
      return 0;
    }

    if (*residual) {
      GroupPtr g = in.group();
      Subgroup x = in.subgroup.empty() ? Subgroup::whole(g) : in.parse_subgroup(g, in.subgroup);
      SigmaPartition sigma = in.sigma();
      ResidualKind k = kind == "pi"    ? ResidualKind::Pi
                       : kind == "tau" ? ResidualKind::Tau
                       : kind == "soluble" ? ResidualKind::SigmaSoluble
                                           : ResidualKind::Sigma;
      auto report = residual_report(x, sigma, k, parse_primes(pi_text),
                                    parse_blocks(tau_text, sigma), !no_oracle);
      std::cout << to_string(k) << " residual of " << describe(x) << ":\n  "
                << describe(report.result) << '\n';
      if (report.oracle_result)
        std::cout << "oracle: " << (report.agrees() ? "agrees" : "DISAGREES") << '\n';
      return report.agrees() ? 0 : 1;
    }

    if (*perm) {
      GroupPtr g = in.group();
      Subgroup h = in.parse_subgroup(g, in.subgroup);
      Subgroup k = in.parse_subgroup(g, other);
      auto result = permutizer(h, k, in.lattice_cap);
      if (result.has_unique_maximum()) {
        std::cout << "P_H(K) = " << describe(result.maximum()) << '\n';
      } else {
        std::cout << "no unique maximum; maximal permuting subgroups:\n";
        for (auto const &s : result.subgroups())
          std::cout << "  " << describe(s) << '\n';
      }
      return 0;
    }

    if (*make) {
      GroupDefinition def = family_definition(in.family);
      group_from_generators(def.degree, def.generators, in.order_cap);
      save_group(out_path, def);
      return 0;
    }

    if (*verify) {
      if (corpus_dir.empty() && !use_default)
        throw CLI::ValidationError("--corpus or --default is required");
      CorpusSpec spec = use_default ? default_corpus() : corpus_from_directory(corpus_dir);
      if (!suites_text.empty())
        spec.suites = split_list(suites_text);
      spec.jobs = jobs;
      spec.record_timing = !no_timing;
      spec.order_cap = in.order_cap;
      spec.lattice_cap = in.lattice_cap;

      Report report = run_corpus(spec);
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
          throw Error("cannot write " + out_path);
        write_jsonl(out, report);
      } else {
        write_jsonl(std::cout, report);
      }
      std::cerr << format_summary(report);
      return report.exit_code();
    }

    if (*replay_cmd) {
      std::ifstream file(report_path);
      if (!file)
        throw Error("cannot read " + report_path);
      std::size_t replayed = 0, mismatched = 0;
      for (auto const &v : read_jsonl(file)) {
        if (v.status != Status::Fail && v.status != Status::Finding)
          continue;
        ++replayed;
        Outcome out = replay(v, in.order_cap, in.lattice_cap);
        bool same = out.status == v.status;
        mismatched += !same;
        std::cout << v.suite << ' ' << v.group << ' ' << v.partition << ": "
                  << to_string(v.status) << " -> " << to_string(out.status)
                  << (same ? "" : "  MISMATCH") << '\n';
      }
      std::cout << replayed << " replayed, " << mismatched << " mismatched\n";
      return mismatched ? 1 : 0;
    }
  } catch (CLI::ValidationError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
