#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ssn/error.hpp"
#include "ssn/harness/corpus.hpp"
#include "ssn/harness/io.hpp"
#include "support.hpp"

using namespace ssn;
using namespace ssn::harness;
using test::fam;
using test::part;
using test::sub;

namespace
{

std::filesystem::path scratch_dir(std::string const &name)
{
  auto dir = std::filesystem::temp_directory_path() / ("ssn_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

CorpusSpec small_corpus()
{
  CorpusSpec spec;
  spec.groups = {{"S3", "symmetric(3)", false},
                 {"S4", "symmetric(4)", false},
                 {"C2wrC3", "wreath_cyclic(2, 3)", false}};
  spec.partitions = default_partitions();
  spec.record_timing = false;
  return spec;
}

std::string jsonl(Report const &report)
{
  std::ostringstream out;
  write_jsonl(out, report);
  return out.str();
}

bool contains_perm(Subgroup const &x, std::string const &cycles)
{
  auto id = x.parent()->index_of(parse_permutation(cycles, x.parent()->degree()));
  return id && x.contains(*id);
}

bool is_s4(Subgroup const &y) { return y.parent()->degree() == 4 && y.parent()->order() == 24; }

} // namespace

TEST_CASE("family orders")
{
  auto w = fam("wreath_cyclic(2, 3)");
  CHECK(w->order() == 24);
  CHECK(w->degree() == 6);
  CHECK(fam("cyclic(6)")->order() == 6);
  auto c2c3 = fam("direct_product(cyclic(2), cyclic(3))");
  CHECK(c2c3->order() == 6);
  CHECK(derived_subgroup(test::whole(c2c3)).is_trivial());
  CHECK(fam("dihedral(5)")->order() == 10);
  CHECK(fam("alternating(5)")->order() == 60);
  CHECK_THROWS_AS(fam("klein(4)"), Error);
  CHECK_THROWS_AS(fam("dihedral(2)"), Error);
}

TEST_CASE("group and partition files round trip")
{
  auto def = family_definition("wreath_cyclic(3, 2)");
  auto back = parse_group_text(format_group_text(def));
  CHECK(back.degree == def.degree);
  CHECK(back.generators == def.generators);

  auto sigma = part({{2, 5}, {3}});
  CHECK(parse_partition_text(format_partition_text(sigma)) == sigma);

  auto dir = scratch_dir("io");
  save_group(dir / "w.grp", def);
  CHECK(load_group(dir / "w.grp")->order() == 18);
  save_partition(dir / "p.sig", sigma);
  CHECK(load_partition(dir / "p.sig") == sigma);
  CHECK_THROWS_AS(load_group(dir / "missing.grp"), Error);
}

TEST_CASE("file format errors")
{
  CHECK_THROWS_AS(parse_partition_text("block: 4\n"), Error);
  CHECK_THROWS_AS(parse_partition_text("block: 2\nblock: 2 3\n"), Error);
  CHECK_THROWS_AS(parse_group_text("gen: (1 2)\n"), Error);
  CHECK_THROWS_AS(parse_group_text("degree: 3\ngen: (1 4)\n"), Error);
  try {
    parse_group_text("# header\ndegree: 3\nbogus line\n");
    FAIL("no error");
  } catch (Error const &e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  auto ok = parse_group_text("# S3\ndegree: 3\ngen: (1 2)\ngen: (1 2 3)\n");
  CHECK(ok.generators.size() == 2);
  CHECK(parse_partition_text("# none\n") == SigmaPartition());
}

TEST_CASE("empty corpus")
{
  CorpusSpec spec;
  auto report = run_corpus(spec);
  CHECK(report.verdicts.empty());
  CHECK(report.exit_code() == 0);

  auto dir = scratch_dir("empty");
  auto from_dir = corpus_from_directory(dir);
  CHECK(from_dir.groups.empty());
  CHECK(run_corpus(from_dir).exit_code() == 0);
}

TEST_CASE("corpus directories")
{
  auto dir = scratch_dir("dir");
  save_group(dir / "b_s3.grp", family_definition("symmetric(3)"));
  save_group(dir / "a_c6.grp", family_definition("cyclic(6)"));
  save_partition(dir / "two.sig", part({{2}}));
  auto spec = corpus_from_directory(dir);
  REQUIRE(spec.groups.size() == 2);
  CHECK(spec.groups[0].name == "a_c6");
  REQUIRE(spec.partitions.size() == 1);
  CHECK(spec.partitions[0].name == "two");
  auto report = run_corpus(spec);
  CHECK(report.exit_code() == 0);
  CHECK(report.count(Status::Pass) > 0);
}

TEST_CASE("cap-violating group is skipped")
{
  auto spec = small_corpus();
  spec.groups.push_back({"S7", "symmetric(7)", false});
  spec.order_cap = 1000;
  auto report = run_corpus(spec);
  CHECK(report.exit_code() == 0);
  std::size_t skipped = 0, others = 0;
  for (auto const &v : report.verdicts) {
    if (v.group == "S7") {
      CHECK(v.status == Status::Skipped);
      ++skipped;
    } else {
      ++others;
    }
  }
  CHECK(skipped == all_suites().size());
  CHECK(others > 0);
}

TEST_CASE("reports are deterministic")
{
  auto one = small_corpus();
  auto four = small_corpus();
  four.jobs = 4;
  auto a = jsonl(run_corpus(one));
  CHECK(a == jsonl(run_corpus(four)));

  std::istringstream in(a);
  auto back = read_jsonl(in);
  Report r;
  r.verdicts = back;
  CHECK(jsonl(r) == a);
}

TEST_CASE("findings replay")
{
  auto report = run_corpus(small_corpus());
  CHECK(report.count(Status::Fail) == 0);
  std::size_t replayed = 0;
  for (auto const &v : report.verdicts) {
    if (v.status != Status::Finding)
      continue;
    auto o = replay(v);
    CHECK(o.status == Status::Finding);
    ++replayed;
  }
  CHECK(replayed > 0);
}

TEST_CASE("specific suites pass")
{
  CorpusSpec spec;
  spec.groups = {{"W", "wreath_cyclic(2, 3)", false}};
  spec.partitions = {{"merged", part({{2, 3}})}};
  spec.suites = {"S2"};
  auto r = run_corpus(spec);
  CHECK(r.count(Status::Pass) == 1);
  CHECK(r.count(Status::Fail) == 0);

  spec.groups = {{"S3", "symmetric(3)", false}};
  spec.partitions = {{"P", SigmaPartition()}};
  spec.suites = {"S7"};
  r = run_corpus(spec);
  CHECK(r.count(Status::Pass) == 1);
  CHECK(r.count(Status::Fail) == 0);
}

TEST_CASE("corpus validation")
{
  auto spec = small_corpus();
  spec.suites = {"S99"};
  CHECK_THROWS_AS(spec.validate(), PreconditionError);
  spec = small_corpus();
  spec.groups.push_back(spec.groups.front());
  CHECK_THROWS_AS(spec.validate(), PreconditionError);
}

TEST_CASE("corrupted sigma-normality is detected")
{
  CorpusSpec spec = default_corpus();
  spec.record_timing = false;

  SUBCASE("sylow subgroup forced sigma-normal")
  {
    auto two_three = part({{2}, {3}});
    testing::set_sigma_normal_override(
      [two_three](Subgroup const &x, Subgroup const &y,
                  SigmaPartition const &sigma) -> std::optional<bool> {
        if (sigma == two_three && is_s4(y) && y.order() == 24 && x.order() == 8 &&
            contains_perm(x, "(1 2 3 4)"))
          return true;
        return std::nullopt;
      });
  }
  SUBCASE("normal subgroup forced non-sigma-normal")
  {
    testing::set_sigma_normal_override(
      [](Subgroup const &x, Subgroup const &y, SigmaPartition const &) -> std::optional<bool> {
        if (is_s4(y) && y.order() == 24 && x.order() == 12)
          return false;
        return std::nullopt;
      });
  }
  auto report = run_corpus(spec);
  testing::clear_sigma_normal_override();
  CHECK(report.count(Status::Fail) >= 1);
  CHECK(report.exit_code() == 1);
}
