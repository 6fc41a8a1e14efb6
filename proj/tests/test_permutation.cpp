#include <doctest.h>

#include "ssn/error.hpp"
#include "ssn/permutation.hpp"

using ssn::Permutation;
using ssn::Point;

TEST_CASE("parse cycle notation")
{
  CHECK(ssn::parse_permutation("(1 2 3)", 3).images()[0] == 1);
  CHECK(ssn::parse_permutation("(1 2 3)", 3) == Permutation(std::vector<Point>{1, 2, 0}));
  CHECK(ssn::parse_permutation("()", 4) == Permutation(4));
  CHECK(ssn::parse_permutation("(1 2)(3 4)", 4) == Permutation(std::vector<Point>{1, 0, 3, 2}));
  CHECK(ssn::parse_permutation("  ( 1 , 3 )  ", 3) == Permutation(std::vector<Point>{2, 1, 0}));
  CHECK(ssn::parse_permutation("(2)", 3).is_identity());
}

TEST_CASE("parse errors")
{
  CHECK_THROWS_AS(ssn::parse_permutation("(1 4)", 3), ssn::ParseError);
  CHECK_THROWS_AS(ssn::parse_permutation("(0 1)", 3), ssn::ParseError);
  CHECK_THROWS_AS(ssn::parse_permutation("(1 2)(2 3)", 3), ssn::ParseError);
  CHECK_THROWS_AS(ssn::parse_permutation("(1 2", 3), ssn::ParseError);
  CHECK_THROWS_AS(ssn::parse_permutation("1 2)", 3), ssn::ParseError);
  CHECK_THROWS_AS(ssn::parse_permutation("((1 2))", 3), ssn::ParseError);
  CHECK_THROWS_AS(ssn::parse_permutation("(1 x)", 3), ssn::ParseError);
  CHECK_THROWS_AS(ssn::parse_permutation("", 3), ssn::ParseError);
}

TEST_CASE("format round trip")
{
  for (std::string text : {"()", "(1 2)", "(1 2 3)(4 5)", "(1 5 2)(3 6)"}) {
    auto p = ssn::parse_permutation(text, 6);
    CHECK(p.to_string() == text);
    CHECK(ssn::parse_permutation(p.to_string(), 6) == p);
  }
}

TEST_CASE("products apply the left factor first")
{
  auto a = ssn::parse_permutation("(1 2)", 3);
  auto b = ssn::parse_permutation("(2 3)", 3);
  // 1 -> 2 under a, then 2 -> 3 under b
  CHECK((a * b)[0] == 2);
  CHECK((a * b) == ssn::parse_permutation("(1 3 2)", 3));
  CHECK((a * a).is_identity());
  CHECK(ssn::parse_permutation("(1 2 3)(4 5)", 5).order() == 6);
  auto c = ssn::parse_permutation("(1 4 2 5)", 5);
  CHECK((c * c.inverse()).is_identity());
}

TEST_CASE("permutation lists")
{
  auto list = ssn::parse_permutation_list("(1 2); (1 2 3)", 3);
  REQUIRE(list.size() == 2);
  CHECK(ssn::format_permutation_list(list) == "(1 2); (1 2 3)");
  CHECK(ssn::parse_permutation_list("(1 2), (1 2 3)", 3) == list);
  CHECK(ssn::parse_permutation_list("(1,2), (1 2 3)", 3) == list);
  CHECK(ssn::parse_permutation_list("  ", 3).empty());
}

TEST_CASE("constructor rejects non-bijections")
{
  CHECK_THROWS(Permutation(std::vector<Point>{0, 0}));
  CHECK_THROWS(Permutation(std::vector<Point>{0, 2}));
}
