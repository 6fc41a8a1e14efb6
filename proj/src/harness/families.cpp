#include "ssn/harness/families.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ssn/error.hpp"

namespace ssn::harness
{

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Splits "name(a, b(c, d))" into "name" and its top-level arguments.
std::pair<std::string, std::vector<std::string_view>> split_call(std::string_view spec)
{
  spec = trim(spec);
  auto open = spec.find('(');
  if (open == std::string_view::npos || spec.back() != ')')
    throw ParseError("malformed family spec '" + std::string(spec) + "'");

  std::string name(trim(spec.substr(0, open)));
  std::string_view body = spec.substr(open + 1, spec.size() - open - 2);

  std::vector<std::string_view> args;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(')
      ++depth;
    else if (body[i] == ')')
      --depth;
    else if (body[i] == ',' && depth == 0) {
      args.push_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
    if (depth < 0)
      throw ParseError("unbalanced parentheses in '" + std::string(spec) + "'");
  }
  if (depth != 0)
    throw ParseError("unbalanced parentheses in '" + std::string(spec) + "'");
  if (!trim(body).empty())
    args.push_back(trim(body.substr(start)));

  return {name, args};
}

std::size_t parse_count(std::string_view arg, std::string const &family)
{
  if (arg.empty() || !std::all_of(arg.begin(), arg.end(), ::isdigit))
    throw ParseError(family + ": expected a positive integer, got '" + std::string(arg) + "'");
  std::size_t value = std::stoul(std::string(arg));
  if (value == 0 || value > 10000)
    throw ParseError(family + ": parameter out of range: " + std::string(arg));
  return value;
}

Permutation cycle_on(std::size_t degree, std::vector<Point> const &points)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = points[(i + 1) % points.size()];
  return Permutation(std::move(images));
}

std::vector<Point> range(std::size_t from, std::size_t to)
{
  std::vector<Point> points;
  for (std::size_t i = from; i < to; ++i)
    points.push_back(static_cast<Point>(i));
  return points;
}

} // namespace

GroupDefinition family_definition(std::string_view spec)
{
  auto [name, args] = split_call(spec);
  auto expect_args = [&, &name = name, &args = args](std::size_t n) {
    if (args.size() != n)
      throw ParseError(name + " expects " + std::to_string(n) + " argument(s)");
  };

  GroupDefinition def;

  if (name == "cyclic") {
    expect_args(1);
    std::size_t n = parse_count(args[0], name);
    def.degree = n;
    if (n > 1)
      def.generators.push_back(cycle_on(n, range(0, n)));
  } else if (name == "dihedral") {
    expect_args(1);
    std::size_t n = parse_count(args[0], name);
    if (n < 3)
      throw ParseError("dihedral(n) needs n >= 3");
    def.degree = n;
    def.generators.push_back(cycle_on(n, range(0, n)));
    // Reflection fixing point 0: i -> -i mod n.
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i)
      images[i] = static_cast<Point>((n - i) % n);
    def.generators.emplace_back(std::move(images));
  } else if (name == "symmetric") {
    expect_args(1);
    std::size_t n = parse_count(args[0], name);
    def.degree = n;
    if (n > 1) {
      def.generators.push_back(cycle_on(n, {0, 1}));
      if (n > 2)
        def.generators.push_back(cycle_on(n, range(0, n)));
    }
  } else if (name == "alternating") {
    expect_args(1);
    std::size_t n = parse_count(args[0], name);
    def.degree = n;
    for (std::size_t i = 2; i < n; ++i)
      def.generators.push_back(cycle_on(n, {0, 1, static_cast<Point>(i)}));
  } else if (name == "wreath_cyclic") {
    expect_args(2);
    std::size_t p = parse_count(args[0], name);
    std::size_t q = parse_count(args[1], name);
    if (p < 2 || q < 2)
      throw ParseError("wreath_cyclic(p, q) needs p, q >= 2");
    def.degree = p * q;
    def.generators.push_back(cycle_on(def.degree, range(0, p)));
    std::vector<Point> images(def.degree);
    for (std::size_t block = 0; block < q; ++block) {
      for (std::size_t k = 0; k < p; ++k)
        images[block * p + k] = static_cast<Point>(((block + 1) % q) * p + k);
    }
    def.generators.emplace_back(std::move(images));
  } else if (name == "direct_product") {
    if (args.empty())
      throw ParseError("direct_product needs at least one factor");
    std::vector<GroupDefinition> factors;
    std::size_t degree = 0;
    for (auto arg : args) {
      factors.push_back(family_definition(arg));
      degree += factors.back().degree;
    }
    def.degree = degree;
    std::size_t offset = 0;
    for (auto const &factor : factors) {
      for (auto const &gen : factor.generators) {
        std::vector<Point> images(degree);
        std::iota(images.begin(), images.end(), Point{0});
        for (std::size_t i = 0; i < factor.degree; ++i)
          images[offset + i] = static_cast<Point>(offset + gen[static_cast<Point>(i)]);
        def.generators.emplace_back(std::move(images));
      }
      offset += factor.degree;
    }
  } else {
    throw ParseError("unknown group family '" + name + "'");
  }

  return def;
}

GroupPtr builtin_family(std::string_view spec, std::size_t order_cap)
{
  auto def = family_definition(spec);
  return group_from_generators(def.degree, std::move(def.generators), order_cap);
}

} // namespace ssn::harness
