#include "ssn/harness/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

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

struct KeyLine
{
  std::size_t number;
  std::string key;
  std::string value;
};

// Non-blank, comment-stripped "key: value" lines.
std::vector<KeyLine> key_lines(std::string_view text)
{
  std::vector<KeyLine> result;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'key: value'", number);
    result.push_back({number, std::string(trim(line.substr(0, colon))),
                      std::string(trim(line.substr(colon + 1)))});
  }
  return result;
}

} // namespace

std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GroupDefinition parse_group_text(std::string_view text)
{
  GroupDefinition def;
  bool have_degree = false;

  for (auto const &line : key_lines(text)) {
    if (line.key == "degree") {
      if (have_degree)
        throw ParseError("duplicate degree", line.number);
      if (line.value.empty() ||
          !std::all_of(line.value.begin(), line.value.end(), ::isdigit))
        throw ParseError("degree must be a positive integer", line.number);
      def.degree = std::stoul(line.value);
      if (def.degree == 0)
        throw ParseError("degree must be positive", line.number);
      have_degree = true;
    } else if (line.key == "gen") {
      if (!have_degree)
        throw ParseError("gen before degree", line.number);
      try {
        def.generators.push_back(parse_permutation(line.value, def.degree));
      } catch (ParseError const &e) {
        throw ParseError(e.what(), line.number);
      }
    } else {
      throw ParseError("unknown key '" + line.key + "'", line.number);
    }
  }

  if (!have_degree)
    throw ParseError("missing degree");
  return def;
}

std::string format_group_text(GroupDefinition const &def)
{
  std::string text = "degree: " + std::to_string(def.degree) + "\n";
  for (auto const &gen : def.generators)
    text += "gen: " + gen.to_string() + "\n";
  return text;
}

GroupDefinition load_group_definition(std::filesystem::path const &path)
{
  try {
    return parse_group_text(read_file(path));
  } catch (ParseError const &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

GroupPtr load_group(std::filesystem::path const &path, std::size_t order_cap)
{
  auto def = load_group_definition(path);
  return group_from_generators(def.degree, std::move(def.generators), order_cap);
}

void save_group(std::filesystem::path const &path, GroupDefinition const &def)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write " + path.string());
  out << format_group_text(def);
}

SigmaPartition parse_partition_text(std::string_view text)
{
  std::vector<PrimeSet> blocks;
  for (auto const &line : key_lines(text)) {
    if (line.key != "block")
      throw ParseError("unknown key '" + line.key + "'", line.number);

    PrimeSet block;
    std::istringstream in(line.value);
    std::string token;
    while (in >> token) {
      if (!std::all_of(token.begin(), token.end(), ::isdigit))
        throw ParseError("'" + token + "' is not a number", line.number);
      unsigned long p = std::stoul(token);
      if (!is_prime(p))
        throw ParseError(token + " is not prime", line.number);
      if (!block.insert(static_cast<unsigned>(p)).second)
        throw ParseError("prime " + token + " repeated in block", line.number);
    }
    if (block.empty())
      throw ParseError("empty block", line.number);
    for (auto const &earlier : blocks) {
      for (unsigned p : block) {
        if (earlier.contains(p))
          throw ParseError("prime " + std::to_string(p) + " already in another block",
                           line.number);
      }
    }
    blocks.push_back(std::move(block));
  }
  return SigmaPartition(std::move(blocks));
}

std::string format_partition_text(SigmaPartition const &sigma)
{
  std::string text;
  for (auto const &block : sigma.blocks()) {
    text += "block:";
    for (unsigned p : block)
      text += " " + std::to_string(p);
    text += "\n";
  }
  return text;
}

SigmaPartition load_partition(std::filesystem::path const &path)
{
  try {
    return parse_partition_text(read_file(path));
  } catch (ParseError const &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_partition(std::filesystem::path const &path, SigmaPartition const &sigma)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write " + path.string());
  out << format_partition_text(sigma);
}

} // namespace ssn::harness
