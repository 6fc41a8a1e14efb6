#ifndef SSN_HARNESS_IO_HPP
#define SSN_HARNESS_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "ssn/harness/families.hpp"
#include "ssn/sigma.hpp"

namespace ssn::harness
{

// .grp: "degree: <n>" followed by "gen: <cycles>" lines, '#' comments.
GroupDefinition parse_group_text(std::string_view text);
std::string format_group_text(GroupDefinition const &def);

GroupDefinition load_group_definition(std::filesystem::path const &path);
GroupPtr load_group(std::filesystem::path const &path,
                    std::size_t order_cap = kDefaultOrderCap);
void save_group(std::filesystem::path const &path, GroupDefinition const &def);

// .sig: "block: p1 p2 ..." lines, '#' comments; remainder implicit.
SigmaPartition parse_partition_text(std::string_view text);
std::string format_partition_text(SigmaPartition const &sigma);

SigmaPartition load_partition(std::filesystem::path const &path);
void save_partition(std::filesystem::path const &path, SigmaPartition const &sigma);

std::string read_file(std::filesystem::path const &path);

} // namespace ssn::harness

#endif // SSN_HARNESS_IO_HPP
