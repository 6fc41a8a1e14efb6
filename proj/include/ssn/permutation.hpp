#ifndef SSN_PERMUTATION_HPP
#define SSN_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssn
{

using Point = unsigned;

// A bijection on {0, ..., degree - 1}. Products act on the right:
// x^(a * b) = (x^a)^b, so `a * b` applies a first.
class Permutation
{
public:
  Permutation() = default;

  // Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  // Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point x) const { return _images[x]; }
  std::span<Point const> images() const { return _images; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;

  Permutation operator*(Permutation const &rhs) const;

  std::vector<std::vector<Point>> cycles() const;

  // 1-based disjoint cycle notation, "()" for the identity.
  std::string to_string() const;

  auto operator<=>(Permutation const &) const = default;
  bool operator==(Permutation const &) const = default;

private:
  std::vector<Point> _images;
};

// Parses whitespace-tolerant 1-based disjoint cycle notation such as
// "(1 2 3)(4 5)" or "()". Points inside a cycle may also be separated by
// commas. Points not mentioned are fixed.
Permutation parse_permutation(std::string_view text, std::size_t degree);

// Parses a list of permutations separated by ';' or by top-level ','.
// An empty or blank string yields an empty list.
std::vector<Permutation> parse_permutation_list(std::string_view text,
                                                std::size_t degree);

std::string format_permutation_list(std::span<Permutation const> perms);

} // namespace ssn

template<>
struct std::hash<ssn::Permutation>
{
  std::size_t operator()(ssn::Permutation const &perm) const noexcept;
};

#endif // SSN_PERMUTATION_HPP
