#include "ssn/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "ssn/error.hpp"

namespace ssn
{

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw PreconditionError("image sequence is not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation result(degree());
  for (std::size_t i = 0; i < _images.size(); ++i)
    result._images[_images[i]] = static_cast<Point>(i);
  return result;
}

std::size_t Permutation::order() const
{
  std::size_t result = 1;
  for (auto const &cycle : cycles())
    result = std::lcm(result, cycle.size());
  return result;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (degree() != rhs.degree())
    throw PreconditionError("degree mismatch in permutation product");

  Permutation result;
  result._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    result._images[i] = rhs._images[_images[i]];
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(_images.size(), false);

  for (Point start = 0; start < _images.size(); ++start) {
    if (done[start])
      continue;

    std::vector<Point> cycle;
    for (Point x = start; !done[x]; x = _images[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const
{
  std::ostringstream out;
  for (auto const &cycle : cycles()) {
    if (cycle.size() < 2)
      continue;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      out << (i ? " " : "") << cycle[i] + 1;
    out << ')';
  }
  std::string text = out.str();
  return text.empty() ? "()" : text;
}

Permutation parse_permutation(std::string_view text, std::size_t degree)
{
  if (degree == 0)
    throw ParseError("degree must be positive");

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  bool in_cycle = false;
  bool any_cycle = false;
  std::vector<Point> cycle;

  auto close_cycle = [&] {
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    cycle.clear();
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];

    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (c == '(') {
      if (in_cycle)
        throw ParseError("nested '(' in cycle notation: " + std::string(text));
      in_cycle = true;
      any_cycle = true;
      ++pos;
    } else if (c == ')') {
      if (!in_cycle)
        throw ParseError("unmatched ')' in cycle notation: " + std::string(text));
      in_cycle = false;
      close_cycle();
      ++pos;
    } else if (c == ',') {
      if (!in_cycle)
        throw ParseError("',' outside of a cycle: " + std::string(text));
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_cycle)
        throw ParseError("point outside of a cycle: " + std::string(text));

      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree)
          break;
        ++pos;
      }
      if (value == 0 || value > degree) {
        throw ParseError("point out of range 1.." + std::to_string(degree) +
                         " in: " + std::string(text));
      }

      Point x = static_cast<Point>(value - 1);
      if (used[x]) {
        throw ParseError("point " + std::to_string(value) +
                         " repeated in: " + std::string(text));
      }
      used[x] = true;
      cycle.push_back(x);
    } else {
      throw ParseError(std::string("unexpected character '") + c +
                       "' in cycle notation: " + std::string(text));
    }
  }

  if (in_cycle)
    throw ParseError("unclosed '(' in cycle notation: " + std::string(text));
  if (!any_cycle)
    throw ParseError("empty permutation text (use \"()\" for the identity)");

  return Permutation(std::move(images));
}

std::vector<Permutation> parse_permutation_list(std::string_view text,
                                                std::size_t degree)
{
  std::vector<Permutation> result;

  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    bool blank = true;
    for (char c : piece) {
      if (!std::isspace(static_cast<unsigned char>(c)))
        blank = false;
    }
    if (!blank)
      result.push_back(parse_permutation(piece, degree));
    start = end + 1;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(')
      ++depth;
    else if (c == ')')
      --depth;
    else if ((c == ';' || c == ',') && depth == 0)
      flush(i);
  }
  flush(text.size());

  return result;
}

std::string format_permutation_list(std::span<Permutation const> perms)
{
  std::string result;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i)
      result += "; ";
    result += perms[i].to_string();
  }
  return result;
}

} // namespace ssn

std::size_t std::hash<ssn::Permutation>::operator()(
  ssn::Permutation const &perm) const noexcept
{
  std::size_t seed = perm.degree();
  for (ssn::Point x : perm.images())
    seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}
