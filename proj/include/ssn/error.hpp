#ifndef SSN_ERROR_HPP
#define SSN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssn
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (cycle notation, .grp / .sig files, family specs).
class ParseError : public Error
{
public:
  explicit ParseError(std::string const &what, std::size_t line = 0)
  : Error(line ? "line " + std::to_string(line) + ": " + what : what),
    _line(line)
  {}

  std::size_t line() const { return _line; }

private:
  std::size_t _line;
};

// An order or lattice cap was hit. Never silently truncated.
class CapExceeded : public Error
{
public:
  CapExceeded(std::string const &what, std::size_t partial)
  : Error(what + " (reached " + std::to_string(partial) + ")"),
    _partial(partial)
  {}

  std::size_t partial() const { return _partial; }

private:
  std::size_t _partial;
};

// Violated operation precondition (containment, parent mismatch, normality).
class PreconditionError : public Error
{
public:
  using Error::Error;
};

} // namespace ssn

#endif // SSN_ERROR_HPP
