#pragma once

#include <stdexcept>
#include <string>

namespace ids {

// A computation ran to completion and the inputs failed a mathematical
// requirement (not an integer distance set, degenerate triangle, point off
// the variety, ...). Maps to exit code 1 at the CLI.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: JSON, polynomial text, fixture files.
// Maps to exit code 2 at the CLI.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation called outside its precondition (mixed discriminants, wrong
// roster, zero denominator). Treated as a domain failure at the CLI.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ids
