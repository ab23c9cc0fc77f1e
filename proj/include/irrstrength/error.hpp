#pragma once

#include <stdexcept>
#include <string>

namespace irrstrength {

// Raised when a value violates a precondition of a construction or query
// (undersized family, n = 0, graph with a component of order <= 2, ...).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the text/JSON readers on malformed or out-of-limit input.
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Exact division for closed-form label formulas. A remainder means the
// residue-class dispatch picked the wrong branch.
template <typename Int>
constexpr Int exact_div(Int num, Int den) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error("inexact division " + std::to_string(num) + "/" +
                           std::to_string(den));
  }
  return num / den;
}

template <typename Int>
constexpr Int ceil_div(Int num, Int den) {
  return (num + den - 1) / den;
}

}  // namespace detail
}  // namespace irrstrength
