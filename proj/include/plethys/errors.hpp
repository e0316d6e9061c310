#pragma once

#include <stdexcept>
#include <string>

namespace plethys {

/// Two series with different truncation degrees were combined.
class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A substitution or series would need infinitely many terms to reach a
/// fixed degree (the right-hand argument has a constant term).
class DivergentSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed user input: partitions, module specs, CLI arguments.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or closure exceeded one of its configured caps.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plethys
