#pragma once

#include <stdexcept>
#include <string>

namespace tjurina {

/// Precondition violated by the caller (bad index, zero divisor, wrong ambient...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The computation itself could not produce an answer: a truncation sequence
/// that never stabilized, a Hilbert function window that never settled,
/// a singularity that is not isolated.
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant broken; always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tjurina
