#pragma once

#include <stdexcept>
#include <string>

namespace looksay {

/// Malformed or out-of-alphabet input (bad digit, bad token, bad base).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside the domain where its result is proven
/// (e.g. full splitting of a string that violates the run bounds).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured search or work budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative numerical method ran out of iterations.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure: a hardcoded table disagrees with what the
/// dynamics actually produce.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace looksay
